#ifndef YX_CLI_IMPL_HPP
#define YX_CLI_IMPL_HPP

// CLI driver logic, separated from flag parsing so tests can call it
// directly: configuration validation, suite orchestration over the chosen
// engines, canonical report ordering, and the JSON emitters for the
// `gauss` and `table` subcommands.

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "yx/relations.hpp"

namespace yx {
namespace cli {

// 62-bit primes used by the prime-field oracle passes.
inline constexpr std::uint64_t kPrimes[2] = {2305843009213693951ULL, 9223372036854775783ULL};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // verify | center | gauss | table | ybe
  std::string algebra = "B";
  int rank = 1;
  std::string composition = "flat";  // "flat" | "drinfeld" | "a,b,c"
  int order = 4;
  std::string suite = "all";
  std::string engine = "symbolic";  // symbolic | oracle | both
  std::string param = "0";          // oracle evaluation parameter c
  std::uint64_t seed = 20240915;
  int samples = 5;
  std::string reportPath;
  bool json = false;
};

inline Rat parseRat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return ratFrom(std::stol(s));
    return ratFrom(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ConfigError("param must be an integer or a fraction n/d: " + s);
  }
}

inline Composition buildComposition(const RunConfig& cfg) {
  if (cfg.algebra != "B" && cfg.algebra != "C")
    throw ConfigError("algebra must be B or C");
  if (cfg.rank < 1) throw ConfigError("rank must be positive");
  const AlgType type = cfg.algebra == "B" ? AlgType::B : AlgType::C;
  const int N = type == AlgType::B ? 2 * cfg.rank + 1 : 2 * cfg.rank;
  std::vector<int> parts;
  if (cfg.composition == "flat") {
    parts = {N};
  } else if (cfg.composition == "drinfeld") {
    parts.assign(static_cast<std::size_t>(N), 1);
  } else {
    std::stringstream ss(cfg.composition);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        parts.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ConfigError("composition must be a comma-separated list of parts: " + tok);
      }
    }
  }
  Composition comp;
  try {
    comp = make_composition(type, parts);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (comp.N != N)
    throw ConfigError("composition parts must sum to N = " + std::to_string(N) +
                      " for algebra " + cfg.algebra + " of rank " + std::to_string(cfg.rank));
  if (comp.N > 8) throw ConfigError("total size N must be at most 8");
  return comp;
}

inline std::string configLabel(const Composition& comp, const RunConfig& cfg) {
  return comp.describe() + ";K=" + std::to_string(cfg.order) + ";c=" + cfg.param +
         ";seed=" + std::to_string(cfg.seed);
}

inline void sortReports(std::vector<RelationReport>& reps) {
  std::stable_sort(reps.begin(), reps.end(),
                   [](const RelationReport& a, const RelationReport& b) {
                     if (a.id != b.id) return a.id < b.id;
                     if (a.engine != b.engine) return a.engine < b.engine;
                     return a.config < b.config;
                   });
}

inline void emitReports(const std::vector<RelationReport>& reps, const RunConfig& cfg,
                        std::ostream& out) {
  if (cfg.json) {
    out << toJson(reps).dump(2) << "\n";
  } else {
    for (const auto& r : reps) {
      out << r.id << " [" << r.status << "] engine=" << r.engine << " " << r.millis << "ms\n";
      for (const auto& f : r.failures) out << "    " << f << "\n";
    }
  }
  if (!cfg.reportPath.empty()) {
    std::ofstream f(cfg.reportPath);
    if (!f) throw ConfigError("cannot open report path " + cfg.reportPath);
    f << toJson(reps).dump(2) << "\n";
  }
}

// Suites whose cleared relations divide out degree-2 denominators need at
// least three certified orders to be non-vacuous.
inline bool needsOrder3(const std::string& suite) { return suite != "structural"; }

inline std::vector<RelationReport> runVerify(const Composition& comp, const RunConfig& cfg) {
  RunCtx ctx;
  ctx.seed = cfg.seed;
  ctx.samples = cfg.samples > 0 ? cfg.samples : 20;
  const std::string label = configLabel(comp, cfg);
  std::vector<RelationReport> reps;
  const bool sym = cfg.engine == "symbolic" || cfg.engine == "both";
  const bool ora = cfg.engine == "oracle" || cfg.engine == "both";
  if (!sym && !ora) throw ConfigError("engine must be symbolic, oracle, or both");
  if (sym) {
    SymEngine eng(comp, cfg.order);
    auto r = runSuite(cfg.suite, eng, ctx, "symbolic", label);
    reps.insert(reps.end(), r.begin(), r.end());
  }
  if (ora) {
    const Rat c = parseRat(cfg.param);
    const int samples = cfg.samples > 0 ? cfg.samples : 5;
    auto rq = runOracleSuite<Rat>(cfg.suite, comp, c, samples, cfg.seed, 0, label + ";field=Q");
    reps.insert(reps.end(), rq.begin(), rq.end());
    for (std::uint64_t p : kPrimes) {
      auto rp = runOracleSuite<Fp>(cfg.suite, comp, c, samples, cfg.seed, p,
                                   label + ";field=F" + std::to_string(p));
      reps.insert(reps.end(), rp.begin(), rp.end());
    }
  }
  sortReports(reps);
  return reps;
}

inline RelationReport reportFromChecks(const std::string& id, const std::string& anchor,
                                       const std::string& config, std::vector<Check> checks) {
  RelationReport rep;
  rep.id = id;
  rep.anchor = anchor;
  rep.engine = "exact";
  rep.config = config;
  bool ok = true;
  for (const Check& c : checks) {
    aggregateWindow(rep.window, c.res.window);
    if (c.res.ok) continue;
    ok = false;
    if (rep.failures.size() < 8) rep.failures.push_back(c.label + ": residual nonzero");
  }
  rep.status = ok ? "pass" : "fail";
  return rep;
}

inline nlohmann::json seriesJson(SymEngine& g, const TruncSeries<Elem>& ts) {
  nlohmann::json a = nlohmann::json::array();
  for (int r = 0; r <= g.order(); ++r) a.push_back(g.alg().nf(ts.at(r)).str());
  return a;
}

inline nlohmann::json matJson(SymEngine& g, const Mat<TruncSeries<Elem>>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(seriesJson(g, m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json gaussJson(const Composition& comp, int order) {
  SymEngine g(comp, order);
  nlohmann::json j;
  j["composition"] = comp.describe();
  j["order"] = order;
  nlohmann::json D = nlohmann::json::array(), E = nlohmann::json::object(),
                 F = nlohmann::json::object();
  for (int a = 1; a <= comp.M; ++a) D.push_back(matJson(g, g.matD(a)));
  for (int a = 1; a <= comp.M; ++a)
    for (int b = a + 1; b <= comp.M; ++b) {
      const std::string key = std::to_string(a) + "," + std::to_string(b);
      E[key] = matJson(g, g.matE(a, b));
      F[key] = matJson(g, g.matF(b, a));
    }
  j["D"] = D;
  j["E"] = E;
  j["F"] = F;
  return j;
}

inline nlohmann::json tableJson(const Composition& comp, int maxDeg) {
  AlgebraCtx alg(comp);
  nlohmann::json a = nlohmann::json::array();
  for (int r = 1; r < maxDeg; ++r)
    for (int s = 1; r + s <= maxDeg; ++s)
      for (int i = 1; i <= comp.N; ++i)
        for (int j = 1; j <= comp.N; ++j)
          for (int k = 1; k <= comp.N; ++k)
            for (int l = 1; l <= comp.N; ++l)
              a.push_back(nlohmann::json{
                  {"r", r},
                  {"i", i},
                  {"j", j},
                  {"s", s},
                  {"k", k},
                  {"l", l},
                  {"bracket", alg.commutator(genOf(r, i, j), genOf(s, k, l)).str()}});
  return a;
}

inline int runCli(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Composition comp = buildComposition(cfg);
    if (cfg.command == "verify" || cfg.command == "center") {
      RunConfig c = cfg;
      if (cfg.command == "center") c.suite = "center";
      std::vector<std::string> names = suiteNames();
      if (std::find(names.begin(), names.end(), c.suite) == names.end())
        throw ConfigError("unknown suite " + c.suite);
      if (needsOrder3(c.suite) && c.order < 3)
        throw ConfigError("order K must be at least 3 for cleared-denominator suites");
      auto reps = runVerify(comp, c);
      emitReports(reps, c, out);
      return allPass(reps) ? 0 : 1;
    }
    if (cfg.command == "ybe") {
      const int samples = cfg.samples > 0 ? cfg.samples : 20;
      std::vector<RelationReport> reps{reportFromChecks(
          "struct.ybe", "R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v)",
          configLabel(comp, cfg), ybeChecks(comp, cfg.seed, samples))};
      emitReports(reps, cfg, out);
      return allPass(reps) ? 0 : 1;
    }
    if (cfg.command == "gauss") {
      if (cfg.order < 1) throw ConfigError("order must be positive");
      out << gaussJson(comp, cfg.order).dump(2) << "\n";
      return 0;
    }
    if (cfg.command == "table") {
      out << tableJson(comp, std::min(cfg.order, 4)).dump(2) << "\n";
      return 0;
    }
    throw ConfigError("unknown command " + cfg.command);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace yx

#endif  // YX_CLI_IMPL_HPP
