#ifndef YX_RELATIONS_HPP
#define YX_RELATIONS_HPP

// Data-driven relation catalog: every displayed identity of the block
// calculus is a named RelationSpec whose runner builds LHS/RHS as multi-leg
// block series (or exact matrices, under the oracle engines), clears the
// denominators, and compares on the certified window, quantifying over ALL
// admissible block indices of the given composition.

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "yx/oracle.hpp"
#include "yx/report.hpp"
#include "yx/rmatrix.hpp"
#include "yx/sym_engine.hpp"

namespace yx {

struct RunCtx {
  std::uint64_t seed = 20240915;
  int samples = 20;  // sample count for point-sampled structural checks
};

struct Check {
  std::string label;
  CompareResult res;
};

template <class E>
using Runner = std::function<std::vector<Check>(const E&, const RunCtx&)>;

struct RelationSpec {
  std::string id;
  std::string anchor;  // characteristic formula fragment of the identity
  std::string suite;
  std::function<bool(const Composition&)> admits;
  Runner<SymEngine> sym;
  Runner<OracleEngine<Rat>> oracleQ;
  Runner<OracleEngine<Fp>> oracleP;
};

const std::vector<RelationSpec>& relationCatalog();
std::vector<std::string> suiteNames();
std::vector<const RelationSpec*> suiteSpecs(const std::string& suite);
const RelationSpec* findSpec(const std::string& id);

// Free-standing constant-tensor checks (used by the structural catalog
// entries, the CLI `ybe` subcommand, and the acceptance gate).
std::vector<Check> structuralChecks(const Composition& comp, std::uint64_t seed);
std::vector<Check> ybeChecks(const Composition& comp, std::uint64_t seed, int samples);

template <class E>
const Runner<E>& runnerFor(const RelationSpec& s);
template <>
inline const Runner<SymEngine>& runnerFor<SymEngine>(const RelationSpec& s) { return s.sym; }
template <>
inline const Runner<OracleEngine<Rat>>& runnerFor<OracleEngine<Rat>>(const RelationSpec& s) {
  return s.oracleQ;
}
template <>
inline const Runner<OracleEngine<Fp>>& runnerFor<OracleEngine<Fp>>(const RelationSpec& s) {
  return s.oracleP;
}

inline void aggregateWindow(std::array<int, 4>& acc, const std::array<int, 4>& w) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (w[k] < 0) continue;
    acc[k] = acc[k] < 0 ? w[k] : std::min(acc[k], w[k]);
  }
}

template <class E>
RelationReport runRelation(const RelationSpec& spec, const E& eng, const RunCtx& ctx,
                           const std::string& engineName, const std::string& config) {
  RelationReport rep;
  rep.id = spec.id;
  rep.anchor = spec.anchor;
  rep.engine = engineName;
  rep.config = config;
  const auto t0 = std::chrono::steady_clock::now();
  const Runner<E>& run = runnerFor<E>(spec);
  if (!spec.admits(eng.comp()) || !run) {
    rep.status = "skip";
    return rep;
  }
  std::vector<Check> checks = run(eng, ctx);
  constexpr std::size_t kMaxFailures = 8;
  bool ok = true;
  for (const Check& c : checks) {
    aggregateWindow(rep.window, c.res.window);
    if (c.res.ok) continue;
    ok = false;
    for (const CompareFailure& f : c.res.failures) {
      if (rep.failures.size() >= kMaxFailures) break;
      std::string exps;
      for (int e : f.exponents) exps += (exps.empty() ? "" : ",") + std::to_string(e);
      rep.failures.push_back(c.label + " @ exps(" + exps + "): " + f.what);
    }
    if (c.res.failures.empty() && rep.failures.size() < kMaxFailures)
      rep.failures.push_back(c.label + ": residual nonzero");
  }
  rep.status = checks.empty() ? "skip" : (ok ? "pass" : "fail");
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

template <class E>
std::vector<RelationReport> runSuite(const std::string& suite, const E& eng, const RunCtx& ctx,
                                     const std::string& engineName, const std::string& config) {
  std::vector<RelationReport> out;
  for (const RelationSpec* s : suiteSpecs(suite))
    out.push_back(runRelation(*s, eng, ctx, engineName, config));
  return out;
}

// Oracle driver: evaluates a suite at `samples` random 4-tuples of exact
// points, resampling a tuple whenever it collides with a pole or a singular
// Gauss pivot, and merges the per-point reports (pass = pass at every point).
inline Rat samplePoint(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(3, 997);
  return ratFrom(num(rng), den(rng));
}

inline void mergeReports(std::vector<RelationReport>& acc, const std::vector<RelationReport>& more) {
  if (acc.empty()) {
    acc = more;
    return;
  }
  if (acc.size() != more.size()) throw std::logic_error("mergeReports: shape mismatch");
  for (std::size_t i = 0; i < acc.size(); ++i) {
    RelationReport& a = acc[i];
    const RelationReport& b = more[i];
    if (a.id != b.id) throw std::logic_error("mergeReports: id mismatch");
    a.millis += b.millis;
    if (b.status == "fail") {
      a.status = "fail";
      for (const auto& f : b.failures)
        if (a.failures.size() < 8) a.failures.push_back(f);
    }
  }
}

template <class F>
std::vector<RelationReport> runOracleSuite(const std::string& suite, const Composition& comp,
                                           const Rat& c, int samples, std::uint64_t seed,
                                           std::uint64_t prime, const std::string& config) {
  std::mt19937_64 rng(seed);
  RunCtx ctx;
  ctx.seed = seed;
  ctx.samples = 5;
  std::vector<RelationReport> merged;
  for (int s = 0; s < samples; ++s) {
    bool done = false;
    for (int attempt = 0; attempt < 16 && !done; ++attempt) {
      std::array<Rat, 4> pts{samplePoint(rng), samplePoint(rng), samplePoint(rng),
                             samplePoint(rng)};
      try {
        OracleEngine<F> eng(comp, c, pts, prime);
        std::vector<RelationReport> reps = runSuite(suite, eng, ctx, "oracle", config);
        mergeReports(merged, reps);
        done = true;
      } catch (const BadPoint&) {
      } catch (const SingularMatrix&) {
      } catch (const BadPrime&) {
      }
    }
    if (!done) throw std::runtime_error("runOracleSuite: could not find non-singular points");
  }
  return merged;
}

inline bool allPass(const std::vector<RelationReport>& reps) {
  for (const auto& r : reps)
    if (r.status == "fail") return false;
  return true;
}

}  // namespace yx

#endif  // YX_RELATIONS_HPP
