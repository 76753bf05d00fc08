// Relation catalog: assembly, suite lookup, and the structural / flat-RTT
// suites.  The remaining suites live in sibling translation units.

#include "relations_impl.hpp"

#include <random>

namespace yx {

using namespace relimpl;

namespace {

// Constant-tensor equality over exact rationals (no variables, no window).
Check cc(std::string label, const BTensor<Rat>& lhs, const BTensor<Rat>& rhs) {
  BTensor<Rat> res = lhs - rhs;
  res.prune();
  CompareResult r;
  r.window = {-1, -1, -1, -1};
  if (!res.structurallyZero()) {
    r.ok = false;
    CompareFailure f;
    f.what = "nonzero constant-tensor residual";
    r.failures.push_back(std::move(f));
  }
  return Check{std::move(label), std::move(r)};
}

Check bc(std::string label, bool ok, const std::string& why) {
  CompareResult r;
  r.window = {-1, -1, -1, -1};
  if (!ok) {
    r.ok = false;
    CompareFailure f;
    f.what = why;
    r.failures.push_back(std::move(f));
  }
  return Check{std::move(label), std::move(r)};
}

BTensor<Rat> matOnLeg(const Mat<Rat>& m, int leg) {
  std::vector<Leg> legs(2);
  legs[static_cast<std::size_t>(leg)] = Leg{m.rows(), m.cols()};
  BTensor<Rat> t(legs);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!isZero(m.at(i, j))) t.add(idxSet(0, leg, i + 1, j + 1), m.at(i, j));
  return t;
}

std::string ab(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
std::string abc(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

namespace relimpl {

std::vector<Check> ppChecks(const Composition& comp) {
  std::vector<Check> out;
  for (int a = 1; a <= comp.M; ++a)
    for (int b = 1; b <= comp.M; ++b)
      out.push_back(cc("PP" + ab(a, b),
                       build_P(comp, a, b, Rat(1)) * build_P(comp, b, a, Rat(1)),
                       build_I(comp, a, b, Rat(1))));
  return out;
}

std::vector<Check> qqChecks(const Composition& comp) {
  std::vector<Check> out;
  for (int a = 1; a <= comp.M; ++a)
    for (int b = 1; b <= comp.M; ++b)
      for (int c = 1; c <= comp.M; ++c)
        out.push_back(cc("QQ" + abc(a, b, c),
                         build_Q(comp, a, b, Rat(1)) * build_Q(comp, b, c, Rat(1)),
                         build_Q(comp, a, c, Rat(1)).scaled(Rat(comp.part(b)))));
  return out;
}

std::vector<Check> pqChecks(const Composition& comp) {
  std::vector<Check> out;
  for (int a = 1; a <= comp.M; ++a)
    for (int b = 1; b <= comp.M; ++b) {
      const Rat s(flipSign(comp, a));
      out.push_back(cc("PQ" + ab(a, b),
                       build_P(comp, a, a, Rat(1)) * build_Q(comp, a, b, Rat(1)),
                       build_Q(comp, a, b, Rat(1)).scaled(s)));
      out.push_back(cc("QP" + ab(b, a),
                       build_Q(comp, b, a, Rat(1)) * build_P(comp, a, a, Rat(1)),
                       build_Q(comp, b, a, Rat(1)).scaled(s)));
    }
  return out;
}

std::vector<Check> trsChecks(const Composition& comp) {
  std::vector<Check> out;
  for (int a = 1; a <= comp.M; ++a)
    for (int b = 1; b <= comp.M; ++b) {
      const Rat s(flipSign(comp, a) * flipSign(comp, b));
      const BTensor<Rat> P = build_P(comp, a, b, Rat(1));
      const BTensor<Rat> Q = build_Q(comp, a, b, Rat(1));
      out.push_back(cc("Pt1" + ab(a, b), transpose_t(comp, P, 0, a, b),
                       build_Q(comp, b, a, Rat(1)).scaled(s)));
      out.push_back(cc("Pt2" + ab(a, b), transpose_t(comp, P, 1, b, a),
                       build_Q(comp, a, b, Rat(1))));
      out.push_back(cc("Qt1" + ab(a, b), transpose_t(comp, Q, 0, a, b),
                       build_P(comp, b, a, Rat(1))));
      out.push_back(cc("Qt2" + ab(a, b), transpose_t(comp, Q, 1, a, b),
                       build_P(comp, a, b, Rat(1)).scaled(s)));
    }
  return out;
}

std::vector<Check> apqChecks(const Composition& comp, std::uint64_t seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  for (int a = 1; a <= comp.M; ++a)
    for (int b = 1; b <= comp.M; ++b) {
      const int na = comp.part(a), nb = comp.part(b);
      Mat<Rat> A(na, nb);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) A.at(i, j) = sampleRat(rng, 9);
      A.at(0, 0) += Rat(1);  // keep A nonzero
      const Mat<Rat> At = transpose_t(comp, A, a, b);
      const BTensor<Rat> A1 = matOnLeg(A, 0), A2 = matOnLeg(A, 1);
      const BTensor<Rat> At1 = matOnLeg(At, 0), At2 = matOnLeg(At, 1);
      const Rat s(flipSign(comp, a) * flipSign(comp, b));
      auto P = [&](int x, int y) { return build_P(comp, x, y, Rat(1)); };
      auto Q = [&](int x, int y) { return build_Q(comp, x, y, Rat(1)); };
      for (int c = 1; c <= comp.M; ++c) {
        out.push_back(cc("PA1" + abc(a, b, c), P(c, a) * A1, A2 * P(c, b)));
        out.push_back(cc("PA2" + abc(a, b, c), P(a, c) * A2, A1 * P(b, c)));
        out.push_back(cc("QA1" + abc(a, b, c), Q(c, a) * A1, Q(c, b) * At2));
        out.push_back(cc("A1Q" + abc(a, b, c), A1 * Q(b, c), At2 * Q(a, c)));
        out.push_back(cc("QA2" + abc(a, b, c), Q(c, a) * A2, (Q(c, b) * At1).scaled(s)));
        out.push_back(cc("A2Q" + abc(a, b, c), A2 * Q(b, c), (At1 * Q(a, c)).scaled(s)));
      }
      if (na == nb) {
        const Rat trA = A.trace();
        for (int c = 1; c <= comp.M; ++c)
          for (int d = 1; d <= comp.M; ++d) {
            out.push_back(cc("QAQ1" + ab(a, b) + abc(c, d, 1),
                             Q(c, a) * A1 * Q(a, d), Q(c, d).scaled(trA)));
            out.push_back(cc("QAQ2" + ab(a, b) + abc(c, d, 2),
                             Q(c, a) * A2 * Q(a, d), Q(c, d).scaled(trA)));
          }
      }
    }
  return out;
}

std::vector<Check> unitarityChecks(const Composition& comp, std::uint64_t seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed + 1);
  const Rat k = comp.kappa();
  for (int s = 0; s < 5; ++s) {
    Rat u = sampleRat(rng);
    while (isZero(u) || isZero(u - k) || isZero(u + k)) u = sampleRat(rng);
    out.push_back(cc("unitarity @ sample " + std::to_string(s),
                     build_R(comp, u) * build_R(comp, -u),
                     flat_I2(comp).scaled(Rat(1) - Rat(1) / (u * u))));
  }
  return out;
}

std::vector<Check> blockRChecks(const Composition& comp, std::uint64_t seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed + 2);
  const Rat k = comp.kappa();
  for (int s = 0; s < 5; ++s) {
    Rat u = sampleRat(rng);
    while (isZero(u) || isZero(u - k)) u = sampleRat(rng);
    out.push_back(bc("blockR @ sample " + std::to_string(s), check_block_R(comp, u),
                     "block-assembled R differs from flat R"));
  }
  return out;
}

void addStructural(std::vector<RelationSpec>& out) {
  out.push_back(spec("struct.pp", "P_ab P_ba = I_ab", "structural", anyComp,
                     [](const auto& g, const RunCtx&) { return ppChecks(g.comp()); }));
  out.push_back(spec("struct.qq", "Q_ab Q_bc = nu_b Q_ac", "structural", anyComp,
                     [](const auto& g, const RunCtx&) { return qqChecks(g.comp()); }));
  out.push_back(spec("struct.pq", "P_aa Q_ab = +/- Q_ab", "structural", anyComp,
                     [](const auto& g, const RunCtx&) { return pqChecks(g.comp()); }));
  out.push_back(spec("struct.transpose", "P_ab^{t_1} = +/- Q_ba, Q_ab^{t_1} = P_ba",
                     "structural", anyComp,
                     [](const auto& g, const RunCtx&) { return trsChecks(g.comp()); }));
  out.push_back(spec("struct.apq", "P_ca A^[1] = A^[2] P_cb and Q A-exchange", "structural",
                     anyComp, [](const auto& g, const RunCtx& ctx) {
                       return apqChecks(g.comp(), ctx.seed);
                     }));
  out.push_back(spec("struct.unitarity", "R(u) R(-u) = (1 - u^{-2}) I", "structural", anyComp,
                     [](const auto& g, const RunCtx& ctx) {
                       return unitarityChecks(g.comp(), ctx.seed);
                     }));
  out.push_back(spec("struct.blockR", "sum of block tensors reassembles R(u)", "structural",
                     anyComp, [](const auto& g, const RunCtx& ctx) {
                       return blockRChecks(g.comp(), ctx.seed);
                     }));
  out.push_back(spec("struct.ybe", "R12 R13 R23 = R23 R13 R12", "structural", anyComp,
                     [](const auto& g, const RunCtx& ctx) {
                       return ybeChecks(g.comp(), ctx.seed, ctx.samples);
                     }));
}

void addRtt(std::vector<RelationSpec>& out) {
  out.push_back(spec(
      "rtt.series", "(u-v)(u-v-kappa)[t_ij(u), t_kl(v)] cleared defining relation", "rtt",
      anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        const Rat kap = g.kappaRel();
        using V = std::decay_t<decltype(g.Tentry(1, 0, 0, 1, 1))>;
        for (int i = 1; i <= c.N; ++i)
          for (int j = 1; j <= c.N; ++j)
            for (int k = 1; k <= c.N; ++k)
              for (int l = 1; l <= c.N; ++l) {
                V lhs = g.mulLin(
                    g.mulLin(comm(g.Tentry(1, 0, 0, i, j), g.Tentry(1, 0, 1, k, l)), 0, 1,
                             Rat(0)),
                    0, 1, kap);
                V A = g.Tentry(1, 0, 0, k, j) * g.Tentry(1, 0, 1, i, l) -
                      g.Tentry(1, 0, 1, k, j) * g.Tentry(1, 0, 0, i, l);
                V B;
                if (i == c.mirror(k))
                  for (int p = 1; p <= c.N; ++p)
                    B += g.scale(g.Tentry(1, 0, 0, p, j) * g.Tentry(1, 0, 1, c.mirror(p), l),
                                 Rat(c.eps(i) * c.eps(p)));
                if (j == c.mirror(l))
                  for (int p = 1; p <= c.N; ++p)
                    B -= g.scale(g.Tentry(1, 0, 1, k, c.mirror(p)) * g.Tentry(1, 0, 0, i, p),
                                 Rat(c.eps(j) * c.eps(p)));
                V rhs = g.mulLin(A, 0, 1, kap) - g.mulLin(B, 0, 1, Rat(0));
                checks.push_back(eqc(g,
                                     "defining(" + std::to_string(i) + "," + std::to_string(j) +
                                         "," + std::to_string(k) + "," + std::to_string(l) + ")",
                                     lhs, rhs));
              }
        return checks;
      }));

  out.push_back(spec(
      "rtt.flat", "R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v)", "rtt", anyComp,
      [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition flat = flatComposition(g.comp());
        const Rat kap = g.kappaRel();
        using V = std::decay_t<decltype(g.Tflat(2, 0, 0))>;
        V P = g.P(2, 0, 1, 1, 1, &flat);
        V Q = g.Q(2, 0, 1, 1, 1, &flat);
        V A = g.Tflat(2, 0, 0) * g.Tflat(2, 1, 1);
        V Bv = g.Tflat(2, 1, 1) * g.Tflat(2, 0, 0);
        V lhs = g.mulLin(g.mulLin(A, 0, 1, Rat(0)), 0, 1, kap) - g.mulLin(P * A, 0, 1, kap) +
                g.mulLin(Q * A, 0, 1, Rat(0));
        V rhs = g.mulLin(g.mulLin(Bv, 0, 1, Rat(0)), 0, 1, kap) -
                g.mulLin(Bv * P, 0, 1, kap) + g.mulLin(Bv * Q, 0, 1, Rat(0));
        checks.push_back(eqc(g, "flatRTT", lhs, rhs));
        return checks;
      }));

  out.push_back(spec("rtt.block", "[T_ab(u), T_cd(v)] block RTT with P and Q exchange terms",
                     "rtt", anyComp, [](const auto& g, const RunCtx&) {
                       std::vector<Check> checks;
                       blockRttChecks(g, g.comp(), 0, g.kappaRel(), false, checks);
                       return checks;
                     }));

  out.push_back(spec(
      "trt.inverse", "[T_ab(u), Ttil_cd(v)] mixed relation for the inverse matrix", "rtt",
      anyComp, [](const auto& g, const RunCtx&) {
        std::vector<Check> checks;
        const Composition& c = g.comp();
        const Rat kap = g.kappaRel();
        using V = std::decay_t<decltype(g.T(2, 0, 0, 1, 1))>;
        for (int a = 1; a <= c.M; ++a)
          for (int b = 1; b <= c.M; ++b)
            for (int cc2 = 1; cc2 <= c.M; ++cc2)
              for (int d = 1; d <= c.M; ++d) {
                V lhs = g.mulLin(
                    g.mulLin(comm(g.T(2, 0, 0, a, b), g.Ttil(2, 1, 1, cc2, d)), 0, 1, Rat(0)),
                    0, 1, kap);
                V pterm;
                if (cc2 == b)
                  for (int r = 1; r <= c.M; ++r)
                    pterm += g.T(2, 0, 0, a, r) * g.P(2, 0, 1, r, b) * g.Ttil(2, 1, 1, r, d);
                if (a == d)
                  for (int r = 1; r <= c.M; ++r)
                    pterm -= g.Ttil(2, 1, 1, cc2, r) * g.P(2, 0, 1, a, r) * g.T(2, 0, 0, r, b);
                V qterm = g.Ttil(2, 1, 1, cc2, c.blockMirror(a)) *
                              g.Q(2, 0, 1, a, c.blockMirror(d)) *
                              g.T(2, 0, 0, c.blockMirror(d), b) -
                          g.T(2, 0, 0, a, c.blockMirror(cc2)) *
                              g.Q(2, 0, 1, c.blockMirror(cc2), b) *
                              g.Ttil(2, 1, 1, c.blockMirror(b), d);
                V rhs = g.mulLin(pterm, 0, 1, kap) + g.mulLin(qterm, 0, 1, Rat(0));
                checks.push_back(eqc(g,
                                     "TtilT(" + std::to_string(a) + "," + std::to_string(b) +
                                         "," + std::to_string(cc2) + "," + std::to_string(d) +
                                         ")",
                                     lhs, rhs));
              }
        return checks;
      }));
}

}  // namespace relimpl

// ---------------------------------------------------------------------------
// Public catalog interface.
// ---------------------------------------------------------------------------

std::vector<Check> structuralChecks(const Composition& comp, std::uint64_t seed) {
  std::vector<Check> out;
  for (auto part : {relimpl::ppChecks(comp), relimpl::qqChecks(comp), relimpl::pqChecks(comp),
                    relimpl::trsChecks(comp), relimpl::apqChecks(comp, seed),
                    relimpl::unitarityChecks(comp, seed), relimpl::blockRChecks(comp, seed)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<Check> ybeChecks(const Composition& comp, std::uint64_t seed, int samples) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    auto [u, v] = sampleYbePoint(comp, rng);
    CompareResult r;
    r.window = {-1, -1, -1, -1};
    if (!check_YBE(comp, u, v)) {
      r.ok = false;
      CompareFailure f;
      f.what = "YBE residual nonzero at u=" + toString(u) + ", v=" + toString(v);
      r.failures.push_back(std::move(f));
    }
    out.push_back(Check{"YBE @ sample " + std::to_string(s), std::move(r)});
  }
  return out;
}

const std::vector<RelationSpec>& relationCatalog() {
  static const std::vector<RelationSpec> catalog = [] {
    std::vector<RelationSpec> specs;
    relimpl::addStructural(specs);
    relimpl::addRtt(specs);
    relimpl::addTypeA(specs);
    relimpl::addOdd(specs);
    relimpl::addEven(specs);
    relimpl::addEmbedding(specs);
    relimpl::addTranspose(specs);
    relimpl::addCenter(specs);
    relimpl::addDrinfeld(specs);
    return specs;
  }();
  return catalog;
}

std::vector<std::string> suiteNames() {
  return {"structural", "rtt",       "typeA",  "odd",      "even",
          "embedding",  "transpose", "center", "drinfeld", "all"};
}

std::vector<const RelationSpec*> suiteSpecs(const std::string& suite) {
  std::vector<const RelationSpec*> out;
  bool known = suite == "all";
  for (const RelationSpec& s : relationCatalog()) {
    if (s.suite == suite) known = true;
    if (suite == "all" || s.suite == suite) out.push_back(&s);
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

const RelationSpec* findSpec(const std::string& id) {
  for (const RelationSpec& s : relationCatalog())
    if (s.id == id) return &s;
  return nullptr;
}

}  // namespace yx
