#ifndef YX_RELATIONS_IMPL_HPP
#define YX_RELATIONS_IMPL_HPP

// Shared helpers for the relation catalog: engine-generic check builders,
// the block-RTT template reused by the flat and parabolic suites, and the
// Serre-sum builder.  Every relation runner is written once against the
// duck-typed engine API and instantiated for the symbolic engine and both
// oracle engines.

#include <algorithm>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "yx/relations.hpp"

namespace yx {
namespace relimpl {

// ---------------------------------------------------------------------------
// Admissibility predicates.
// ---------------------------------------------------------------------------

inline bool anyComp(const Composition&) { return true; }
inline bool oddM3(const Composition& c) { return c.M % 2 == 1 && c.M >= 3; }
inline bool evenM(const Composition& c) { return c.M % 2 == 0; }
inline bool typeB(const Composition& c) { return c.type == AlgType::B; }
inline bool typeC(const Composition& c) { return c.type == AlgType::C; }
inline bool atLeastM3(const Composition& c) { return c.M >= 3; }

// Middle-block sign defect: eps_i^a eps_{nu_a+1-i}^a, constant on block a.
inline int flipSign(const Composition& c, int a) {
  return (c.type == AlgType::C && c.M % 2 == 1 && a == (c.M + 1) / 2) ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Spec factories: one generic callable becomes all three engine runners.
// ---------------------------------------------------------------------------

template <class Fn>
RelationSpec spec(std::string id, std::string anchor, std::string suite,
                  std::function<bool(const Composition&)> admits, Fn fn) {
  RelationSpec s;
  s.id = std::move(id);
  s.anchor = std::move(anchor);
  s.suite = std::move(suite);
  s.admits = std::move(admits);
  s.sym = [fn](const SymEngine& g, const RunCtx& c) { return fn(g, c); };
  s.oracleQ = [fn](const OracleEngine<Rat>& g, const RunCtx& c) { return fn(g, c); };
  s.oracleP = [fn](const OracleEngine<Fp>& g, const RunCtx& c) { return fn(g, c); };
  return s;
}

template <class Fn>
RelationSpec specSym(std::string id, std::string anchor, std::string suite,
                     std::function<bool(const Composition&)> admits, Fn fn) {
  RelationSpec s;
  s.id = std::move(id);
  s.anchor = std::move(anchor);
  s.suite = std::move(suite);
  s.admits = std::move(admits);
  s.sym = [fn](const SymEngine& g, const RunCtx& c) { return fn(g, c); };
  return s;
}

// ---------------------------------------------------------------------------
// Small algebraic helpers.
// ---------------------------------------------------------------------------

template <class V>
V comm(const V& a, const V& b) {
  return a * b - b * a;
}

template <class V>
V acomm(const V& a, const V& b) {
  return a * b + b * a;
}

// Caps the per-variable trusted order of a symbolic value (used by the Serre
// sums, whose conclusion is degree-bounded); a no-op for oracle values.
inline SymEngine::Val truncVal(const SymEngine&, const SymEngine::Val& v, int cap) {
  SymEngine::Val r;
  for (std::size_t k = 0; k < 4; ++k) {
    const int o = v.ord()[k];
    r.ord()[k] = (o < kOrdInf && o > cap) ? cap : o;
  }
  for (const auto& [e, t] : v.entries()) r.add(e, t);
  return r;
}
template <class F>
typename OracleEngine<F>::Val truncVal(const OracleEngine<F>&,
                                       const typename OracleEngine<F>::Val& v, int) {
  return v;
}

// ---------------------------------------------------------------------------
// Check builders.
// ---------------------------------------------------------------------------

template <class E>
Check eqc(const E& g, std::string label, const typename E::Val& lhs,
          const typename E::Val& rhs) {
  return Check{std::move(label), g.check(lhs, rhs)};
}

template <class E>
Check zc(const E& g, std::string label, const typename E::Val& lhs) {
  return eqc(g, std::move(label), lhs, typename E::Val{});
}

template <class E>
std::array<int, 4> matWindowOf(const E& g) {
  if constexpr (std::is_same_v<E, SymEngine>)
    return {g.order(), -1, -1, -1};
  else
    return {-1, -1, -1, -1};
}

template <class E>
Check matEq(const E& g, std::string label, const Mat<typename E::MV>& lhs,
            const Mat<typename E::MV>& rhs) {
  CompareResult res;
  res.window = matWindowOf(g);
  for (std::string& w : g.checkMatZero(lhs - rhs)) {
    res.ok = false;
    CompareFailure f;
    f.what = std::move(w);
    res.failures.push_back(std::move(f));
  }
  return Check{std::move(label), std::move(res)};
}

template <class E>
Check mvEq(const E& g, std::string label, const typename E::MV& lhs,
           const typename E::MV& rhs) {
  Mat<typename E::MV> a(1, 1), b(1, 1);
  a.at(0, 0) = lhs;
  b.at(0, 0) = rhs;
  return matEq(g, std::move(label), a, b);
}

// Left-multiplies every entry by a (possibly noncommutative) scalar.
template <class MV>
Mat<MV> matLeftScale(const MV& s, const Mat<MV>& m) {
  Mat<MV> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = s * m.at(i, j);
  return r;
}

// ---------------------------------------------------------------------------
// Full generator matrix and its transpose in the matrix view.
// ---------------------------------------------------------------------------

template <class E>
Mat<typename E::MV> fullT(const E& g, const Rat& sh = Rat(0)) {
  const Composition& c = g.comp();
  Mat<typename E::MV> t(c.N, c.N);
  for (int a = 1; a <= c.M; ++a)
    for (int b = 1; b <= c.M; ++b) {
      const Mat<typename E::MV> blk = g.matT(a, b, sh);
      for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j)
          t.at(c.offset(a) + i, c.offset(b) + j) = blk.at(i, j);
    }
  return t;
}

// (T^t)_ij = eps_i eps_j T_{j', i'}.
template <class E>
Mat<typename E::MV> fullTt(const E& g, const Rat& sh = Rat(0)) {
  const Composition& c = g.comp();
  const Mat<typename E::MV> t = fullT(g, sh);
  Mat<typename E::MV> r(c.N, c.N);
  for (int i = 1; i <= c.N; ++i)
    for (int j = 1; j <= c.N; ++j) {
      typename E::MV v = t.at(c.mirror(j) - 1, c.mirror(i) - 1);
      if (c.eps(i) * c.eps(j) < 0) v = -v;
      r.at(i - 1, j - 1) = v;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Serre sum: sum over permutations sigma of p copies of X_a (one per leg and
// variable) of the nested commutator with X_b on the last leg.
// ---------------------------------------------------------------------------

template <class E>
void serreChecks(const E& g, int a, int b, int p, bool isE, std::vector<Check>& out) {
  using V = typename E::Val;
  const int L = p + 1;
  std::vector<V> fac;
  for (int k = 0; k < p; ++k)
    fac.push_back(truncVal(g, isE ? g.E(L, k, k, a, a + 1) : g.F(L, k, k, a + 1, a), 3));
  const V B = truncVal(g, isE ? g.E(L, p, p, b, b + 1) : g.F(L, p, p, b + 1, b), 3);
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  V total;
  do {
    V x = B;
    for (int k = p - 1; k >= 0; --k)
      x = comm(fac[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])], x);
    total += x;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.push_back(zc(g,
                   std::string(isE ? "serreE" : "serreF") + "(a=" + std::to_string(a) +
                       ",b=" + std::to_string(b) + ",p=" + std::to_string(p) + ")",
                   total));
}

// ---------------------------------------------------------------------------
// Cleared block-RTT relation over a (sub)composition, with the blocks given
// either by T itself or by the parabolic images psi_p(T).
// ---------------------------------------------------------------------------

template <class E>
void blockRttChecks(const E& g, const Composition& sub, int p, const Rat& kap, bool usePsi,
                    std::vector<Check>& out) {
  using V = typename E::Val;
  auto Tb = [&](int a, int b, int leg) -> V {
    return usePsi ? g.psiT(2, leg, leg, p, a, b) : g.T(2, leg, leg, a, b);
  };
  const std::string tag = usePsi ? "psiRTT(p=" + std::to_string(p) + ")" : "blockRTT";
  for (int a = 1; a <= sub.M; ++a)
    for (int b = 1; b <= sub.M; ++b)
      for (int c = 1; c <= sub.M; ++c)
        for (int d = 1; d <= sub.M; ++d) {
          V lhs = g.mulLin(g.mulLin(comm(Tb(a, b, 0), Tb(c, d, 1)), 0, 1, Rat(0)), 0, 1, kap);
          V pterm = g.P(2, 0, 1, a, c, &sub) * Tb(c, b, 0) * Tb(a, d, 1) -
                    Tb(c, b, 1) * Tb(a, d, 0) * g.P(2, 0, 1, d, b, &sub);
          V qterm;
          if (a == sub.blockMirror(c))
            for (int r = 1; r <= sub.M; ++r)
              qterm += g.Q(2, 0, 1, a, r, &sub) * Tb(r, b, 0) * Tb(sub.blockMirror(r), d, 1);
          if (b == sub.blockMirror(d))
            for (int r = 1; r <= sub.M; ++r)
              qterm -= Tb(c, sub.blockMirror(r), 1) * Tb(a, r, 0) * g.Q(2, 0, 1, r, b, &sub);
          V rhs = g.mulLin(pterm, 0, 1, kap) - g.mulLin(qterm, 0, 1, Rat(0));
          out.push_back(eqc(g,
                            tag + "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + "," + std::to_string(d) + ")",
                            lhs, rhs));
        }
}

// ---------------------------------------------------------------------------
// Per-suite catalog contributions (one translation unit each).
// ---------------------------------------------------------------------------

void addStructural(std::vector<RelationSpec>& out);
void addRtt(std::vector<RelationSpec>& out);
void addTypeA(std::vector<RelationSpec>& out);
void addOdd(std::vector<RelationSpec>& out);
void addEven(std::vector<RelationSpec>& out);
void addEmbedding(std::vector<RelationSpec>& out);
void addTranspose(std::vector<RelationSpec>& out);
void addCenter(std::vector<RelationSpec>& out);
void addDrinfeld(std::vector<RelationSpec>& out);

// Constant-tensor sub-checks of the structural suite (defined with
// structuralChecks in relations.cpp).
std::vector<Check> ppChecks(const Composition& comp);
std::vector<Check> qqChecks(const Composition& comp);
std::vector<Check> pqChecks(const Composition& comp);
std::vector<Check> trsChecks(const Composition& comp);
std::vector<Check> apqChecks(const Composition& comp, std::uint64_t seed);
std::vector<Check> unitarityChecks(const Composition& comp, std::uint64_t seed);
std::vector<Check> blockRChecks(const Composition& comp, std::uint64_t seed);

}  // namespace relimpl
}  // namespace yx

#endif  // YX_RELATIONS_IMPL_HPP
