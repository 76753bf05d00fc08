#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yx/algebra.hpp"
#include "yx/gauss.hpp"
#include "yx/oracle.hpp"

using namespace yx;

namespace {
// Exact numeric T-blocks from the evaluation representation at point u0.
// The value ring is CM = Mat<Rat>: each algebra element is an N x N matrix.
using CM = Mat<Rat>;
struct NumSetup {
  Composition comp;
  OracleEngine<Rat> eng;
  Rat u0;
  NumSetup(Composition c, const Rat& cp, const Rat& u)
      : comp(c), eng(comp, cp, {u, u + 1, u + 2, u + 3}), u0(u) {}
  BlockFn<CM> blocks() const {
    return [this](int a, int b) { return eng.T_blockAt(a, b, u0); };
  }
  CM one() const { return eng.oneCM(); }
};
}  // namespace

TEST_CASE("quasideterminant spot-check against sequential elimination") {
  NumSetup s(make_composition(AlgType::B, {2, 1, 2}), Rat(3), Rat(5));
  GaussDecomp<CM> g(s.blocks(), s.comp.nu, s.one());
  for (int a = 1; a <= s.comp.M; ++a) {
    Mat<CM> q = quasidet(s.blocks(), s.comp.nu, a, s.one());
    CHECK(isZero(q - g.D(a)));
  }
}

TEST_CASE("numeric F D E roundtrip reproduces every block of T") {
  for (auto&& [type, parts] : {std::pair{AlgType::B, std::vector<int>{2, 1, 2}},
                               std::pair{AlgType::C, std::vector<int>{1, 2, 1}}}) {
    NumSetup s(make_composition(type, parts), Rat(2), Rat(7));
    GaussDecomp<CM> g(s.blocks(), s.comp.nu, s.one());
    for (int a = 1; a <= s.comp.M; ++a)
      for (int b = 1; b <= s.comp.M; ++b)
        CHECK(isZero(g.psiBlock(0, a, b) - s.eng.T_blockAt(a, b, s.u0)));
  }
}

TEST_CASE("refine_diag: D_a = D_a^- H_a D_a^+ with unitriangular factors") {
  // u0 = 7 keeps every entry-level pivot invertible (u0 - c - kappa = 1).
  NumSetup s(make_composition(AlgType::C, {2, 2}), Rat(3), Rat(7));
  GaussDecomp<CM> g(s.blocks(), s.comp.nu, s.one());
  const CM zero(s.comp.N, s.comp.N);
  for (int a = 1; a <= 2; ++a) {
    RefinedDiag<CM> r = refine_diag(g.D(a), s.one());
    Mat<CM> H(2, 2);
    H.at(0, 0) = r.h[0];
    H.at(1, 1) = r.h[1];
    H.at(0, 1) = zero;
    H.at(1, 0) = zero;
    CHECK(isZero(r.minus * H * r.plus - g.D(a)));
    CHECK(isZero(r.minus.at(0, 0) - s.one()));
    CHECK(isZero(r.plus.at(1, 1) - s.one()));
    CHECK(isZero(r.minus.at(0, 1)));
    CHECK(isZero(r.plus.at(1, 0)));
  }
}

TEST_CASE("Drinfeld series from the entry-level decomposition") {
  Composition comp = make_composition(AlgType::B, {1, 1, 1});
  OracleEngine<Rat> eng(comp, Rat(3), {Rat(5), Rat(6), Rat(7), Rat(8)});
  const GaussDecomp<CM>& g = eng.entryGaussAt(Rat(5));
  DrinfeldSeries<CM> d = drinfeld_extract(g, comp.N);
  REQUIRE(d.h.size() == 2);
  REQUIRE(d.e.size() == 1);
  // For the all-ones partition each h_i equals the scalar quasideterminant.
  BlockFn<CM> entries = [&](int i, int j) {
    Mat<CM> m(1, 1);
    m.at(0, 0) = eng.tAt(i, j, Rat(5));
    return m;
  };
  for (int i = 1; i <= 2; ++i) {
    Mat<CM> q = quasidet(entries, onesPartition(comp.N), i, eng.oneCM());
    CHECK(isZero(q.at(0, 0) - d.h[static_cast<std::size_t>(i - 1)]));
  }
  // Wrong-arity decomposition is rejected.
  NumSetup s(make_composition(AlgType::B, {2, 1, 2}), Rat(3), Rat(5));
  GaussDecomp<CM> coarse(s.blocks(), s.comp.nu, s.one());
  CHECK_THROWS_AS(drinfeld_extract(coarse, s.comp.N), std::invalid_argument);
}

TEST_CASE("symbolic F D E roundtrip over the free algebra, order 4") {
  Composition comp = make_composition(AlgType::B, {1, 1, 1});
  AlgebraCtx ctx(comp);
  const int K = 4;
  using V = TruncSeries<Elem>;
  const V oneV = V::one(K, Elem::fromRat(Rat(1)));
  BlockFn<V> blocks = [&](int a, int b) {
    Mat<V> m(1, 1);
    V s(K);
    if (a == b) s.at(0) = Elem::fromRat(Rat(1));
    for (int r = 1; r <= K; ++r) s.at(r) = Elem::gen(r, a, b);
    m.at(0, 0) = s;
    return m;
  };
  GaussDecomp<V> g(blocks, onesPartition(comp.N), oneV);
  for (int a = 1; a <= comp.N; ++a)
    for (int b = 1; b <= comp.N; ++b) {
      Mat<V> diff = g.psiBlock(0, a, b) - blocks(a, b);
      const V& d = diff.at(0, 0);
      for (int r = 0; r <= K; ++r) CHECK(ctx.isZeroNf(d.at(r)));
    }
}
