#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yx/tensor.hpp"

using namespace yx;

namespace {
Mat<Rat> randomMat(int r, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  Mat<Rat> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng));
  return m;
}

// Places a plain block matrix on one leg of a 2-leg tensor.
BTensor<Rat> onLeg(const Mat<Rat>& m, int leg) {
  std::vector<Leg> legs(2);
  legs[static_cast<std::size_t>(leg)] = Leg{m.rows(), m.cols()};
  BTensor<Rat> t(legs);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!isZero(m.at(i, j))) t.add(idxSet(0, leg, i + 1, j + 1), m.at(i, j));
  return t;
}
}  // namespace

TEST_CASE("Q_11 for C:(1,1) is e11 (x) e11") {
  Composition c = make_composition(AlgType::C, {1, 1});
  BTensor<Rat> q = build_Q(c, 1, 1, Rat(1));
  CHECK(q.entries().size() == 1);
  CHECK(q.entries().begin()->first == idxSet(idxSet(0, 0, 1, 1), 1, 1, 1));
  CHECK(q.entries().begin()->second == Rat(1));
}

TEST_CASE("P_ab P_ba = I_ab exhaustively on B:(2,1,2)") {
  Composition c = make_composition(AlgType::B, {2, 1, 2});
  for (int a = 1; a <= c.M; ++a)
    for (int b = 1; b <= c.M; ++b) {
      auto prod = build_P(c, a, b, Rat(1)) * build_P(c, b, a, Rat(1));
      CHECK(isZero(prod - build_I(c, a, b, Rat(1))));
    }
}

TEST_CASE("Q_ab Q_bc = nu_b Q_ac on C:(2,2) and C:(1,2,1)") {
  for (const Composition& c :
       {make_composition(AlgType::C, {2, 2}), make_composition(AlgType::C, {1, 2, 1})}) {
    for (int a = 1; a <= c.M; ++a)
      for (int b = 1; b <= c.M; ++b)
        for (int d = 1; d <= c.M; ++d) {
          // Admissibility: Q_ab has column labels (b', ...); the product
          // Q_ab Q_bd contracts on matching block dimensions.
          auto q1 = build_Q(c, a, b, Rat(1));
          auto q2 = build_Q(c, b, d, Rat(1));
          auto prod = q1 * q2;
          auto rhs = build_Q(c, a, d, Rat(1)).scaled(Rat(c.part(b)));
          CHECK(isZero(prod - rhs));
        }
  }
}

TEST_CASE("transpose identities P^{t2} = Q, Q^{t1} = P on B:(2,1,2)") {
  Composition c = make_composition(AlgType::B, {2, 1, 2});
  for (int a = 1; a <= c.M; ++a)
    for (int b = 1; b <= c.M; ++b) {
      // P_ab^{t2}: leg 1 carries block labels (b, a).
      auto lhs = transpose_t(c, build_P(c, a, b, Rat(1)), 1, b, a);
      CHECK(isZero(lhs - build_Q(c, a, b, Rat(1))));
      auto lhs2 = transpose_t(c, build_Q(c, a, b, Rat(1)), 0, a, b);
      CHECK(isZero(lhs2 - build_P(c, b, a, Rat(1))));
    }
}

TEST_CASE("negative transpose sign in type C odd M with a middle label") {
  Composition c = make_composition(AlgType::C, {1, 2, 1});
  const int mid = 2;
  // P_ab^{t1} = -Q_ba exactly when the transposed label pair crosses the
  // middle block an odd number of times.
  for (int a = 1; a <= c.M; ++a) {
    auto lhs = transpose_t(c, build_P(c, a, mid, Rat(1)), 0, a, mid);
    int sign = ((a == mid) == (mid == mid)) ? 1 : -1;  // both middle: sign +
    if (a != mid) sign = -1;
    auto rhs = build_Q(c, mid, a, Rat(1)).scaled(Rat(sign));
    CHECK(isZero(lhs - rhs));
  }
}

TEST_CASE("t o t is sigma times the identity map") {
  Composition c = make_composition(AlgType::C, {1, 2, 1});
  for (int a = 1; a <= c.M; ++a)
    for (int b = 1; b <= c.M; ++b) {
      const bool amid = a == 2, bmid = b == 2;
      const int sigma = ((amid ? 1 : 0) + (bmid ? 1 : 0)) % 2 == 1 ? -1 : 1;
      for (int i = 1; i <= c.part(a); ++i)
        for (int j = 1; j <= c.part(b); ++j) {
          Mat<Rat> unit(c.part(a), c.part(b));
          unit.at(i - 1, j - 1) = Rat(1);
          Mat<Rat> twice = transpose_t(c, transpose_t(c, unit, a, b), b, a);
          CHECK(isZero(twice - unit.scaled(Rat(sigma))));
        }
    }
  // No sign anywhere in type B.
  Composition b5 = make_composition(AlgType::B, {2, 1, 2});
  std::mt19937_64 rng(7);
  for (int a = 1; a <= b5.M; ++a)
    for (int b = 1; b <= b5.M; ++b) {
      Mat<Rat> m = randomMat(b5.part(a), b5.part(b), rng);
      CHECK(isZero(transpose_t(b5, transpose_t(b5, m, a, b), b, a) - m));
    }
}

TEST_CASE("A-P-Q lemma identities with random matrices") {
  std::mt19937_64 rng(20240915);
  for (const Composition& comp : {make_composition(AlgType::B, {2, 1, 2}),
                                  make_composition(AlgType::C, {2, 2})}) {
    for (int cc = 1; cc <= comp.M; ++cc)
      for (int a = 1; a <= comp.M; ++a)
        for (int b = 1; b <= comp.M; ++b) {
          if (comp.part(a) != comp.part(b)) continue;  // A is nu_a x nu_b with labels (a,b)
          Mat<Rat> A = randomMat(comp.part(a), comp.part(b), rng);
          // P_ca A^{[1]} = A^{[2]} P_cb  (A on leg 0 vs leg 1).
          auto lhs = build_P(comp, cc, a, Rat(1)) * onLeg(A, 0);
          auto rhs = onLeg(A, 1) * build_P(comp, cc, b, Rat(1));
          CHECK(isZero(lhs - rhs));
          // Q_ca A^{[1]} = Q_cb A^{t,[2]}.
          auto ql = build_Q(comp, cc, a, Rat(1)) * onLeg(A, 0);
          auto qr = build_Q(comp, cc, b, Rat(1)) * onLeg(transpose_t(comp, A, a, b), 1);
          CHECK(isZero(ql - qr));
          // Q_ca A^{[1]} Q_ad = tr(A) Q_cd  (needs a = b so A is square-labeled).
          if (a == b) {
            for (int d = 1; d <= comp.M; ++d) {
              auto prod = build_Q(comp, cc, a, Rat(1)) * onLeg(A, 0) * build_Q(comp, a, d, Rat(1));
              auto want = build_Q(comp, cc, d, Rat(1)).scaled(A.trace());
              CHECK(isZero(prod - want));
            }
          }
        }
  }
}

TEST_CASE("embedding of all identity blocks is the identity") {
  Composition c = make_composition(AlgType::B, {2, 1, 2});
  Mat<Rat> acc(c.N, c.N);
  for (int a = 1; a <= c.M; ++a)
    embed_block(c, Mat<Rat>::identity(c.part(a), Rat(1)), a, a, acc);
  CHECK(acc == Mat<Rat>::identity(c.N, Rat(1)));
}

TEST_CASE("block unit product rule (e_ij x e_ab)(e_kl x e_cd)") {
  Composition c = make_composition(AlgType::B, {2, 1, 2});
  auto unitAt = [&](int a, int b, int i, int j) {
    Mat<Rat> m(c.part(a), c.part(b));
    m.at(i - 1, j - 1) = Rat(1);
    Mat<Rat> full(c.N, c.N);
    embed_block(c, m, a, b, full);
    return full;
  };
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> blk(1, c.M);
  for (int trial = 0; trial < 50; ++trial) {
    int a = blk(rng), b = blk(rng), cb = blk(rng), d = blk(rng);
    std::uniform_int_distribution<int> ia(1, c.part(a)), jb(1, c.part(b)),
        kc(1, c.part(cb)), ld(1, c.part(d));
    int i = ia(rng), j = jb(rng), k = kc(rng), l = ld(rng);
    Mat<Rat> prod = unitAt(a, b, i, j) * unitAt(cb, d, k, l);
    Mat<Rat> want(c.N, c.N);
    if (b == cb && k == j) want = unitAt(a, d, i, l);
    CHECK(isZero(prod - want));
  }
}

TEST_CASE("leg_place respects Kronecker arrangement") {
  Composition c = make_composition(AlgType::C, {2, 2});
  auto p = build_P(c, 1, 2, Rat(1));
  auto q = build_Q(c, 1, 2, Rat(1));
  // Disjoint legs commute.
  auto a = leg_place(p, {0, 1}, 4) * leg_place(q, {2, 3}, 4);
  auto b = leg_place(q, {2, 3}, 4) * leg_place(p, {0, 1}, 4);
  CHECK(isZero(a - b));
  CHECK_THROWS_AS(leg_place(p, {0}, 3), std::invalid_argument);
}
