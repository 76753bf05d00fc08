#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yx/series.hpp"

using namespace yx;

namespace {
TruncSeries<Rat> randomSeries(int ord, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  TruncSeries<Rat> s(ord);
  for (int r = 0; r <= ord; ++r) s.at(r) = Rat(d(rng));
  return s;
}
}  // namespace

TEST_CASE("shift of x u^{-1} is the geometric expansion of (u+c)^{-1}") {
  TruncSeries<Rat> f(4);
  f.at(1) = Rat(3);  // 3 u^{-1}
  const Rat c(5);
  TruncSeries<Rat> g = shift(f, c);
  CHECK(g.at(0) == Rat(0));
  CHECK(g.at(1) == Rat(3));
  CHECK(g.at(2) == Rat(-15));
  CHECK(g.at(3) == Rat(75));
  CHECK(g.at(4) == Rat(-375));
}

TEST_CASE("shift composes and fixes constants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries<Rat> f = randomSeries(6, rng);
    Rat a(trial - 4), b(2 * trial - 9, 3);
    TruncSeries<Rat> lhs = shift(shift(f, a), b);
    TruncSeries<Rat> rhs = shift(f, a + b);
    CHECK(isZero(lhs - rhs));
  }
  TruncSeries<Rat> konst(5);
  konst.at(0) = Rat(7);
  CHECK(isZero(shift(konst, Rat(9)) - konst));
}

TEST_CASE("shift is a ring homomorphism to order K") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries<Rat> f = randomSeries(6, rng), g = randomSeries(6, rng);
    const Rat c(trial, 2);
    CHECK(isZero(shift(f * g, c) - shift(f, c) * shift(g, c)));
  }
}

TEST_CASE("invert") {
  TruncSeries<Rat> f(5);
  f.at(0) = Rat(1);
  f.at(1) = Rat(1);  // 1 + u^{-1}
  TruncSeries<Rat> g = invert(f);
  for (int r = 0; r <= 5; ++r) CHECK(g.at(r) == Rat(r % 2 == 0 ? 1 : -1));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries<Rat> h = randomSeries(6, rng);
    h.at(0) = Rat(trial + 1);
    CHECK(isZero(h * invert(h) - TruncSeries<Rat>::one(6, Rat(1))));
    CHECK(isZero(invert(invert(h)) - h));
  }
  TruncSeries<Rat> zero0(4);
  CHECK_THROWS_AS(invert(zero0), SingularMatrix);
}

TEST_CASE("droppedBelow implements the ring accent") {
  TruncSeries<Rat> f(4);
  for (int r = 0; r <= 4; ++r) f.at(r) = Rat(r + 1);
  TruncSeries<Rat> g = f.droppedBelow(2);
  CHECK(g.at(0) == Rat(0));
  CHECK(g.at(1) == Rat(0));
  CHECK(g.at(2) == Rat(3));
  CHECK(g.at(4) == Rat(5));
}

TEST_CASE("MultiSeries window propagation under products") {
  // f with ord 4 in variable 0 and minimum inverse-power 1 (keys are u^{-e}).
  using MS = MultiSeries<Mat<Rat>>;
  const Mat<Rat> one = Mat<Rat>::identity(1, Rat(1));
  MS f;
  f.ord()[0] = 4;
  for (int r = 1; r <= 4; ++r) f.add(MExp{static_cast<std::int16_t>(r), 0, 0, 0}, one);
  MS prod = f * f;
  // ord(fg) = min(ord f + minexp g, ord g + minexp f) = 5.
  CHECK(prod.ord()[0] == 5);
  // Coefficients beyond the trusted order are dropped eagerly.
  for (const auto& [e, v] : prod.entries()) CHECK(e[0] <= 5);
  // Multiplying by the linear form u - v costs one trusted order in u and
  // introduces a positive power of v (key -1).
  MS cleared = mulLinearForm(f, 0, 1, Rat(0), one);
  CHECK(cleared.ord()[0] == 3);
  bool sawPositiveV = false;
  for (const auto& [e, v] : cleared.entries()) sawPositiveV |= e[1] == -1;
  CHECK(sawPositiveV);
}

TEST_CASE("clear_and_compare reports zero residuals and localized failures") {
  MultiSeries<Rat> f;
  f.ord()[0] = 4;
  f.ord()[1] = 4;
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s)
      f.add(MExp{static_cast<std::int16_t>(r), static_cast<std::int16_t>(s), 0, 0}, Rat(r * s));
  auto describe = [](const Rat& v) { return isZero(v) ? std::string() : toString(v); };
  CHECK(clear_and_compare(f, f, describe).ok);

  // A single flipped coefficient is pinpointed by exponent tuple.
  MultiSeries<Rat> g = f;
  g.add(MExp{2, 3, 0, 0}, Rat(1));
  CompareResult res = clear_and_compare(f, g, describe);
  CHECK_FALSE(res.ok);
  REQUIRE(res.failures.size() == 1);
  CHECK(res.failures[0].exponents[0] == 2);
  CHECK(res.failures[0].exponents[1] == 3);
  CHECK(res.window[0] == 4);
  CHECK(res.window[2] == -1);
}
