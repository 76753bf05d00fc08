#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yx/rmatrix.hpp"

using namespace yx;

TEST_CASE("build_R rejects poles") {
  Composition b3 = make_composition(AlgType::B, {1, 1, 1});
  CHECK_THROWS_AS(build_R(b3, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(build_R(b3, b3.kappa()), std::invalid_argument);
  CHECK_NOTHROW(build_R(b3, Rat(1)));
  // kappa = 2 for sp_2, so u = 2 is a pole there.
  Composition c2 = make_composition(AlgType::C, {2});
  CHECK_THROWS_AS(build_R(c2, Rat(2)), std::invalid_argument);
}

TEST_CASE("Yang-Baxter equation at fixed and random points") {
  Composition c4 = make_composition(AlgType::C, {4});
  // Note u - v must also avoid the poles; kappa = 3 here.
  CHECK(check_YBE(c4, Rat(5), Rat(1)));

  Composition b3 = make_composition(AlgType::B, {3});
  std::mt19937_64 rng(42);
  for (int s = 0; s < 20; ++s) {
    auto [u, v] = sampleYbePoint(b3, rng);
    CHECK(check_YBE(b3, u, v));
  }
}

TEST_CASE("YBE via the structural sampler on block compositions") {
  std::mt19937_64 rng(7);
  for (const Composition& c : {make_composition(AlgType::B, {2, 1, 2}),
                               make_composition(AlgType::C, {1, 2, 1})}) {
    for (int s = 0; s < 5; ++s) {
      auto [u, v] = sampleYbePoint(c, rng);
      CHECK(check_YBE(c, u, v));
    }
  }
}

TEST_CASE("block decomposition of R agrees with the flat R-matrix") {
  Composition b5 = make_composition(AlgType::B, {2, 1, 2});
  CHECK(check_block_R(b5, Rat(3)));
  CHECK(check_block_R(b5, Rat(-7, 2)));
  Composition c4 = make_composition(AlgType::C, {1, 2, 1});
  CHECK(check_block_R(c4, Rat(5)));
  // A flat composition makes the check a tautology; it must still pass.
  CHECK(check_block_R(flatComposition(b5), Rat(3)));
}

TEST_CASE("unitarity: R(u) R(-u) = (1 - 1/u^2) I") {
  // Probe points avoid u = +-kappa for every N in range (kappa <= 4 here,
  // so 9, 5 and 7/3 are always regular).
  const Rat pts[] = {Rat(9), Rat(5), Rat(7, 3)};
  std::vector<Composition> comps = {
      make_composition(AlgType::C, {2}), make_composition(AlgType::B, {3}),
      make_composition(AlgType::C, {4}), make_composition(AlgType::B, {5})};
  for (const Composition& c : comps) {
    for (const Rat& u : pts) {
      BTensor<Rat> prod = build_R(c, u) * build_R(c, -u);
      Rat scalar = Rat(1) - ratPow(u, -2);
      CHECK(isZero(prod - flat_I2(c).scaled(scalar)));
    }
  }
}
