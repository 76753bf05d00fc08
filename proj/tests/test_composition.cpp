#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yx/composition.hpp"

using namespace yx;

TEST_CASE("derived constants for C:(2,2)") {
  Composition c = make_composition(AlgType::C, {2, 2});
  CHECK(c.N == 4);
  CHECK(c.M == 2);
  CHECK(c.kappa() == Rat(3));
  CHECK(c.kappaA(1) == Rat(3));
  CHECK(c.kappaA(2) == Rat(1));
  CHECK(c.offset(2) == 2);
}

TEST_CASE("derived constants for B:(2,1,2)") {
  Composition c = make_composition(AlgType::B, {2, 1, 2});
  CHECK(c.N == 5);
  CHECK(c.kappa() == Rat(3, 2));
  CHECK(c.kappaA(2) == Rat(-1, 2));
  CHECK(c.part(2) == 1);
  CHECK(c.blockMirror(1) == 3);
  CHECK(c.mirror(2) == 4);
}

TEST_CASE("parity and symmetry violations are rejected") {
  CHECK_THROWS_WITH_AS(make_composition(AlgType::C, {1, 1, 1}),
                       "type C requires even N", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_composition(AlgType::B, {2, 2}),
                       "type B requires odd N", std::invalid_argument);
  CHECK_THROWS_AS(make_composition(AlgType::B, {2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_composition(AlgType::B, {}), std::invalid_argument);
  CHECK_NOTHROW(make_composition(AlgType::C, {1, 1, 1, 1}));
  CHECK_NOTHROW(make_composition(AlgType::C, {1, 2, 1}));
}

TEST_CASE("global signs eps_i") {
  Composition b = make_composition(AlgType::B, {3});
  for (int i = 1; i <= 3; ++i) CHECK(b.eps(i) == 1);
  Composition c = make_composition(AlgType::C, {4});
  CHECK(c.eps(1) == 1);
  CHECK(c.eps(2) == 1);
  CHECK(c.eps(3) == -1);
  CHECK(c.eps(4) == -1);
}

TEST_CASE("block signs eps_i^a") {
  Composition b = make_composition(AlgType::B, {2, 1, 2});
  for (int a = 1; a <= 3; ++a)
    for (int i = 1; i <= b.part(a); ++i) CHECK(b.epsBlock(a, i) == 1);

  Composition codd = make_composition(AlgType::C, {1, 2, 1});
  CHECK(codd.epsBlock(2, 1) == 1);
  CHECK(codd.epsBlock(2, 2) == -1);
  CHECK(codd.epsBlock(1, 1) == 1);
  CHECK(codd.epsBlock(3, 1) == -1);

  Composition cev = make_composition(AlgType::C, {2, 2});
  CHECK(cev.epsBlock(1, 1) == 1);
  CHECK(cev.epsBlock(2, 1) == -1);
  CHECK(cev.epsBlock(2, 2) == -1);
}

TEST_CASE("block signs refine the global signs") {
  for (const Composition& c : {make_composition(AlgType::B, {2, 1, 2}),
                               make_composition(AlgType::C, {1, 2, 1}),
                               make_composition(AlgType::C, {1, 1, 1, 1})}) {
    for (int a = 1; a <= c.M; ++a)
      for (int i = 1; i <= c.part(a); ++i)
        CHECK(c.epsBlock(a, i) == c.eps(c.offset(a) + i));
  }
}

TEST_CASE("sub-composition and flat composition") {
  Composition c = make_composition(AlgType::C, {1, 2, 2, 1});
  Composition s = c.sub(1);
  CHECK(s.M == 2);
  CHECK(s.part(1) == 2);
  CHECK(s.N == 4);
  CHECK_THROWS_AS(c.sub(2), std::invalid_argument);
  Composition f = flatComposition(c);
  CHECK(f.M == 1);
  CHECK(f.N == 6);
  CHECK(f.kappa() == c.kappa());
}
