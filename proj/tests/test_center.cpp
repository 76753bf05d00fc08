#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yx/relations.hpp"

using namespace yx;

TEST_CASE("center suite: symbolic order 4 on entry-level compositions") {
  RunCtx ctx;
  for (const Composition& c :
       {make_composition(AlgType::B, {1, 1, 1}), make_composition(AlgType::C, {1, 1, 1, 1})}) {
    SymEngine eng(c, 4);
    auto reps = runSuite("center", eng, ctx, "symbolic", "center K=4");
    CHECK_FALSE(reps.empty());
    CHECK(allPass(reps));
    bool ranSomething = false;
    for (const auto& r : reps) ranSomething |= r.status == "pass";
    CHECK(ranSomething);
  }
}

TEST_CASE("drinfeld suite: symbolic order 4 on entry-level compositions") {
  RunCtx ctx;
  for (const Composition& c :
       {make_composition(AlgType::B, {1, 1, 1}), make_composition(AlgType::C, {1, 1, 1, 1})}) {
    SymEngine eng(c, 4);
    auto reps = runSuite("drinfeld", eng, ctx, "symbolic", "drinfeld K=4");
    CHECK_FALSE(reps.empty());
    CHECK(allPass(reps));
    bool ranSomething = false;
    for (const auto& r : reps) ranSomething |= r.status == "pass";
    CHECK(ranSomething);
  }
}

TEST_CASE("center suite: modular oracle verdict matches") {
  const std::uint64_t p = 2305843009213693951ULL;
  Composition c = make_composition(AlgType::B, {1, 1, 1});
  auto reps = runOracleSuite<Fp>("center", c, Rat(1), 2, 424242, p, "center oracle Fp");
  CHECK_FALSE(reps.empty());
  CHECK(allPass(reps));
}
