#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "yx/relations.hpp"

using namespace yx;

TEST_CASE("catalog sanity: suites known, ids unique, anchors present") {
  std::set<std::string> suites;
  for (const std::string& s : suiteNames()) suites.insert(s);
  CHECK(suites.count("rtt") == 1);
  CHECK(suites.count("all") == 1);
  std::set<std::string> ids;
  for (const RelationSpec& s : relationCatalog()) {
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.anchor.empty());
    CHECK(suites.count(s.suite) == 1);
    CHECK(bool(s.sym));
  }
  CHECK(suiteSpecs("all").size() == relationCatalog().size());
  CHECK_THROWS_AS(suiteSpecs("bogus"), std::invalid_argument);
  CHECK(findSpec("rtt.flat") != nullptr);
  CHECK(findSpec("no.such.id") == nullptr);
}

TEST_CASE("structural checks pass on a spread of compositions") {
  for (const Composition& c :
       {make_composition(AlgType::B, {3}), make_composition(AlgType::C, {4}),
        make_composition(AlgType::B, {2, 1, 2}), make_composition(AlgType::C, {1, 2, 1}),
        make_composition(AlgType::C, {2, 2})}) {
    for (const Check& chk : structuralChecks(c, 20240915)) CHECK(chk.res.ok);
  }
}

TEST_CASE("YBE point checks pass on both types") {
  for (const Composition& c :
       {make_composition(AlgType::B, {1, 1, 1}), make_composition(AlgType::C, {2})}) {
    for (const Check& chk : ybeChecks(c, 7, 5)) CHECK(chk.res.ok);
  }
}

TEST_CASE("symbolic rtt suite on flat o_3 at order 4") {
  Composition c = make_composition(AlgType::B, {3});
  SymEngine eng(c, 4);
  RunCtx ctx;
  auto reps = runSuite("rtt", eng, ctx, "symbolic", "B:(3) K=4");
  CHECK_FALSE(reps.empty());
  CHECK(allPass(reps));
  for (const auto& r : reps) {
    CHECK(r.engine == "symbolic");
    if (r.status == "pass") CHECK(r.failures.empty());
  }
}

TEST_CASE("inadmissible specs report skip, not pass") {
  // The even-M family is vacuous on an odd-M composition.
  Composition c = make_composition(AlgType::B, {1, 1, 1});
  SymEngine eng(c, 3);
  RunCtx ctx;
  for (const auto& r : runSuite("even", eng, ctx, "symbolic", "B:(1,1,1) K=3"))
    CHECK(r.status == "skip");
}

TEST_CASE("oracle suites agree with the symbolic verdict on rtt") {
  Composition c = make_composition(AlgType::B, {3});
  auto q = runOracleSuite<Rat>("rtt", c, Rat(1), 2, 99, 0, "B:(3) oracle Q");
  CHECK_FALSE(q.empty());
  CHECK(allPass(q));
  const std::uint64_t p = 9223372036854775783ULL;
  auto m = runOracleSuite<Fp>("rtt", c, Rat(1), 2, 99, p, "B:(3) oracle Fp");
  CHECK(allPass(m));
  REQUIRE(q.size() == m.size());
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(q[i].status == m[i].status);
}

TEST_CASE("mergeReports keeps failures sticky and checks shape") {
  RelationReport a;
  a.id = "x";
  a.status = "pass";
  RelationReport b = a;
  b.status = "fail";
  b.failures = {"boom"};
  std::vector<RelationReport> acc{a};
  mergeReports(acc, {b});
  CHECK(acc[0].status == "fail");
  REQUIRE(acc[0].failures.size() == 1);
  mergeReports(acc, {a});  // later pass does not overwrite the failure
  CHECK(acc[0].status == "fail");
  RelationReport other;
  other.id = "y";
  std::vector<RelationReport> wrong{other};
  CHECK_THROWS_AS(mergeReports(wrong, {a}), std::logic_error);
  CHECK_THROWS_AS(mergeReports(acc, std::vector<RelationReport>{}), std::logic_error);
}
