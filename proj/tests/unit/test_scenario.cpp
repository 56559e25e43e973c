#include "fixtures.hpp"

#include "orbisym/catalog.hpp"
#include "orbisym/errors.hpp"
#include "orbisym/perm_group.hpp"
#include "orbisym/scenario.hpp"

#include <doctest.h>

using namespace orbisym;

namespace {

EdgeScenario orbifold28_edge() {
  const auto cases = load_catalog(builtin_catalog_text());
  return std::get<EdgeScenario>(find_case(cases, "orbifold-28-edge").scenario);
}

DashedArcScenario orbifold28_dashed() {
  const Presentation p = fixtures::orbifold28();
  return {p, 21, p.parse("y"), p.parse("x*z"), {{p.parse("y"), true}, {p.parse("x*z"), false}}};
}

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("orbifold 28 edge") {
    const ScenarioResult r = evaluate_edge_scenario(orbifold28_edge());
    CHECK(r.surfaces == std::set<SurfaceType>{{true, 0, 12}, {false, 6, 6}});
    REQUIRE(r.per_pattern.size() == 4);
    CHECK(r.per_pattern[0].pattern == "G1");
    CHECK(r.per_pattern[0].index == 12);
    CHECK(r.per_pattern[1].index == 12);
    CHECK(r.per_pattern[2].index == 6);
    CHECK(r.per_pattern[3].index == 6);
    CHECK(r.per_pattern[0].orientable);
    CHECK_FALSE(r.per_pattern[2].orientable);
  }

  TEST_CASE("whole group as boundary subgroup gives one boundary component") {
    const Presentation p = fixtures::orbifold28();
    const EdgeScenario s{p, 4, {{"all", p.parse_list("x, y, z"), OrientabilityRule::always()}}};
    const ScenarioResult r = evaluate_edge_scenario(s);
    CHECK(r.surfaces == std::set<SurfaceType>{{true, 2, 1}});
  }

  TEST_CASE("bad encodings abort the scenario") {
    const Presentation p = fixtures::orbifold28();
    const EdgeScenario parity{p, 5, {{"all", p.parse_list("x, y, z"), OrientabilityRule::always()}}};
    CHECK_THROWS_AS(evaluate_edge_scenario(parity), ParityError);
    const EdgeScenario negative{p, 5, {{"trivial", {Word{}}, OrientabilityRule::always()}}};
    CHECK_THROWS_AS(evaluate_edge_scenario(negative), NegativeGenus);
    CHECK_THROWS_AS(OrientabilityRule::z2_hom({}), InvalidParameter);
  }

  TEST_CASE("15E cover with a reflection rule") {
    const Presentation p = family_15E(6);
    const EdgeScenario s{p, 5, {{"x", {p.parse("x")}, OrientabilityRule::z2_hom({{p.parse("x"), true}})}}};
    CHECK(evaluate_edge_scenario(s).surfaces == std::set<SurfaceType>{{true, 0, 6}});
  }

  TEST_CASE("orbifold 28 dashed arc") {
    const ScenarioResult r = evaluate_dashed_arc_scenario(orbifold28_dashed());
    CHECK(r.surfaces == std::set<SurfaceType>{{true, 5, 12}});
    CHECK(r.group_order == 120);
    CHECK(r.conjugators_visited == 120);
    CHECK(r.conjugators_connected > 0);
    CHECK(r.per_pattern.size() == 4 * r.conjugators_connected);
    for (const auto& o : r.per_pattern) {
      CHECK(o.index == 12);
      CHECK(o.orientable);
    }
  }

  TEST_CASE("dashed arc at the identity conjugator") {
    SweepOptions options;
    const Presentation p = fixtures::orbifold28();
    options.conjugators = std::vector<Word>{Word{}};
    const ScenarioResult r = evaluate_dashed_arc_scenario(orbifold28_dashed(), options);
    REQUIRE(r.per_pattern.size() == 4);
    for (const auto& o : r.per_pattern) {
      CHECK(o.conjugator == 0);
      CHECK(o.index == 12);
      CHECK(o.orientable);
      CHECK(o.surface == SurfaceType{true, 5, 12});
    }
  }

  TEST_CASE("dashed arc never connected") {
    const Presentation p = fixtures::orbifold28();
    const DashedArcScenario s{p, 21, p.parse("y"), p.parse("y"), {{p.parse("y"), true}}};
    const ScenarioResult r = evaluate_dashed_arc_scenario(s);
    CHECK(r.surfaces.empty());
    CHECK(r.conjugators_connected == 0);
    CHECK(r.conjugators_visited == 120);
  }

  TEST_CASE("sweep result does not depend on the representative words") {
    const Presentation p = fixtures::orbifold28();
    const PermGroup g = permutation_rep(enumerate(p, {}));
    const ElementList elements = enumerate_elements(g);
    std::vector<Word> padded;
    const Word x5 = p.parse("x^5"), zz = p.parse("z^2");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      padded.push_back(i % 2 == 0 ? elements[i].word * x5 : zz * elements[i].word);
    }
    SweepOptions options;
    options.conjugators = padded;
    const ScenarioResult a = evaluate_dashed_arc_scenario(orbifold28_dashed());
    const ScenarioResult b = evaluate_dashed_arc_scenario(orbifold28_dashed(), options);
    CHECK(a.surfaces == b.surfaces);
    CHECK(a.conjugators_connected == b.conjugators_connected);
  }

  TEST_CASE("threads and early stop agree with the plain sweep") {
    const ScenarioResult plain = evaluate_dashed_arc_scenario(orbifold28_dashed());
    SweepOptions threaded;
    threaded.threads = 4;
    const ScenarioResult t = evaluate_dashed_arc_scenario(orbifold28_dashed(), threaded);
    CHECK(t.surfaces == plain.surfaces);
    REQUIRE(t.per_pattern.size() == plain.per_pattern.size());
    for (std::size_t i = 0; i < t.per_pattern.size(); ++i) {
      CHECK(t.per_pattern[i].conjugator == plain.per_pattern[i].conjugator);
      CHECK(t.per_pattern[i].pattern == plain.per_pattern[i].pattern);
    }
    SweepOptions early;
    early.early_stop = true;
    const ScenarioResult e = evaluate_dashed_arc_scenario(orbifold28_dashed(), early);
    CHECK(e.surfaces == plain.surfaces);
    CHECK(e.conjugators_visited < plain.conjugators_visited);
  }

  TEST_CASE("families") {
    CHECK(evaluate_family(Family::F15E, 5, Embedding::A) == SurfaceType{true, 0, 5});
    CHECK(evaluate_family(Family::F15E, 5, Embedding::B) == SurfaceType{true, 2, 1});
    CHECK(evaluate_family(Family::F15E, 6, Embedding::B) == SurfaceType{true, 2, 2});
    CHECK(evaluate_family(Family::F19, 4, Embedding::Unique) == SurfaceType{true, 3, 4});
    CHECK_THROWS_AS(evaluate_family(Family::F19, 4, Embedding::A), InvalidParameter);
    CHECK_THROWS_AS(evaluate_family(Family::F15E, 2, Embedding::A), InvalidParameter);
    for (int n = 3; n <= 50; ++n) {
      const FamilyEvaluation e = evaluate_family_detailed(Family::F19, n, Embedding::Unique);
      CHECK(e.index == static_cast<std::size_t>(n));
      CHECK(algebraic_genus(e.surface) == family_alpha(Family::F19, n));
    }
    for (int n = 3; n <= 50; ++n) {
      for (const auto emb : family_embeddings(Family::F15E)) {
        CHECK(algebraic_genus(evaluate_family(Family::F15E, n, emb)) == n - 1);
      }
    }
  }
}
