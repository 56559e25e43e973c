#include "fixtures.hpp"

#include "orbisym/errors.hpp"
#include "orbisym/z2_hom.hpp"

#include <doctest.h>

using namespace orbisym;

namespace {

std::vector<Z2Constraint> constraints(const Presentation& p, std::initializer_list<std::pair<const char*, bool>> list) {
  std::vector<Z2Constraint> out;
  for (const auto& [text, target] : list) out.push_back({p.parse(text), target});
  return out;
}

}  // namespace

TEST_SUITE("z2_hom") {
  TEST_CASE("orbifold 28 edge checks") {
    const Presentation p = fixtures::orbifold28();
    const auto oriented = constraints(p, {{"x*y*z^-1*x^-1", true}, {"x*y*x^-1", true}, {"x*y", true}});
    const Z2HomResult r = solve_hom_to_z2(p, oriented);
    CHECK(r.solvable);
    REQUIRE(r.assignment);
    CHECK(satisfies(p, oriented, *r.assignment));
    CHECK((*r.assignment)[1]);

    const auto reflected = constraints(p, {{"x*y*z^-1*x^-1", true}, {"x*z*x^-1", true}, {"x*y", true}});
    const Z2HomResult u = solve_hom_to_z2(p, reflected);
    CHECK_FALSE(u.solvable);
    CHECK_FALSE(u.assignment);
  }

  TEST_CASE("dashed arc check") {
    const Presentation p = fixtures::orbifold28();
    CHECK(solve_hom_to_z2(p, constraints(p, {{"y", true}, {"x*z", false}})).solvable);
  }

  TEST_CASE("no constraints gives the zero map") {
    const Presentation p = fixtures::orbifold28();
    const Z2HomResult r = solve_hom_to_z2(p, {});
    CHECK(r.solvable);
    REQUIRE(r.assignment);
    CHECK(r.assignment->none());
  }

  TEST_CASE("orientability") {
    const Presentation c6 = family_15E(6);
    CHECK(orientability(c6, std::vector<Word>{c6.parse("x")}));
    const Presentation z2 = load_presentation("generators: x\nrelators: x^2\n");
    CHECK(orientability(z2, std::vector<Word>{z2.parse("x")}));
    const Presentation z3 = load_presentation("generators: x\nrelators: x^3\n");
    CHECK_FALSE(orientability(z3, std::vector<Word>{z3.parse("x")}));
    CHECK_THROWS_AS(orientability(z3, std::vector<Word>{}), InvalidParameter);
  }

  TEST_CASE("monotone in the constraint set") {
    const Presentation p = fixtures::orbifold28();
    auto list = constraints(p, {{"x*z*x^-1", true}});
    CHECK_FALSE(solve_hom_to_z2(p, list).solvable);
    list.push_back({p.parse("y"), true});
    CHECK_FALSE(solve_hom_to_z2(p, list).solvable);
  }

  TEST_CASE("contradictory targets on the same word") {
    const Presentation p = load_presentation("generators: a b\n");
    CHECK_FALSE(solve_hom_to_z2(p, constraints(p, {{"a*b", true}, {"b^-1*a^-1", false}})).solvable);
    CHECK_FALSE(solve_hom_to_z2(p, constraints(p, {{"1", true}})).solvable);
    CHECK(solve_hom_to_z2(p, constraints(p, {{"1", false}})).solvable);
  }
}
