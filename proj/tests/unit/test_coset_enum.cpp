#include "fixtures.hpp"
#include "oracles.hpp"

#include "orbisym/coset_enum.hpp"
#include "orbisym/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace orbisym;

namespace {

std::vector<Word> words(const Presentation& p, std::string_view text) { return p.parse_list(text); }

}  // namespace

TEST_SUITE("coset_enum") {
  TEST_CASE("orbifold 28 indices") {
    const Presentation p = fixtures::orbifold28();
    CHECK(subgroup_index(p, words(p, "x*y, x*y*x^-1")) == 12);
    CHECK(subgroup_index(p, words(p, "x, y, z")) == 1);
    CHECK(subgroup_index(p, words(p, "x*y, (x*y*z^-1)*z*(x*y*z^-1)^-1")) == 6);
    CHECK(subgroup_index(p, words(p, "x*y, x*z*x^-1")) == 6);
    // Conjugating y rather than z by x*y*z^-1 leaves a subgroup of index 12.
    CHECK(subgroup_index(p, words(p, "x*y, (x*y*z^-1)*y*(x*y*z^-1)^-1")) == 12);
  }

  TEST_CASE("orbifold 28 boundary subgroups in script form") {
    const Presentation p = fixtures::orbifold28();
    const std::string mid = "(x*y*z^-1*x^-1)";
    CHECK(subgroup_index(p, words(p, "x*y*x^-1, x*y")) == 12);
    CHECK(subgroup_index(p, words(p, "x*y*x^-1, " + mid + "*x*y*" + mid + "^-1")) == 12);
    CHECK(subgroup_index(p, words(p, "x*z*x^-1, x*y")) == 6);
    CHECK(subgroup_index(p, words(p, "x*z*x^-1, " + mid + "*x*y*" + mid + "^-1")) == 6);
  }

  TEST_CASE("dihedral group of order 14") {
    const auto [r, s] = oracle::dihedral(7);
    REQUIRE(oracle::closure_order({r, s}, 7) == 14);
    const Presentation d7 = load_presentation("generators: x y\nrelators: x^7 y^2 (x*y)^2\n");
    CHECK(enumerate(d7, {}).n_cosets() == 14);
  }

  TEST_CASE("group orders") {
    CHECK(group_order(fixtures::orbifold28()) == 120);
    CHECK(group_order(family_15E(5)) == 10);
    const std::size_t a5 = oracle::largest_triangle_quotient(3, 2, 5, 5);
    CHECK(a5 == 60);
    CHECK(group_order(fixtures::triangle(3, 2, 5)) == a5);
  }

  TEST_CASE("permutation representation") {
    const Presentation p = fixtures::orbifold28();
    const CosetTable regular = enumerate(p, {});
    const PermGroup g = permutation_rep(regular);
    CHECK(g.degree() == 120);
    CHECK(g.generator_count() == 3);

    const CosetTable whole = enumerate(p, words(p, "x, y, z"));
    const PermGroup trivial = permutation_rep(whole);
    for (const auto& [name, perm] : trivial.generators()) CHECK(perm.is_identity());

    const PermGroup z3z3 = permutation_rep(enumerate(family_19(3), {}));
    REQUIRE(z3z3.degree() == 9);
    const auto& a = z3z3.generators()[0].second;
    const auto& b = z3z3.generators()[1].second;
    CHECK(a.then(b) == b.then(a));
    CHECK_FALSE(a == b);
  }

  TEST_CASE("trace word") {
    const Presentation p = fixtures::orbifold28();
    const CosetTable regular = enumerate(p, {});
    for (std::size_t c = 0; c < regular.n_cosets(); c += 17) CHECK(trace_word(regular, c, Word{}) == c);
    CHECK(trace_word(regular, 0, p.parse("x^5")) == 0);
    const CosetTable g1 = enumerate(p, words(p, "x*y, x*y*x^-1"));
    CHECK(trace_word(g1, 0, p.parse("x*y")) == 0);
    CHECK(trace_word(g1, 0, p.parse("x*y*x^-1")) == 0);
  }

  TEST_CASE("infinite groups hit the limit") {
    const Presentation z = load_presentation("generators: x\nrelators:\n");
    CHECK_THROWS_AS(group_order(z, {.max_cosets = 1000}), LimitExceeded);
    const Presentation free2 = load_presentation("generators: a b\n");
    CHECK_THROWS_AS(subgroup_index(free2, words(free2, "a"), {.max_cosets = 5000}), LimitExceeded);
    CHECK_THROWS_AS(subgroup_index(free2, words(free2, "a"), {.max_cosets = 5000}, Strategy::Felsch), LimitExceeded);
    // Z is infinite but <x^4> has index 4.
    CHECK(subgroup_index(z, words(z, "x^4")) == 4);
  }

  TEST_CASE("table is standardized") {
    const Presentation p = fixtures::orbifold28();
    const CosetTable t = enumerate(p, words(p, "x*y, x*y*x^-1"));
    std::size_t next = 1;
    for (std::size_t c = 0; c < t.n_cosets(); ++c) {
      for (const auto image : t.row(c)) {
        if (image >= next) {
          CHECK(image == next);
          ++next;
        }
      }
    }
    CHECK(enumerate(p, words(p, "x*y, x*y*x^-1"), {}, Strategy::Felsch) == t);
  }

  TEST_CASE("tsv dump") {
    const Presentation p = load_presentation("generators: x\nrelators: x^3\n");
    std::ostringstream out;
    write_tsv(enumerate(p, {}), out);
    CHECK(out.str() == "coset\tx\tx^-1\n0\t1\t2\n1\t2\t0\n2\t0\t1\n");
  }

  TEST_CASE("subgroup words outside the alphabet are rejected") {
    const Presentation p = load_presentation("generators: x\nrelators: x^3\n");
    const Word foreign = Word::generator(GeneratorId{4});
    CHECK_THROWS_AS(enumerate(p, std::vector<Word>{foreign}), InvalidParameter);
  }
}
