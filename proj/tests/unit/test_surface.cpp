#include "orbisym/errors.hpp"
#include "orbisym/surface.hpp"

#include <doctest.h>

#include <set>

using namespace orbisym;

TEST_SUITE("surface") {
  TEST_CASE("algebraic genus") {
    CHECK(algebraic_genus({true, 0, 3}) == 2);
    CHECK(algebraic_genus({false, 6, 6}) == 11);
    CHECK(algebraic_genus({true, 1, 1}) == 2);
  }

  TEST_CASE("classification") {
    CHECK(classify_surface(11, 12, true) == SurfaceType{true, 0, 12});
    CHECK(classify_surface(11, 6, false) == SurfaceType{false, 6, 6});
    CHECK(classify_surface(21, 12, true) == SurfaceType{true, 5, 12});
    CHECK(classify_surface(10, 9, true) == SurfaceType{true, 1, 9});
    CHECK(classify_surface(11, 10, true) == SurfaceType{true, 1, 10});
    CHECK_THROWS_AS(classify_surface(11, 9, true), ParityError);
    CHECK_THROWS_AS(classify_surface(11, 13, true), NegativeGenus);
    CHECK_THROWS_AS(classify_surface(11, 13, false), NegativeGenus);
    CHECK_THROWS_AS(classify_surface(11, 12, false), NegativeGenus);
    CHECK_THROWS_AS(classify_surface(1, 1, true), InvalidParameter);
    CHECK_THROWS_AS(classify_surface(5, 0, true), InvalidParameter);
  }

  TEST_CASE("classification round trip") {
    for (std::int64_t alpha = 2; alpha <= 60; ++alpha) {
      for (std::int64_t b = 1; b <= alpha + 2; ++b) {
        for (const bool o : {true, false}) {
          try {
            const SurfaceType s = classify_surface(alpha, b, o);
            CHECK(algebraic_genus(s) == alpha);
            CHECK(s.boundary == b);
            CHECK(s.orientable == o);
          } catch (const ClassificationError&) {
            const bool parity = o && (alpha + 1 - b) % 2 != 0;
            const bool negative = o ? alpha + 1 - b < 0 : alpha + 1 - b < 1;
            CHECK((parity || negative));
          }
        }
      }
    }
  }

  TEST_CASE("names") {
    CHECK(to_string(SurfaceType{true, 5, 12}) == "S_{5,12}");
    CHECK(to_string(SurfaceType{false, 6, 6}) == "N_{6,6}");
    CHECK(parse_surface("N_{1562,120}") == SurfaceType{false, 1562, 120});
    CHECK(parse_surface("S_{0,3}") == SurfaceType{true, 0, 3});
    CHECK_THROWS_AS(parse_surface("S_{0}"), SyntaxError);
    CHECK_THROWS_AS(parse_surface("T_{0,3}"), SyntaxError);
    CHECK_THROWS_AS(parse_surface("S_{0,3}x"), SyntaxError);
  }

  TEST_CASE("m_alpha values") {
    CHECK(m_alpha(2).value == 12);
    CHECK(m_alpha(29).value == 120);
    CHECK(m_alpha(841).value == 3600);
    CHECK(m_alpha(841).kind == MaxOrderKind::SquareRootPlusOneSquared);
    CHECK(m_alpha(100).value == 484);
    CHECK(m_alpha(6).value == 28);
    CHECK(m_alpha(6).kind == MaxOrderKind::AlphaPlusOne);
    CHECK(m_alpha(1681).value == 7200);
    CHECK(m_alpha(41).value == 192);
    CHECK(m_alpha(361).value == 2400);
    CHECK(m_alpha(9).kind == MaxOrderKind::TwelveAlphaMinusOne);
    CHECK(m_alpha(49).kind == MaxOrderKind::EightAlphaMinusOne);
    CHECK_THROWS_AS(m_alpha(1), InvalidParameter);
  }

  TEST_CASE("m_alpha class structure") {
    std::set<std::int64_t> exceptional;
    for (const auto& ex : exceptional_alphas()) {
      for (const auto a : ex.alphas) {
        CHECK(exceptional.insert(a).second);
        CHECK(m_alpha(a).kind == ex.kind);
        CHECK_NOTHROW(evaluate_max_order(ex.kind, a));
      }
    }
    for (const auto k : square_rule_exclusions()) CHECK(exceptional.contains(k * k));
    for (std::int64_t alpha = 2; alpha <= 3000; ++alpha) {
      CHECK(m_alpha(alpha).value >= static_cast<std::uint64_t>(4 * (alpha + 1)));
      if (!exceptional.contains(alpha) && !exact_sqrt(alpha)) CHECK(is_remaining_number(alpha));
    }
    CHECK_THROWS_AS(evaluate_max_order(MaxOrderKind::TwentyThirdsAlphaMinusOne, 5), InvalidParameter);
    CHECK_THROWS_AS(evaluate_max_order(MaxOrderKind::SquareRootPlusOneSquared, 5), InvalidParameter);
  }

  TEST_CASE("integer square root") {
    CHECK(exact_sqrt(0) == 0);
    CHECK(exact_sqrt(1) == 1);
    CHECK(exact_sqrt(1681) == 41);
    CHECK_FALSE(exact_sqrt(1682));
    CHECK(exact_sqrt(3037000499LL * 3037000499LL) == 3037000499LL);
    CHECK_FALSE(exact_sqrt(-4));
  }
}
