#include "orbisym/surface.hpp"

#include "orbisym/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace orbisym {

namespace {

constexpr std::array<std::int64_t, 10> kTwelve{2, 3, 4, 5, 9, 11, 25, 97, 121, 241};
constexpr std::array<std::int64_t, 2> kEight{7, 49};
constexpr std::array<std::int64_t, 3> kTwentyThirds{16, 19, 361};
constexpr std::array<std::int64_t, 2> kSix{21, 481};
constexpr std::array<std::int64_t, 1> kTwentyFourFifths{41};
constexpr std::array<std::int64_t, 1> kThirtySevenths{1681};
constexpr std::array<std::int64_t, 6> kSquareExclusions{3, 5, 7, 11, 19, 41};

const std::array<ExceptionalAlphas, 6> kExceptional{{
    {MaxOrderKind::TwelveAlphaMinusOne, kTwelve},
    {MaxOrderKind::EightAlphaMinusOne, kEight},
    {MaxOrderKind::TwentyThirdsAlphaMinusOne, kTwentyThirds},
    {MaxOrderKind::SixAlphaMinusOne, kSix},
    {MaxOrderKind::TwentyFourFifthsAlphaMinusOne, kTwentyFourFifths},
    {MaxOrderKind::ThirtySeventhsAlphaMinusOne, kThirtySevenths},
}};

std::uint64_t exact_ratio(std::int64_t numerator_factor, std::int64_t alpha, std::int64_t denominator) {
  const std::int64_t numerator = numerator_factor * (alpha - 1);
  if (numerator % denominator != 0) {
    throw InvalidParameter(std::to_string(numerator_factor) + "(alpha-1)/" + std::to_string(denominator) +
                           " is not an integer at alpha=" + std::to_string(alpha));
  }
  return static_cast<std::uint64_t>(numerator / denominator);
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw SyntaxError("bad surface '" + std::string(whole) + "'", 0);
  }
  return value;
}

}  // namespace

std::string to_string(const SurfaceType& s) {
  return std::string(s.orientable ? "S" : "N") + "_{" + std::to_string(s.genus) + "," +
         std::to_string(s.boundary) + "}";
}

SurfaceType parse_surface(std::string_view text) {
  const std::string_view whole = text;
  const auto fail = [&] { throw SyntaxError("bad surface '" + std::string(whole) + "'", 0); };
  if (text.size() < 7 || (text[0] != 'S' && text[0] != 'N') || text.substr(1, 2) != "_{" ||
      text.back() != '}') {
    fail();
  }
  const bool orientable = text[0] == 'S';
  const std::string_view body = text.substr(3, text.size() - 4);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) fail();
  SurfaceType s{orientable, parse_int(body.substr(0, comma), whole), parse_int(body.substr(comma + 1), whole)};
  if (s.boundary < 1 || s.genus < (orientable ? 0 : 1)) fail();
  return s;
}

std::int64_t algebraic_genus(const SurfaceType& s) {
  if (s.boundary < 1 || s.genus < (s.orientable ? 0 : 1)) {
    throw InvalidParameter("not a bordered surface: " + to_string(s));
  }
  return s.orientable ? 2 * s.genus - 1 + s.boundary : s.genus - 1 + s.boundary;
}

SurfaceType classify_surface(std::int64_t alpha, std::int64_t boundary, bool orientable) {
  if (alpha < 2) throw InvalidParameter("algebraic genus must be at least 2, got " + std::to_string(alpha));
  if (boundary < 1) throw InvalidParameter("boundary count must be at least 1");
  const std::int64_t excess = alpha + 1 - boundary;
  const std::string where = "alpha=" + std::to_string(alpha) + ", b=" + std::to_string(boundary);
  if (orientable) {
    if (excess < 0) throw NegativeGenus("negative genus for orientable surface with " + where);
    if (excess % 2 != 0) throw ParityError("alpha+1-b is odd for orientable surface with " + where);
    return {true, excess / 2, boundary};
  }
  if (excess < 1) throw NegativeGenus("non-orientable genus below 1 with " + where);
  return {false, excess, boundary};
}

std::string_view label(MaxOrderKind kind) {
  switch (kind) {
    case MaxOrderKind::TwelveAlphaMinusOne: return "12(a-1)";
    case MaxOrderKind::EightAlphaMinusOne: return "8(a-1)";
    case MaxOrderKind::TwentyThirdsAlphaMinusOne: return "20(a-1)/3";
    case MaxOrderKind::SixAlphaMinusOne: return "6(a-1)";
    case MaxOrderKind::TwentyFourFifthsAlphaMinusOne: return "24(a-1)/5";
    case MaxOrderKind::ThirtySeventhsAlphaMinusOne: return "30(a-1)/7";
    case MaxOrderKind::SquareRootPlusOneSquared: return "4(sqrt(a)+1)^2";
    case MaxOrderKind::AlphaPlusOne: return "4(a+1)";
  }
  return "?";
}

std::string_view MaxOrderClass::label() const { return orbisym::label(kind); }

std::uint64_t evaluate_max_order(MaxOrderKind kind, std::int64_t alpha) {
  if (alpha < 2) throw InvalidParameter("algebraic genus must be at least 2");
  switch (kind) {
    case MaxOrderKind::TwelveAlphaMinusOne: return exact_ratio(12, alpha, 1);
    case MaxOrderKind::EightAlphaMinusOne: return exact_ratio(8, alpha, 1);
    case MaxOrderKind::TwentyThirdsAlphaMinusOne: return exact_ratio(20, alpha, 3);
    case MaxOrderKind::SixAlphaMinusOne: return exact_ratio(6, alpha, 1);
    case MaxOrderKind::TwentyFourFifthsAlphaMinusOne: return exact_ratio(24, alpha, 5);
    case MaxOrderKind::ThirtySeventhsAlphaMinusOne: return exact_ratio(30, alpha, 7);
    case MaxOrderKind::SquareRootPlusOneSquared: {
      const auto k = exact_sqrt(alpha);
      if (!k) throw InvalidParameter(std::to_string(alpha) + " is not a perfect square");
      return static_cast<std::uint64_t>(4 * (*k + 1) * (*k + 1));
    }
    case MaxOrderKind::AlphaPlusOne: return static_cast<std::uint64_t>(4 * (alpha + 1));
  }
  throw InvalidParameter("unknown formula");
}

std::span<const ExceptionalAlphas> exceptional_alphas() { return kExceptional; }

std::span<const std::int64_t> square_rule_exclusions() { return kSquareExclusions; }

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  // Integer Newton iteration, no floating point.
  std::int64_t x = n;
  std::int64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  if (x * x == n) return x;
  return std::nullopt;
}

MaxOrderClass m_alpha(std::int64_t alpha) {
  if (alpha < 2) throw InvalidParameter("algebraic genus must be at least 2, got " + std::to_string(alpha));
  for (const auto& ex : kExceptional) {
    if (std::find(ex.alphas.begin(), ex.alphas.end(), alpha) != ex.alphas.end()) {
      return {ex.kind, evaluate_max_order(ex.kind, alpha)};
    }
  }
  if (const auto k = exact_sqrt(alpha);
      k && std::find(kSquareExclusions.begin(), kSquareExclusions.end(), *k) == kSquareExclusions.end()) {
    return {MaxOrderKind::SquareRootPlusOneSquared, evaluate_max_order(MaxOrderKind::SquareRootPlusOneSquared, alpha)};
  }
  return {MaxOrderKind::AlphaPlusOne, evaluate_max_order(MaxOrderKind::AlphaPlusOne, alpha)};
}

bool is_remaining_number(std::int64_t alpha) {
  if (alpha < 2) return false;
  for (const auto& ex : kExceptional) {
    if (std::find(ex.alphas.begin(), ex.alphas.end(), alpha) != ex.alphas.end()) return false;
  }
  return !exact_sqrt(alpha).has_value();
}

}  // namespace orbisym
