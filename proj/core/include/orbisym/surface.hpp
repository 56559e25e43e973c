#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace orbisym {

/// A compact connected bordered surface: S_{g,b} (orientable) or N_{g,b}.
/// For non-orientable surfaces, genus counts projective-plane summands.
struct SurfaceType {
  bool orientable = true;
  std::int64_t genus = 0;
  std::int64_t boundary = 1;

  auto operator<=>(const SurfaceType&) const = default;
};

/// "S_{g,b}" or "N_{g,b}".
std::string to_string(const SurfaceType& s);
SurfaceType parse_surface(std::string_view text);

/// Rank of the free fundamental group: 2g-1+b orientable, g-1+b otherwise.
std::int64_t algebraic_genus(const SurfaceType& s);

/// Inverts algebraic_genus for a given boundary count and orientability.
/// Throws ParityError or NegativeGenus when no such surface exists.
SurfaceType classify_surface(std::int64_t alpha, std::int64_t boundary, bool orientable);

enum class MaxOrderKind {
  TwelveAlphaMinusOne,     // 12(a-1)
  EightAlphaMinusOne,      // 8(a-1)
  TwentyThirdsAlphaMinusOne,  // 20(a-1)/3
  SixAlphaMinusOne,        // 6(a-1)
  TwentyFourFifthsAlphaMinusOne,  // 24(a-1)/5
  ThirtySeventhsAlphaMinusOne,    // 30(a-1)/7
  SquareRootPlusOneSquared,  // 4(sqrt(a)+1)^2
  AlphaPlusOne,            // 4(a+1)
};

struct MaxOrderClass {
  MaxOrderKind kind;
  std::uint64_t value;

  std::string_view label() const;
  bool operator==(const MaxOrderClass&) const = default;
};

std::string_view label(MaxOrderKind kind);

/// Evaluates one formula at alpha. Throws InvalidParameter if a division is
/// not exact or, for the square rule, alpha is not a perfect square.
std::uint64_t evaluate_max_order(MaxOrderKind kind, std::int64_t alpha);

/// Which alphas take which exceptional formula.
struct ExceptionalAlphas {
  MaxOrderKind kind;
  std::span<const std::int64_t> alphas;
};

std::span<const ExceptionalAlphas> exceptional_alphas();

/// k with alpha = k^2 is excluded from the square rule for these k.
std::span<const std::int64_t> square_rule_exclusions();

/// Maximum order of a group acting on (S^3, Sigma) over bordered Sigma of algebraic genus alpha.
MaxOrderClass m_alpha(std::int64_t alpha);

std::optional<std::int64_t> exact_sqrt(std::int64_t n);

/// True if alpha falls under no exceptional set and is not a perfect square.
bool is_remaining_number(std::int64_t alpha);

}  // namespace orbisym
