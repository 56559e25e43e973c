#pragma once

#include "orbisym/presentation.hpp"
#include "orbisym/word.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <span>
#include <vector>

namespace orbisym {

/// Requires h(word) = target, where target 1 is the generator t of Z2.
struct Z2Constraint {
  Word word;
  bool target = true;
};

struct Z2HomResult {
  bool solvable = false;
  /// One solution, bit i = h(x_i). Present iff solvable.
  std::optional<boost::dynamic_bitset<>> assignment;
};

/// Decides whether some homomorphism G -> Z2 meets every constraint.
///
/// Any such homomorphism factors through the mod-2 abelianization, so this is
/// a linear system over GF(2): one equation per relator (right side 0) and one
/// per constraint. Solved by Gaussian elimination; free variables are set to 0.
Z2HomResult solve_hom_to_z2(const Presentation& p, std::span<const Z2Constraint> constraints);

/// True iff a homomorphism to Z2 sends every reflection word to t.
/// Throws InvalidParameter when reflection_words is empty.
bool orientability(const Presentation& p, std::span<const Word> reflection_words);

/// Whether the assignment (bit i = image of x_i) kills every relator and meets every constraint.
bool satisfies(const Presentation& p, std::span<const Z2Constraint> constraints,
               const boost::dynamic_bitset<>& assignment);

}  // namespace orbisym
