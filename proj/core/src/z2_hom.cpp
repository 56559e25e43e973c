#include "orbisym/z2_hom.hpp"

#include "orbisym/errors.hpp"

namespace orbisym {

namespace {

bool dot(const boost::dynamic_bitset<>& a, const boost::dynamic_bitset<>& b) {
  return (a & b).count() % 2 == 1;
}

}  // namespace

Z2HomResult solve_hom_to_z2(const Presentation& p, std::span<const Z2Constraint> constraints) {
  const std::size_t n = p.generator_count();

  // Augmented rows: bits [0, n) are coefficients, bit n is the right-hand side.
  std::vector<boost::dynamic_bitset<>> rows;
  auto add_row = [&](const Word& w, bool rhs) {
    p.check_word(w);
    boost::dynamic_bitset<> row = exponent_vector_mod2(w, n);
    row.push_back(rhs);
    rows.push_back(std::move(row));
  };
  for (const auto& r : p.relators()) add_row(r, false);
  for (const auto& c : constraints) add_row(c.word, c.target);

  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    }
    pivot_columns.push_back(col);
    ++rank;
  }

  // A zero row with right-hand side 1 means 0 = 1.
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].test(n)) return {false, std::nullopt};
  }

  boost::dynamic_bitset<> assignment(n);
  for (std::size_t r = 0; r < rank; ++r) assignment[pivot_columns[r]] = rows[r].test(n);
  return {true, std::move(assignment)};
}

bool orientability(const Presentation& p, std::span<const Word> reflection_words) {
  if (reflection_words.empty()) {
    throw InvalidParameter("orientability test needs at least one reflection word");
  }
  std::vector<Z2Constraint> constraints;
  constraints.reserve(reflection_words.size());
  for (const auto& w : reflection_words) constraints.push_back({w, true});
  return solve_hom_to_z2(p, constraints).solvable;
}

bool satisfies(const Presentation& p, std::span<const Z2Constraint> constraints,
               const boost::dynamic_bitset<>& assignment) {
  const std::size_t n = p.generator_count();
  if (assignment.size() != n) return false;
  for (const auto& r : p.relators()) {
    if (dot(exponent_vector_mod2(r, n), assignment)) return false;
  }
  for (const auto& c : constraints) {
    if (dot(exponent_vector_mod2(c.word, n), assignment) != c.target) return false;
  }
  return true;
}

}  // namespace orbisym
