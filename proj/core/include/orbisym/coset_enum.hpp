#pragma once

#include "orbisym/perm_group.hpp"
#include "orbisym/presentation.hpp"
#include "orbisym/word.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbisym {

struct EnumerationLimits {
  /// Maximum number of coset rows held at once, live or awaiting reclamation.
  std::size_t max_cosets = 1'000'000;
  /// Felsch only: deduction stack depth before falling back to a full lookahead.
  std::optional<std::size_t> max_deductions;
};

enum class Strategy {
  /// Relator-based (Haselgrove-Leech-Trotter) with lookahead on overflow.
  Hlt,
  /// Definition-based with deduction processing.
  Felsch,
};

/// A complete coset table for H <= G, in standard (breadth-first) numbering.
/// Coset 0 is H itself. Columns are x_0, x_0^-1, x_1, x_1^-1, ...
class CosetTable {
 public:
  CosetTable(std::vector<std::string> generator_names, std::vector<Word> subgroup_generators,
             std::size_t n_cosets, std::vector<std::uint32_t> action);

  std::size_t n_cosets() const noexcept { return n_cosets_; }
  std::size_t generator_count() const noexcept { return generator_names_.size(); }
  std::size_t column_count() const noexcept { return 2 * generator_names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
  const std::vector<Word>& subgroup_generators() const noexcept { return subgroup_generators_; }

  std::uint32_t action(std::size_t coset, Letter l) const {
    return action_[coset * column_count() + l.column()];
  }
  std::span<const std::uint32_t> row(std::size_t coset) const {
    return std::span(action_).subspan(coset * column_count(), column_count());
  }

  bool operator==(const CosetTable&) const = default;

 private:
  std::vector<std::string> generator_names_;
  std::vector<Word> subgroup_generators_;
  std::size_t n_cosets_;
  std::vector<std::uint32_t> action_;
};

/// Enumerates the cosets of <subgroup> in the group presented by p.
/// Throws LimitExceeded when the index is infinite or exceeds the limits;
/// never returns a partial table.
CosetTable enumerate(const Presentation& p, std::span<const Word> subgroup,
                     const EnumerationLimits& limits = {}, Strategy strategy = Strategy::Hlt);

/// [G : <subgroup>].
std::size_t subgroup_index(const Presentation& p, std::span<const Word> subgroup,
                           const EnumerationLimits& limits = {}, Strategy strategy = Strategy::Hlt);

/// |G|, from the regular representation.
std::size_t group_order(const Presentation& p, const EnumerationLimits& limits = {},
                        Strategy strategy = Strategy::Hlt);

/// The action of G on the cosets, one permutation per generator.
PermGroup permutation_rep(const CosetTable& t);

std::size_t trace_word(const CosetTable& t, std::size_t start, const Word& w);

/// Lists every violated table invariant (completeness, inverse columns,
/// relator closure at every coset, subgroup closure at coset 0). Empty when sound.
std::vector<std::string> check_table(const CosetTable& t, const Presentation& p);

/// One row per coset, one column per signed generator, with a header line.
void write_tsv(const CosetTable& t, std::ostream& out);

}  // namespace orbisym
