#pragma once

#include "orbisym/word.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orbisym {

/// A bijection of {0, ..., degree-1}. Points are acted on from the right:
/// applying `a` then `b` is `a.then(b)`, matching left-to-right word reading.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A permutation group given by named generators of a common degree.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<std::pair<std::string, Permutation>> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<std::pair<std::string, Permutation>>& generators() const noexcept {
    return generators_;
  }
  std::size_t generator_count() const noexcept { return generators_.size(); }

 private:
  std::size_t degree_;
  std::vector<std::pair<std::string, Permutation>> generators_;
};

struct ElementEntry {
  Permutation permutation;
  Word word;
};

/// Every element of a permutation group, each with a shortlex-minimal word
/// over x_0, x_0^-1, x_1, x_1^-1, ... Entry 0 is the identity.
class ElementList {
 public:
  explicit ElementList(std::vector<ElementEntry> entries);

  const std::vector<ElementEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const ElementEntry& operator[](std::size_t i) const { return entries_[i]; }

  std::optional<std::size_t> find(const Permutation& p) const;

 private:
  std::vector<ElementEntry> entries_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

inline constexpr std::size_t kDefaultMaxOrder = 100'000;

Permutation evaluate_word(const PermGroup& g, const Word& w);

/// Breadth-first closure over the Cayley graph. Throws LimitExceeded past max_order.
ElementList enumerate_elements(const PermGroup& g, std::size_t max_order = kDefaultMaxOrder);

std::size_t group_order_perm(const PermGroup& g, std::size_t max_order = kDefaultMaxOrder);

}  // namespace orbisym
