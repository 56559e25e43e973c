#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbisym {

/// Position of a generator in the alphabet of one presentation.
struct GeneratorId {
  std::uint32_t index = 0;

  auto operator<=>(const GeneratorId&) const = default;
};

/// A generator or its inverse.
struct Letter {
  GeneratorId generator;
  bool inverse = false;

  Letter inverted() const noexcept { return {generator, !inverse}; }

  /// Column of this letter in a coset table: 2i for x_i, 2i+1 for x_i^-1.
  std::size_t column() const noexcept { return 2 * std::size_t{generator.index} + (inverse ? 1 : 0); }

  auto operator<=>(const Letter&) const = default;
};

/// An element of a free group, always stored freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(GeneratorId g, bool inverse = false);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word power(long exponent) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word operator*(const Word& a, const Word& b);

/// c * w * c^-1, freely reduced.
Word conjugate(const Word& w, const Word& c);

/// Bit i is the exponent sum of generator i in w, mod 2.
boost::dynamic_bitset<> exponent_vector_mod2(const Word& w, std::size_t n_generators);

using AliasMap = std::map<std::string, Word, std::less<>>;

/// Parses one word. Grammar:
///   word := term ('*' term)* ; term := atom ('^' integer)? ;
///   atom := identifier | '1' | '(' word ')'
/// Identifiers resolve against `alphabet` first, then `aliases`.
Word parse_word(std::string_view text, std::span<const std::string> alphabet,
                const AliasMap* aliases = nullptr);

/// Parses a sequence of words separated by whitespace and/or commas,
/// e.g. "x^5 y^2 (x*z)^3" or "x*y, x*y*x^-1".
std::vector<Word> parse_word_list(std::string_view text, std::span<const std::string> alphabet,
                                  const AliasMap* aliases = nullptr);

/// Canonical form: `*` separated, runs collapsed to `^k`, identity printed as `1`.
std::string to_string(const Word& w, std::span<const std::string> alphabet);

bool is_identifier(std::string_view name);

}  // namespace orbisym
