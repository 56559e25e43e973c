#pragma once

#include "orbisym/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbisym {

/// A finitely presented group <generators | relators>.
///
/// Relators are freely reduced but not cyclically reduced. Aliases are named
/// words kept for readability of catalog data; they are never generators.
class Presentation {
 public:
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
               AliasMap aliases = {});

  const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }
  std::size_t generator_count() const noexcept { return generator_names_.size(); }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  const AliasMap& aliases() const noexcept { return aliases_; }

  Word parse(std::string_view text) const;
  std::vector<Word> parse_list(std::string_view text) const;
  std::string format(const Word& w) const;

  /// Throws InvalidParameter if w uses a generator outside this alphabet.
  void check_word(const Word& w) const;

 private:
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
  AliasMap aliases_;
};

/// Incremental line-oriented reader for the presentation file format:
///
///     generators: x y z
///     relators: x^5 y^2 z^2 (x*z)^3 (x*y)^2 (y*z^-1)^2
///     alias midarc = x*y*z^-1*x^-1
///
/// `#` starts a comment. Reused by the catalog reader, which embeds
/// presentation blocks in larger files.
class PresentationBuilder {
 public:
  /// Returns false if the line is not a presentation directive (caller may
  /// interpret it); comments and blank lines are consumed.
  bool consume_line(std::string_view line, std::size_t line_number);

  bool has_generators() const noexcept { return generators_.has_value(); }
  Presentation build() const;

 private:
  std::optional<std::vector<std::string>> generators_;
  std::vector<Word> relators_;
  AliasMap aliases_;
};

Presentation load_presentation(std::string_view file_content);

/// Serializes back to the file format; load_presentation(to_text(p)) is equivalent to p.
std::string to_text(const Presentation& p);

/// <x, y | x^2, y^n, x y x^-1 y^-1>, abelian of order 2n.
Presentation family_15E(int n);

/// <x, y | x^n, y^n, x y x^-1 y^-1>, abelian of order n^2.
Presentation family_19(int n);

std::string_view trim(std::string_view s);
std::string_view strip_comment(std::string_view line);

}  // namespace orbisym
