#include "orbisym/word.hpp"

#include "orbisym/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace orbisym {

namespace {

// Appends `l` to an already reduced sequence, cancelling against the tail.
void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverted()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

constexpr long kMaxExponent = 1'000'000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class WordParser {
 public:
  WordParser(std::string_view text, std::span<const std::string> alphabet, const AliasMap* aliases)
      : text_(text), alphabet_(alphabet), aliases_(aliases) {}

  Word parse_single() {
    Word w = parse_word();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return w;
  }

  std::vector<Word> parse_list() {
    std::vector<Word> words;
    skip_separators();
    while (pos_ < text_.size()) {
      words.push_back(parse_word());
      skip_separators();
    }
    return words;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Word parse_word() {
    Word w = parse_term();
    while (peek('*')) {
      ++pos_;
      w = w * parse_term();
    }
    return w;
  }

  Word parse_term() {
    Word base = parse_atom();
    if (peek('^')) {
      ++pos_;
      return base.power(parse_integer());
    }
    return base;
  }

  long parse_integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) fail("exponent out of range");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer exponent");
    return negative ? -value : value;
  }

  Word parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    if (!is_ident_start(c)) fail("expected generator, '1' or '('");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it != alphabet_.end()) {
      return Word::generator(GeneratorId{static_cast<std::uint32_t>(it - alphabet_.begin())});
    }
    if (aliases_ != nullptr) {
      if (const auto a = aliases_->find(name); a != aliases_->end()) return a->second;
    }
    throw UnknownGenerator(std::string(name));
  }

  std::string_view text_;
  std::span<const std::string> alphabet_;
  const AliasMap* aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter l : letters) push_reduced(letters_, l);
}

Word Word::generator(GeneratorId g, bool inverse) {
  Word w;
  w.letters_.push_back({g, inverse});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverted());
  return w;
}

Word Word::power(long exponent) const {
  if (exponent < 0) return inverse().power(-exponent);
  std::vector<Letter> letters;
  letters.reserve(letters_.size() * static_cast<std::size_t>(exponent));
  for (long i = 0; i < exponent; ++i) letters.insert(letters.end(), letters_.begin(), letters_.end());
  return Word(std::move(letters));
}

Word invert(const Word& w) { return w.inverse(); }

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> letters(a.letters().begin(), a.letters().end());
  for (const Letter l : b.letters()) push_reduced(letters, l);
  return Word(std::move(letters));
}

Word operator*(const Word& a, const Word& b) { return concat(a, b); }

Word conjugate(const Word& w, const Word& c) { return c * w * c.inverse(); }

boost::dynamic_bitset<> exponent_vector_mod2(const Word& w, std::size_t n_generators) {
  boost::dynamic_bitset<> bits(n_generators);
  for (const Letter l : w.letters()) {
    if (l.generator.index >= n_generators) {
      throw InvalidParameter("generator index " + std::to_string(l.generator.index) +
                             " outside alphabet of size " + std::to_string(n_generators));
    }
    bits.flip(l.generator.index);
  }
  return bits;
}

Word parse_word(std::string_view text, std::span<const std::string> alphabet,
                const AliasMap* aliases) {
  return WordParser(text, alphabet, aliases).parse_single();
}

std::vector<Word> parse_word_list(std::string_view text, std::span<const std::string> alphabet,
                                  const AliasMap* aliases) {
  return WordParser(text, alphabet, aliases).parse_list();
}

std::string to_string(const Word& w, std::span<const std::string> alphabet) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto letters = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < letters.size()) {
    std::size_t run = 1;
    while (i + run < letters.size() && letters[i + run] == letters[i]) ++run;
    const Letter l = letters[i];
    if (!first) out << '*';
    first = false;
    if (l.generator.index < alphabet.size()) {
      out << alphabet[l.generator.index];
    } else {
      out << '?' << l.generator.index;
    }
    const long exponent = l.inverse ? -static_cast<long>(run) : static_cast<long>(run);
    if (exponent != 1) out << '^' << exponent;
    i += run;
  }
  return out.str();
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !is_ident_start(name.front())) return false;
  return std::all_of(name.begin(), name.end(), is_ident_char);
}

}  // namespace orbisym
