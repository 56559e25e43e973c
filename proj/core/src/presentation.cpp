#include "orbisym/presentation.hpp"

#include "orbisym/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace orbisym {

namespace {

[[noreturn]] void line_error(std::size_t line_number, const std::string& what) {
  throw SyntaxError("line " + std::to_string(line_number) + ": " + what, 0);
}

bool starts_with_key(std::string_view line, std::string_view key, std::string_view& rest) {
  if (!line.starts_with(key)) return false;
  rest = line.substr(key.size());
  return true;
}

}  // namespace

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                           AliasMap aliases)
    : generator_names_(std::move(generator_names)),
      relators_(std::move(relators)),
      aliases_(std::move(aliases)) {
  std::set<std::string_view> seen;
  for (const auto& name : generator_names_) {
    if (!is_identifier(name)) throw InvalidParameter("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) throw DuplicateGenerator(name);
  }
  for (const auto& [name, word] : aliases_) {
    if (seen.contains(name)) throw DuplicateGenerator(name);
    check_word(word);
  }
  for (const auto& r : relators_) {
    if (r.empty()) throw EmptyRelator("1");
    check_word(r);
  }
}

Word Presentation::parse(std::string_view text) const {
  return parse_word(text, generator_names_, &aliases_);
}

std::vector<Word> Presentation::parse_list(std::string_view text) const {
  return parse_word_list(text, generator_names_, &aliases_);
}

std::string Presentation::format(const Word& w) const { return to_string(w, generator_names_); }

void Presentation::check_word(const Word& w) const {
  for (const Letter l : w.letters()) {
    if (l.generator.index >= generator_names_.size()) {
      throw InvalidParameter("word uses generator index " + std::to_string(l.generator.index) +
                             " outside an alphabet of " +
                             std::to_string(generator_names_.size()));
    }
  }
}

bool PresentationBuilder::consume_line(std::string_view raw, std::size_t line_number) {
  const std::string_view line = strip_comment(raw);
  if (line.empty()) return true;
  std::string_view rest;
  try {
    if (starts_with_key(line, "generators:", rest)) {
      if (generators_) line_error(line_number, "generators declared twice");
      std::vector<std::string> names;
      std::set<std::string> seen;
      std::string separated(rest);
      std::replace(separated.begin(), separated.end(), ',', ' ');
      std::istringstream in{separated};
      for (std::string name; in >> name;) {
        if (!is_identifier(name)) line_error(line_number, "invalid generator name '" + name + "'");
        if (!seen.insert(name).second) throw DuplicateGenerator(name);
        names.push_back(name);
      }
      generators_ = std::move(names);
      return true;
    }
    if (starts_with_key(line, "relators:", rest)) {
      if (!generators_) line_error(line_number, "relators before generators");
      const std::vector<Word> words = parse_word_list(rest, *generators_, &aliases_);
      for (const auto& w : words) {
        if (w.empty()) throw EmptyRelator(std::string(trim(rest)));
        relators_.push_back(w);
      }
      return true;
    }
    if (starts_with_key(line, "alias ", rest)) {
      if (!generators_) line_error(line_number, "alias before generators");
      const auto eq = rest.find('=');
      if (eq == std::string_view::npos) line_error(line_number, "alias needs '='");
      const std::string name(trim(rest.substr(0, eq)));
      if (!is_identifier(name)) line_error(line_number, "invalid alias name '" + name + "'");
      if (std::find(generators_->begin(), generators_->end(), name) != generators_->end() ||
          aliases_.contains(name)) {
        throw DuplicateGenerator(name);
      }
      aliases_.emplace(name, parse_word(rest.substr(eq + 1), *generators_, &aliases_));
      return true;
    }
  } catch (const SyntaxError& e) {
    if (std::string_view(e.what()).starts_with("line ")) throw;
    line_error(line_number, e.what());
  }
  return false;
}

Presentation PresentationBuilder::build() const {
  if (!generators_) throw SyntaxError("missing 'generators:' line", 0);
  return Presentation(*generators_, relators_, aliases_);
}

Presentation load_presentation(std::string_view content) {
  PresentationBuilder builder;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    const auto end = std::min(content.find('\n', start), content.size());
    ++line_number;
    const std::string_view line = content.substr(start, end - start);
    if (!builder.consume_line(line, line_number)) {
      line_error(line_number, "unrecognized directive '" + std::string(strip_comment(line)) + "'");
    }
    start = end + 1;
  }
  return builder.build();
}

std::string to_text(const Presentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& name : p.generator_names()) out << ' ' << name;
  out << '\n';
  for (const auto& [name, word] : p.aliases()) out << "alias " << name << " = " << p.format(word) << '\n';
  out << "relators:";
  for (const auto& r : p.relators()) out << ' ' << p.format(r);
  out << '\n';
  return out.str();
}

namespace {

Presentation abelian_two_generator(int x_order, int y_order) {
  const Word x = Word::generator(GeneratorId{0});
  const Word y = Word::generator(GeneratorId{1});
  return Presentation({"x", "y"}, {x.power(x_order), y.power(y_order), x * y * x.inverse() * y.inverse()});
}

}  // namespace

Presentation family_15E(int n) {
  if (n < 2) throw InvalidParameter("family 15E needs n >= 2, got " + std::to_string(n));
  return abelian_two_generator(2, n);
}

Presentation family_19(int n) {
  if (n < 2) throw InvalidParameter("family 19 needs n >= 2, got " + std::to_string(n));
  return abelian_two_generator(n, n);
}

}  // namespace orbisym
