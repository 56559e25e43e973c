#include "orbisym/perm_group.hpp"

#include "orbisym/errors.hpp"

#include <deque>
#include <numeric>

namespace orbisym {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (const auto image : images_) {
    if (image >= images_.size() || hit[image]) {
      throw InvalidParameter("images do not form a permutation");
    }
    hit[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0U);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw InvalidParameter("permutation degrees differ");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = next.images_[images_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ULL;
  for (const auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

PermGroup::PermGroup(std::size_t degree, std::vector<std::pair<std::string, Permutation>> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& [name, perm] : generators_) {
    if (perm.degree() != degree_) {
      throw InvalidParameter("generator '" + name + "' has degree " + std::to_string(perm.degree()) +
                             ", expected " + std::to_string(degree_));
    }
  }
}

ElementList::ElementList(std::vector<ElementEntry> entries) : entries_(std::move(entries)) {
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!index_.emplace(entries_[i].permutation, i).second) {
      throw InvalidParameter("element list contains a repeated permutation");
    }
  }
}

std::optional<std::size_t> ElementList::find(const Permutation& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Permutation evaluate_word(const PermGroup& g, const Word& w) {
  Permutation result = Permutation::identity(g.degree());
  for (const Letter l : w.letters()) {
    if (l.generator.index >= g.generator_count()) {
      throw InvalidParameter("word uses a generator the permutation group does not have");
    }
    const Permutation& gen = g.generators()[l.generator.index].second;
    result = result.then(l.inverse ? gen.inverse() : gen);
  }
  return result;
}

ElementList enumerate_elements(const PermGroup& g, std::size_t max_order) {
  // Letters in shortlex order: x0, x0^-1, x1, x1^-1, ...
  std::vector<std::pair<Letter, Permutation>> steps;
  for (std::uint32_t i = 0; i < g.generator_count(); ++i) {
    const Permutation& gen = g.generators()[i].second;
    steps.push_back({Letter{GeneratorId{i}, false}, gen});
    steps.push_back({Letter{GeneratorId{i}, true}, gen.inverse()});
  }

  std::vector<ElementEntry> entries;
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  entries.push_back({Permutation::identity(g.degree()), Word{}});
  seen.emplace(entries.front().permutation, 0);

  for (std::size_t head = 0; head < entries.size(); ++head) {
    for (const auto& [letter, step] : steps) {
      Permutation next = entries[head].permutation.then(step);
      if (seen.contains(next)) continue;
      if (entries.size() >= max_order) {
        throw LimitExceeded("permutation group has more than " + std::to_string(max_order) +
                            " elements");
      }
      seen.emplace(next, entries.size());
      Word word = entries[head].word * Word(std::vector<Letter>{letter});
      entries.push_back({std::move(next), std::move(word)});
    }
  }
  return ElementList(std::move(entries));
}

std::size_t group_order_perm(const PermGroup& g, std::size_t max_order) {
  return enumerate_elements(g, max_order).size();
}

}  // namespace orbisym
