#include "orbisym/coset_enum.hpp"

#include "orbisym/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>

namespace orbisym {

namespace {

using Coset = std::int32_t;
using Column = std::uint32_t;
using ColumnWord = std::vector<Column>;

constexpr Coset kUndefined = -1;

// Raised internally when a definition needs a row and none is free.
struct TableFull {};

ColumnWord to_columns(const Word& w) {
  ColumnWord out;
  out.reserve(w.size());
  for (const Letter l : w.letters()) out.push_back(static_cast<Column>(l.column()));
  return out;
}

ColumnWord cyclically_reduce(ColumnWord w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == (w[hi - 1] ^ 1U)) {
    ++lo;
    --hi;
  }
  return ColumnWord(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

ColumnWord inverse_columns(const ColumnWord& w) {
  ColumnWord out(w.rbegin(), w.rend());
  for (auto& c : out) c ^= 1U;
  return out;
}

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::span<const Word> subgroup, const EnumerationLimits& limits)
      : columns_(2 * p.generator_count()), limits_(limits) {
    if (limits.max_cosets < 1) throw InvalidParameter("max_cosets must be at least 1");
    if (limits.max_cosets > static_cast<std::size_t>(std::numeric_limits<Coset>::max())) {
      throw InvalidParameter("max_cosets too large");
    }
    for (const auto& r : p.relators()) {
      ColumnWord cols = cyclically_reduce(to_columns(r));
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    for (const auto& w : subgroup) {
      p.check_word(w);
      subgroup_.push_back(to_columns(w));
    }
    build_conjugates();
    add_row();
  }

  CosetTable run(Strategy strategy, const Presentation& p, std::span<const Word> subgroup) {
    felsch_ = strategy == Strategy::Felsch;
    std::size_t alpha = 0;
    bool subgroup_done = false;
    for (;;) {
      try {
        if (!subgroup_done) {
          for (const auto& w : subgroup_) scan_and_fill(0, w);
          process_deductions();
          subgroup_done = true;
        }
        if (felsch_) {
          felsch_pass(alpha);
        } else {
          hlt_pass(alpha);
        }
        break;
      } catch (const TableFull&) {
        alpha = reclaim(alpha);
      }
    }
    return standardize(p, subgroup);
  }

 private:
  Coset get(Coset c, Column x) const { return table_[static_cast<std::size_t>(c) * columns_ + x]; }
  void set(Coset c, Column x, Coset d) { table_[static_cast<std::size_t>(c) * columns_ + x] = d; }
  bool live(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  Coset rows() const { return static_cast<Coset>(parent_.size()); }

  void add_row() {
    const Coset c = rows();
    table_.resize(table_.size() + columns_, kUndefined);
    parent_.push_back(c);
    ++live_count_;
  }

  void record(Coset c, Column x) {
    if (!felsch_) return;
    if (limits_.max_deductions && deductions_.size() >= *limits_.max_deductions) {
      deduction_overflow_ = true;
      return;
    }
    deductions_.emplace_back(c, x);
  }

  void define(Coset c, Column x) {
    if (parent_.size() >= limits_.max_cosets) throw TableFull{};
    const Coset d = rows();
    add_row();
    set(c, x, d);
    set(d, x ^ 1U, c);
    record(c, x);
  }

  Coset rep(Coset c) {
    Coset root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const Coset next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(Coset a, Coset b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const Coset keep = std::min(a, b);
    const Coset drop = std::max(a, b);
    parent_[static_cast<std::size_t>(drop)] = keep;
    --live_count_;
    coincidences_.push_back(drop);
  }

  void coincidence(Coset a, Coset b) {
    coincidences_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < coincidences_.size(); ++i) {
      const Coset gamma = coincidences_[i];
      for (Column x = 0; x < columns_; ++x) {
        const Coset delta = get(gamma, x);
        if (delta == kUndefined) continue;
        set(delta, x ^ 1U, kUndefined);
        const Coset mu = rep(gamma);
        const Coset nu = rep(delta);
        if (get(mu, x) != kUndefined) {
          merge(nu, get(mu, x));
        } else if (get(nu, x ^ 1U) != kUndefined) {
          merge(mu, get(nu, x ^ 1U));
        } else {
          set(mu, x, nu);
          set(nu, x ^ 1U, mu);
          record(mu, x);
        }
      }
    }
    coincidences_.clear();
  }

  // Traces w from both ends without defining anything. Returns true if the
  // trace is complete after any deduction or coincidence it triggered.
  void scan(Coset alpha, const ColumnWord& w) {
    if (w.empty()) return;
    Coset f = alpha;
    Coset b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // exclusive upper end
    while (i < j && get(f, w[i]) != kUndefined) f = get(f, w[i++]);
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && get(b, w[j - 1] ^ 1U) != kUndefined) {
      b = get(b, w[j - 1] ^ 1U);
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      set(f, w[i], b);
      set(b, w[i] ^ 1U, f);
      record(f, w[i]);
    }
  }

  void scan_and_fill(Coset alpha, const ColumnWord& w) {
    if (w.empty()) return;
    Coset f = alpha;
    Coset b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();
    for (;;) {
      while (i < j && get(f, w[i]) != kUndefined) f = get(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && get(b, w[j - 1] ^ 1U) != kUndefined) {
        b = get(b, w[j - 1] ^ 1U);
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        set(b, w[i] ^ 1U, f);
        record(f, w[i]);
        return;
      }
      define(f, w[i]);
    }
  }

  void build_conjugates() {
    conjugates_.assign(columns_, {});
    std::set<ColumnWord> seen;
    for (const auto& r : relators_) {
      for (const ColumnWord& base : {r, inverse_columns(r)}) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          ColumnWord rotated(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
          rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
          if (seen.insert(rotated).second) conjugates_[rotated.front()].push_back(std::move(rotated));
        }
      }
    }
  }

  void process_deductions() {
    if (!felsch_) return;
    while (!deductions_.empty() || deduction_overflow_) {
      if (deduction_overflow_) {
        lookahead();
        continue;
      }
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& w : conjugates_[x]) {
        if (!live(c)) break;
        scan(c, w);
      }
      if (!live(c)) continue;
      const Coset d = get(c, x);
      if (d == kUndefined) continue;
      for (const auto& w : conjugates_[x ^ 1U]) {
        if (!live(d)) break;
        scan(d, w);
      }
    }
  }

  // Scans every cyclic conjugate of every relator at every live coset until
  // nothing changes. Subsumes any pending deductions.
  void lookahead() {
    std::size_t before = 0;
    do {
      before = fingerprint();
      for (Coset c = 0; c < rows(); ++c) {
        for (Column x = 0; x < columns_ && live(c); ++x) {
          for (const auto& w : conjugates_[x]) {
            if (!live(c)) break;
            scan(c, w);
          }
        }
      }
      deductions_.clear();
      deduction_overflow_ = false;
    } while (fingerprint() != before);
  }

  // Changes whenever an entry is defined or cosets merge.
  std::size_t fingerprint() const {
    std::size_t defined = 0;
    for (Coset c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      for (Column x = 0; x < columns_; ++x) defined += get(c, x) != kUndefined ? 1 : 0;
    }
    return defined * (limits_.max_cosets + 1) + live_count_;
  }

  void hlt_pass(std::size_t& alpha) {
    for (; alpha < parent_.size(); ++alpha) {
      const auto c = static_cast<Coset>(alpha);
      if (!live(c)) continue;
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      for (Column x = 0; x < columns_ && live(c); ++x) {
        if (get(c, x) == kUndefined) define(c, x);
      }
    }
  }

  void felsch_pass(std::size_t& alpha) {
    for (; alpha < parent_.size(); ++alpha) {
      const auto c = static_cast<Coset>(alpha);
      for (Column x = 0; x < columns_ && live(c); ++x) {
        if (get(c, x) == kUndefined) {
          define(c, x);
          process_deductions();
        }
      }
    }
  }

  // Frees dead rows after a lookahead. Returns the new position of `alpha`.
  std::size_t reclaim(std::size_t alpha) {
    lookahead();
    // Require a meaningful amount of space back; otherwise every further
    // definition would trigger another full lookahead.
    const std::size_t freed = parent_.size() - static_cast<std::size_t>(live_count_);
    if (freed == 0 || freed < limits_.max_cosets / 64) {
      throw LimitExceeded("coset enumeration exceeded " + std::to_string(limits_.max_cosets) +
                          " cosets");
    }
    std::vector<Coset> renumber(parent_.size(), kUndefined);
    Coset next = 0;
    std::size_t new_alpha = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (c == alpha) new_alpha = static_cast<std::size_t>(next);
      if (live(static_cast<Coset>(c))) renumber[c] = next++;
    }
    if (alpha >= parent_.size()) new_alpha = static_cast<std::size_t>(next);
    std::vector<Coset> table(static_cast<std::size_t>(next) * columns_, kUndefined);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (renumber[c] == kUndefined) continue;
      for (Column x = 0; x < columns_; ++x) {
        const Coset d = get(static_cast<Coset>(c), x);
        table[static_cast<std::size_t>(renumber[c]) * columns_ + x] =
            d == kUndefined ? kUndefined : renumber[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (Coset c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    live_count_ = next;
    deductions_.clear();
    deduction_overflow_ = false;
    return new_alpha;
  }

  CosetTable standardize(const Presentation& p, std::span<const Word> subgroup) {
    std::vector<Coset> order;
    std::vector<Coset> renumber(parent_.size(), kUndefined);
    renumber[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (Column x = 0; x < columns_; ++x) {
        const Coset d = get(order[head], x);
        if (d == kUndefined || !live(d)) {
          throw std::logic_error("coset enumeration finished with an incomplete table");
        }
        if (renumber[static_cast<std::size_t>(d)] == kUndefined) {
          renumber[static_cast<std::size_t>(d)] = static_cast<Coset>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::uint32_t> action(order.size() * columns_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Column x = 0; x < columns_; ++x) {
        action[i * columns_ + x] =
            static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(get(order[i], x))]);
      }
    }
    return CosetTable(p.generator_names(), std::vector<Word>(subgroup.begin(), subgroup.end()),
                      order.size(), std::move(action));
  }

  std::size_t columns_;
  EnumerationLimits limits_;
  bool felsch_ = false;
  std::vector<ColumnWord> relators_;
  std::vector<ColumnWord> subgroup_;
  // conjugates_[x]: cyclic conjugates of relators and their inverses starting with column x.
  std::vector<std::vector<ColumnWord>> conjugates_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  Coset live_count_ = 0;
  std::vector<Coset> coincidences_;
  std::vector<std::pair<Coset, Column>> deductions_;
  bool deduction_overflow_ = false;
};

}  // namespace

CosetTable::CosetTable(std::vector<std::string> generator_names, std::vector<Word> subgroup_generators,
                       std::size_t n_cosets, std::vector<std::uint32_t> action)
    : generator_names_(std::move(generator_names)),
      subgroup_generators_(std::move(subgroup_generators)),
      n_cosets_(n_cosets),
      action_(std::move(action)) {
  if (action_.size() != n_cosets_ * column_count()) {
    throw InvalidParameter("coset table action has the wrong size");
  }
}

CosetTable enumerate(const Presentation& p, std::span<const Word> subgroup,
                     const EnumerationLimits& limits, Strategy strategy) {
  Enumerator e(p, subgroup, limits);
  CosetTable t = e.run(strategy, p, subgroup);
  if (const auto problems = check_table(t, p); !problems.empty()) {
    throw std::logic_error("coset enumeration produced an unsound table: " + problems.front());
  }
  return t;
}

std::size_t subgroup_index(const Presentation& p, std::span<const Word> subgroup,
                           const EnumerationLimits& limits, Strategy strategy) {
  return enumerate(p, subgroup, limits, strategy).n_cosets();
}

std::size_t group_order(const Presentation& p, const EnumerationLimits& limits, Strategy strategy) {
  return subgroup_index(p, {}, limits, strategy);
}

PermGroup permutation_rep(const CosetTable& t) {
  std::vector<std::pair<std::string, Permutation>> generators;
  for (std::uint32_t g = 0; g < t.generator_count(); ++g) {
    std::vector<std::uint32_t> images(t.n_cosets());
    for (std::size_t c = 0; c < t.n_cosets(); ++c) images[c] = t.action(c, Letter{GeneratorId{g}, false});
    generators.emplace_back(t.generator_names()[g], Permutation(std::move(images)));
  }
  return PermGroup(t.n_cosets(), std::move(generators));
}

std::size_t trace_word(const CosetTable& t, std::size_t start, const Word& w) {
  if (start >= t.n_cosets()) throw InvalidParameter("start coset out of range");
  std::size_t c = start;
  for (const Letter l : w.letters()) {
    if (l.generator.index >= t.generator_count()) {
      throw InvalidParameter("word uses a generator outside the table's alphabet");
    }
    c = t.action(c, l);
  }
  return c;
}

std::vector<std::string> check_table(const CosetTable& t, const Presentation& p) {
  std::vector<std::string> problems;
  if (t.generator_count() != p.generator_count()) {
    problems.push_back("generator count differs from presentation");
    return problems;
  }
  for (std::size_t c = 0; c < t.n_cosets(); ++c) {
    for (std::uint32_t g = 0; g < t.generator_count(); ++g) {
      const Letter fwd{GeneratorId{g}, false};
      const std::uint32_t d = t.action(c, fwd);
      if (d >= t.n_cosets()) {
        problems.push_back("coset " + std::to_string(c) + " has an out-of-range entry");
        continue;
      }
      if (t.action(d, fwd.inverted()) != c) {
        problems.push_back("columns " + p.generator_names()[g] + " and its inverse disagree at coset " +
                           std::to_string(c));
      }
    }
  }
  if (!problems.empty()) return problems;
  for (std::size_t c = 0; c < t.n_cosets(); ++c) {
    for (const auto& r : p.relators()) {
      if (trace_word(t, c, r) != c) {
        problems.push_back("relator " + p.format(r) + " does not close at coset " + std::to_string(c));
      }
    }
  }
  for (const auto& w : t.subgroup_generators()) {
    if (trace_word(t, 0, w) != 0) {
      problems.push_back("subgroup generator " + p.format(w) + " does not fix coset 0");
    }
  }
  return problems;
}

void write_tsv(const CosetTable& t, std::ostream& out) {
  out << "coset";
  for (const auto& name : t.generator_names()) out << '\t' << name << '\t' << name << "^-1";
  out << '\n';
  for (std::size_t c = 0; c < t.n_cosets(); ++c) {
    out << c;
    for (const auto v : t.row(c)) out << '\t' << v;
    out << '\n';
  }
}

}  // namespace orbisym
