#pragma once

// Reference computations that share no code with the library: permutations
// are plain vectors, words are (generator, exponent) pairs, and groups are
// closed by brute force.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {  // a first, then b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm power(const Perm& p, int k) {
  Perm r = identity(p.size());
  for (int i = 0; i < k; ++i) r = compose(r, p);
  return r;
}

/// Order of the group generated by gens, by closing a std::set under right multiplication.
inline std::size_t closure_order(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{identity(degree)};
  std::vector<Perm> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Perm h = compose(e, g);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Dihedral group of order 2n acting on the n-gon: rotation and reflection.
inline std::pair<Perm, Perm> dihedral(int n) {
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return {r, s};
}

/// Largest group generated by a pair (a, b) in S_degree with a^p = b^q = (ab)^r = 1.
/// Every such pair is a quotient of the triangle group <x,y | x^p, y^q, (xy)^r>,
/// so this is a lower bound on its order and is exact once a faithful pair exists.
inline std::size_t largest_triangle_quotient(int p, int q, int r, std::size_t degree) {
  std::vector<Perm> all;
  Perm perm = identity(degree);
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const Perm id = identity(degree);
  std::vector<Perm> as, bs;
  for (const auto& x : all) {
    if (power(x, p) == id) as.push_back(x);
    if (power(x, q) == id) bs.push_back(x);
  }
  std::size_t best = 0;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      if (power(compose(a, b), r) != id) continue;
      best = std::max(best, closure_order({a, b}, degree));
    }
  }
  return best;
}

/// A word as signed generator indices: +k+1 for x_k, -(k+1) for x_k^-1.
using RawWord = std::vector<int>;

inline RawWord random_raw_word(std::mt19937& rng, int generators, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(0, generators - 1);
  std::bernoulli_distribution inv(0.5);
  RawWord w;
  for (int i = len(rng); i > 0; --i) w.push_back((gen(rng) + 1) * (inv(rng) ? -1 : 1));
  return w;
}

/// A freely reduced random word of length 1..max_length.
inline RawWord random_reduced_word(std::mt19937& rng, int generators, int max_length) {
  std::uniform_int_distribution<int> len(1, max_length);
  std::uniform_int_distribution<int> gen(0, generators - 1);
  std::bernoulli_distribution inv(0.5);
  RawWord w;
  for (int i = len(rng); i > 0;) {
    const int l = (gen(rng) + 1) * (inv(rng) ? -1 : 1);
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
    --i;
  }
  return w;
}

inline std::string raw_to_text(const RawWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const int l : w) {
    if (!s.empty()) s += "*";
    s += names[std::abs(l) - 1];
    if (l < 0) s += "^-1";
  }
  return s;
}

/// Whether h(w) = target under the generator images in `bits` (bit i = h(x_i)).
inline bool raw_image(const RawWord& w, std::uint32_t bits) {
  int sum = 0;
  for (const int l : w) sum += (bits >> (std::abs(l) - 1)) & 1u;
  return sum % 2 == 1;
}

/// Brute force over all 2^n assignments.
inline bool hom_exists(int n, const std::vector<RawWord>& relators,
                       const std::vector<std::pair<RawWord, bool>>& constraints) {
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    bool ok = std::none_of(relators.begin(), relators.end(), [&](const auto& r) { return raw_image(r, bits); });
    for (const auto& [w, t] : constraints) ok = ok && raw_image(w, bits) == t;
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
