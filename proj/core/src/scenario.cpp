#include "orbisym/scenario.hpp"

#include "orbisym/errors.hpp"
#include "orbisym/perm_group.hpp"
#include "parallel.hpp"

#include <array>

namespace orbisym {

OrientabilityRule OrientabilityRule::z2_hom(std::vector<Z2Constraint> constraints) {
  if (constraints.empty()) throw InvalidParameter("Z2 orientability rule needs at least one constraint");
  return OrientabilityRule(Kind::Z2Hom, std::move(constraints));
}

bool OrientabilityRule::decide(const Presentation& p) const {
  if (kind_ == Kind::AlwaysOrientable) return true;
  return solve_hom_to_z2(p, constraints_).solvable;
}

namespace {

PatternOutcome evaluate_pattern(const Presentation& p, std::int64_t alpha, const std::string& name,
                                std::span<const Word> subgroup, bool orientable,
                                const EnumerationLimits& limits) {
  const std::size_t index = subgroup_index(p, subgroup, limits);
  try {
    return {name, std::nullopt, index, orientable,
            classify_surface(alpha, static_cast<std::int64_t>(index), orientable)};
  } catch (const ParityError& e) {
    throw ParityError("pattern " + name + ": " + e.what());
  } catch (const NegativeGenus& e) {
    throw NegativeGenus("pattern " + name + ": " + e.what());
  }
}

void check_alpha(std::int64_t alpha) {
  if (alpha < 2) throw InvalidParameter("scenario algebraic genus must be at least 2");
}

}  // namespace

ScenarioResult evaluate_edge_scenario(const EdgeScenario& s, const EnumerationLimits& limits) {
  check_alpha(s.alpha);
  ScenarioResult result;
  for (const auto& pattern : s.patterns) {
    if (pattern.subgroup_words.empty()) {
      throw InvalidParameter("pattern " + pattern.name + " has no subgroup generators");
    }
    const bool orientable = pattern.rule.decide(s.presentation);
    PatternOutcome outcome =
        evaluate_pattern(s.presentation, s.alpha, pattern.name, pattern.subgroup_words, orientable, limits);
    result.surfaces.insert(outcome.surface);
    result.per_pattern.push_back(std::move(outcome));
  }
  return result;
}

ScenarioResult evaluate_dashed_arc_scenario(const DashedArcScenario& s, const SweepOptions& options) {
  check_alpha(s.alpha);
  const Presentation& p = s.presentation;
  p.check_word(s.fixed_word);
  p.check_word(s.arc_word);

  const bool reflection_orientable = solve_hom_to_z2(p, s.hom_constraints).solvable;

  ScenarioResult result;
  std::vector<Word> conjugators;
  if (options.conjugators) {
    conjugators = *options.conjugators;
    for (const auto& c : conjugators) p.check_word(c);
  } else {
    const CosetTable regular = enumerate(p, {}, options.limits);
    result.group_order = regular.n_cosets();
    const PermGroup g = permutation_rep(regular);
    const ElementList elements = enumerate_elements(g, options.max_order);

    if (!options.early_stop) {
      for (const auto& e : elements.entries()) conjugators.push_back(e.word);
    } else {
      const Permutation fixed = evaluate_word(g, s.fixed_word);
      const Permutation arc = evaluate_word(g, s.arc_word);
      std::vector<Permutation> left;
      std::vector<Permutation> right;
      for (const auto& e : elements.entries()) {
        if (e.permutation.then(fixed) == fixed.then(e.permutation)) left.push_back(e.permutation);
        if (e.permutation.then(arc) == arc.then(e.permutation)) right.push_back(e.permutation);
      }
      std::vector<bool> covered(elements.size(), false);
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (covered[i]) continue;
        conjugators.push_back(elements[i].word);
        for (const auto& h : left) {
          const Permutation hc = h.then(elements[i].permutation);
          for (const auto& k : right) covered[*elements.find(hc.then(k))] = true;
        }
      }
    }
  }

  const std::array<std::string, 4> names{"loop", "loop-inverse", "reflection", "reflection-inverse"};
  std::vector<std::optional<std::vector<PatternOutcome>>> slots(conjugators.size());

  detail::parallel_for(conjugators.size(), options.threads, [&](std::size_t i) {
    const Word& c = conjugators[i];
    const Word arc_c = conjugate(s.arc_word, c);
    const std::array<Word, 2> span_words{s.fixed_word, arc_c};
    if (subgroup_index(p, span_words, options.limits) != 1) return;

    const Word arc_inv_c = conjugate(s.arc_word.inverse(), c);
    const std::array<std::vector<Word>, 4> subgroups{{
        {s.fixed_word * arc_c},
        {s.fixed_word.inverse() * arc_c},
        {s.fixed_word, conjugate(s.fixed_word, arc_c)},
        {s.fixed_word, conjugate(s.fixed_word, arc_inv_c)},
    }};
    std::vector<PatternOutcome> outcomes;
    for (std::size_t k = 0; k < subgroups.size(); ++k) {
      const bool orientable = k < 2 ? true : reflection_orientable;
      PatternOutcome o = evaluate_pattern(p, s.alpha, names[k], subgroups[k], orientable, options.limits);
      o.conjugator = i;
      outcomes.push_back(std::move(o));
    }
    slots[i] = std::move(outcomes);
  });

  result.conjugators_visited = conjugators.size();
  for (auto& slot : slots) {
    if (!slot) continue;
    ++result.conjugators_connected;
    for (auto& o : *slot) {
      result.surfaces.insert(o.surface);
      result.per_pattern.push_back(std::move(o));
    }
  }
  return result;
}

std::string_view family_name(Family family) { return family == Family::F15E ? "15E" : "19"; }

std::string_view embedding_name(Embedding embedding) {
  switch (embedding) {
    case Embedding::A: return "A";
    case Embedding::B: return "B";
    case Embedding::Unique: return "unique";
  }
  return "?";
}

std::vector<Embedding> family_embeddings(Family family) {
  if (family == Family::F15E) return {Embedding::A, Embedding::B};
  return {Embedding::Unique};
}

namespace {

void check_family_args(Family family, int n, Embedding embedding) {
  if (n < 3) throw InvalidParameter("family parameter n must be at least 3, got " + std::to_string(n));
  const bool ok = family == Family::F15E ? embedding != Embedding::Unique : embedding == Embedding::Unique;
  if (!ok) {
    throw InvalidParameter("embedding " + std::string(embedding_name(embedding)) + " does not apply to family " +
                           std::string(family_name(family)));
  }
}

}  // namespace

std::int64_t family_alpha(Family family, int n) {
  const std::int64_t m = n - 1;
  return family == Family::F15E ? m : m * m;
}

SurfaceType family_closed_form(Family family, int n, Embedding embedding) {
  check_family_args(family, n, embedding);
  const std::int64_t k = n;
  if (family == Family::F19) return {true, (k - 1) * (k - 2) / 2, k};
  if (embedding == Embedding::A) return {true, 0, k};
  return k % 2 == 1 ? SurfaceType{true, (k - 1) / 2, 1} : SurfaceType{true, (k - 2) / 2, 2};
}

FamilyEvaluation evaluate_family_detailed(Family family, int n, Embedding embedding,
                                          const EnumerationLimits& limits) {
  check_family_args(family, n, embedding);
  Presentation cover = family == Family::F15E ? family_15E(n) : family_19(n);
  const Word x = Word::generator(GeneratorId{0});
  const Word y = Word::generator(GeneratorId{1});

  BoundaryPattern pattern;
  if (embedding == Embedding::A) {
    // Boundary generated by x and y x y^-1 (= x); x is a reflection boundary.
    pattern = {"A", {x}, OrientabilityRule::z2_hom({{x, true}})};
  } else {
    pattern = {std::string(embedding_name(embedding)), {x * y}, OrientabilityRule::always()};
  }

  const std::size_t order = group_order(cover, limits);
  const EdgeScenario scenario{std::move(cover), family_alpha(family, n), {std::move(pattern)}};
  const ScenarioResult result = evaluate_edge_scenario(scenario, limits);
  const PatternOutcome& outcome = result.per_pattern.front();

  const SurfaceType expected = family_closed_form(family, n, embedding);
  if (outcome.surface != expected) {
    throw MismatchError("family " + std::string(family_name(family)) + " n=" + std::to_string(n) +
                        " embedding " + std::string(embedding_name(embedding)) + ": computed " +
                        to_string(outcome.surface) + ", closed form " + to_string(expected));
  }
  return {family, n, embedding, scenario.alpha, order, outcome.index, outcome.orientable, outcome.surface};
}

SurfaceType evaluate_family(Family family, int n, Embedding embedding, const EnumerationLimits& limits) {
  return evaluate_family_detailed(family, n, embedding, limits).surface;
}

}  // namespace orbisym
