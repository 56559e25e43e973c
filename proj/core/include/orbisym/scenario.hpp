#pragma once

#include "orbisym/coset_enum.hpp"
#include "orbisym/presentation.hpp"
#include "orbisym/surface.hpp"
#include "orbisym/z2_hom.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbisym {

/// How the orientability of a preimage surface is decided.
class OrientabilityRule {
 public:
  enum class Kind {
    /// Every singular point of the quotient is isolated.
    AlwaysOrientable,
    /// The quotient has reflection boundary; orientable iff a Z2 homomorphism exists.
    Z2Hom,
  };

  static OrientabilityRule always() { return OrientabilityRule(Kind::AlwaysOrientable, {}); }
  /// Throws InvalidParameter when constraints is empty.
  static OrientabilityRule z2_hom(std::vector<Z2Constraint> constraints);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Z2Constraint>& constraints() const noexcept { return constraints_; }

  bool decide(const Presentation& p) const;

 private:
  OrientabilityRule(Kind kind, std::vector<Z2Constraint> constraints)
      : kind_(kind), constraints_(std::move(constraints)) {}

  Kind kind_;
  std::vector<Z2Constraint> constraints_;
};

/// One candidate boundary subgroup for a neighbourhood of a singular edge.
struct BoundaryPattern {
  std::string name;
  std::vector<Word> subgroup_words;
  OrientabilityRule rule = OrientabilityRule::always();
};

struct EdgeScenario {
  Presentation presentation;
  std::int64_t alpha = 2;
  std::vector<BoundaryPattern> patterns;
};

/// A regular arc joining an index-2 edge (fixed_word) to an index-3 edge
/// (arc_word). Every conjugate c*arc*c^-1 is a candidate position.
struct DashedArcScenario {
  Presentation presentation;
  std::int64_t alpha = 2;
  Word fixed_word;
  Word arc_word;
  std::vector<Z2Constraint> hom_constraints;
};

struct PatternOutcome {
  std::string pattern;
  /// Position in the conjugator sweep; empty for edge scenarios.
  std::optional<std::size_t> conjugator;
  std::size_t index = 0;
  bool orientable = true;
  SurfaceType surface;
};

struct ScenarioResult {
  std::set<SurfaceType> surfaces;
  std::vector<PatternOutcome> per_pattern;
  /// |G| when the evaluation enumerated the group.
  std::optional<std::size_t> group_order;
  std::size_t conjugators_visited = 0;
  std::size_t conjugators_connected = 0;
};

struct SweepOptions {
  EnumerationLimits limits;
  unsigned threads = 1;
  /// Evaluate one conjugator per double coset C(fixed) c C(arc); the others
  /// give conjugate subgroups and hence identical outcomes.
  bool early_stop = false;
  /// Sweep over these words instead of all group elements.
  std::optional<std::vector<Word>> conjugators;
  std::size_t max_order = kDefaultMaxOrder;
};

/// Boundary count from the subgroup index, orientability from the rule,
/// genus from the algebraic genus. Throws ClassificationError when a pattern
/// yields no valid surface.
ScenarioResult evaluate_edge_scenario(const EdgeScenario& s, const EnumerationLimits& limits = {});

/// Sweeps every conjugator c in G. When <fixed, c*arc*c^-1> = G the quotient is
/// connected and four boundary subgroups are evaluated: two loops around the
/// arc (always orientable) and two reflection variants (Z2 rule).
ScenarioResult evaluate_dashed_arc_scenario(const DashedArcScenario& s, const SweepOptions& options = {});

enum class Family { F15E, F19 };
enum class Embedding { A, B, Unique };

struct FamilyEvaluation {
  Family family;
  int n;
  Embedding embedding;
  std::int64_t alpha;
  std::size_t cover_order;
  std::size_t index;
  bool orientable;
  SurfaceType surface;
};

std::int64_t family_alpha(Family family, int n);
SurfaceType family_closed_form(Family family, int n, Embedding embedding);
std::vector<Embedding> family_embeddings(Family family);

/// Computes the surface through coset enumeration on the cover group and
/// checks it against the closed form. Throws MismatchError on disagreement.
FamilyEvaluation evaluate_family_detailed(Family family, int n, Embedding embedding,
                                          const EnumerationLimits& limits = {});
SurfaceType evaluate_family(Family family, int n, Embedding embedding, const EnumerationLimits& limits = {});

std::string_view family_name(Family family);
std::string_view embedding_name(Embedding embedding);

}  // namespace orbisym
