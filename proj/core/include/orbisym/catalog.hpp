#pragma once

#include "orbisym/scenario.hpp"
#include "orbisym/surface.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orbisym {

struct FamilyRef {
  Family family;
};

using CaseScenario = std::variant<EdgeScenario, DashedArcScenario, FamilyRef>;

/// A reproducible computation with its expected outcome. For family entries
/// the expectations depend on n and come from the closed forms.
struct CatalogEntry {
  std::string id;
  CaseScenario scenario;
  std::optional<std::size_t> expected_order;
  std::set<SurfaceType> expected_surfaces;
};

// ---------------------------------------------------------------------------
// Results table

enum class AlphaRange {
  Fixed,      // a single alpha
  Square,     // alpha = k^2, k not in square_rule_exclusions()
  Remaining,  // every alpha not covered by another rule
};

struct TableRow {
  AlphaRange range = AlphaRange::Fixed;
  std::int64_t alpha = 0;  // Fixed rows only
  MaxOrderKind m_class = MaxOrderKind::AlphaPlusOne;
  std::optional<std::uint64_t> printed_m;  // Fixed rows only
  std::vector<SurfaceType> surfaces;       // Fixed rows only
  /// No presentation for the acting group is available; checked arithmetically only.
  bool arithmetic_only = true;

  /// Surfaces listed for a given alpha (evaluates parametric rows).
  std::vector<SurfaceType> surfaces_at(std::int64_t alpha) const;
  std::string describe() const;
};

std::vector<TableRow> builtin_table();

struct TableCheck {
  std::string row;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TableReport {
  std::vector<TableCheck> checks;
  std::size_t rows = 0;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Parametric rows are checked for k in [2, square_limit] and alpha in [2, remaining_limit].
TableReport verify_table(std::span<const TableRow> rows, std::int64_t square_limit = 50,
                         std::int64_t remaining_limit = 500);
TableReport verify_table();

// ---------------------------------------------------------------------------
// Cases

/// Reads catalog text: presentation blocks followed by case blocks.
///
///     generators: x y z
///     relators: ...
///     alias leftArc = x*y
///     case orbifold-28-edge
///     scenario edge alpha=11
///     pattern G1: subgroup = x*y*x^-1, leftArc ; orient = hom(leftArc=1) | always
///     expect order=120 surfaces=S_{0,12},N_{6,6}
///     case orbifold-28-dashed
///     scenario dashed alpha=21 fixed=y arc=x*z hom(y=1, x*z=0)
///     expect order=120 surfaces=S_{5,12}
std::vector<CatalogEntry> load_catalog(std::string_view text);

/// Reads every *.cat file in `dir` (sorted by name) and appends the family entries.
std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir);

/// The compiled-in catalog text (same content as catalog/orbifold28.cat).
std::string_view builtin_catalog_text();

/// Compiled-in cases plus the two parametric families.
std::vector<CatalogEntry> builtin_cases();

enum class Status { Match, Mismatch, Error };

std::string_view to_string(Status s);
Status combine(Status a, Status b);

struct ReportItem {
  std::string id;
  std::optional<std::size_t> order;
  std::optional<std::size_t> index;
  std::optional<std::string> pattern;
  std::optional<bool> orientable;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> boundary;
  std::optional<std::string> surface;
  Status status = Status::Match;
  std::string detail;
  std::int64_t elapsed_ms = 0;
};

struct CaseReport {
  std::string id;
  std::vector<ReportItem> items;
  Status status = Status::Match;
};

struct RunOptions {
  EnumerationLimits limits;
  unsigned threads = 1;
  bool early_stop = false;
  /// Family parameter range used when no n is given.
  int family_min_n = 3;
  int family_max_n = 50;
};

const CatalogEntry& find_case(std::span<const CatalogEntry> catalog, std::string_view id);

/// Runs one case and compares with its expectations. Throws UnknownCase,
/// LimitExceeded, or InvalidParameter (n given for a non-family case).
CaseReport run_case(std::span<const CatalogEntry> catalog, std::string_view id,
                    std::optional<int> n = std::nullopt, const RunOptions& options = {});

/// Runs every case, families over the full parameter range. Errors are
/// captured as items with status Error.
std::vector<CaseReport> reproduce_all(std::span<const CatalogEntry> catalog, const RunOptions& options = {});

}  // namespace orbisym
