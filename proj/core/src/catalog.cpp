#include "orbisym/catalog.hpp"

#include "orbisym/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace orbisym {

namespace {

constexpr std::string_view kBuiltinCatalog = R"(# Orbifold 28: tetrahedral spherical 3-orbifold, Wirtinger generators.
generators: x y z
relators: x^5 y^2 z^2 (x*z)^3 (x*y)^2 (y*z^-1)^2
alias midarc = x*y*z^-1*x^-1
alias rightArc1 = x*y*x^-1
alias rightArc2 = x*z*x^-1
alias leftArc = x*y

# Singular edge a'. The boundary meets leftArc and one of the right arcs,
# possibly twisted once around the edge by midarc.
case orbifold-28-edge
scenario edge alpha=11
pattern G1: subgroup = rightArc1, leftArc ; orient = hom(midarc=1, rightArc1=1, leftArc=1)
pattern G2: subgroup = rightArc1, midarc*leftArc*midarc^-1 ; orient = hom(midarc=1, rightArc1=1, leftArc=1)
pattern G3: subgroup = rightArc2, leftArc ; orient = hom(midarc=1, rightArc2=1, leftArc=1)
pattern G4: subgroup = rightArc2, midarc*leftArc*midarc^-1 ; orient = hom(midarc=1, rightArc2=1, leftArc=1)
expect order=120 surfaces=S_{0,12},N_{6,6}

# Dashed arc from the index-2 edge y to the index-3 edge x*z, in every position c*(x*z)*c^-1.
case orbifold-28-dashed
scenario dashed alpha=21 fixed=y arc=x*z hom(y=1, x*z=0)
expect order=120 surfaces=S_{5,12}
)";

[[noreturn]] void catalog_error(std::size_t line, const std::string& what) {
  throw SyntaxError("catalog line " + std::to_string(line) + ": " + what, 0);
}

// Splits on `sep` outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && text[i] == sep) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  return parts;
}

// Whitespace-separated tokens; parentheses keep their contents together.
std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    int depth = 0;
    while (i < text.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      ++i;
    }
    out.push_back(text.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_integer(std::string_view text, std::size_t line) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    catalog_error(line, "expected integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<Z2Constraint> parse_hom(std::string_view text, const Presentation& p, std::size_t line) {
  text = trim(text);
  if (!text.starts_with("hom(") || !text.ends_with(")")) catalog_error(line, "expected hom(...)");
  const std::string_view body = text.substr(4, text.size() - 5);
  std::vector<Z2Constraint> constraints;
  if (trim(body).empty()) return constraints;
  for (const auto part : split_top_level(body, ',')) {
    const auto eq = part.rfind('=');
    if (eq == std::string_view::npos) catalog_error(line, "constraint needs '=': " + std::string(part));
    const std::string_view bit = trim(part.substr(eq + 1));
    if (bit != "0" && bit != "1") catalog_error(line, "constraint target must be 0 or 1");
    constraints.push_back({p.parse(part.substr(0, eq)), bit == "1"});
  }
  return constraints;
}

BoundaryPattern parse_pattern(std::string_view text, const Presentation& p, std::size_t line) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) catalog_error(line, "pattern needs '<name>:'");
  BoundaryPattern pattern;
  pattern.name = std::string(trim(text.substr(0, colon)));
  if (pattern.name.empty()) catalog_error(line, "pattern name is empty");
  bool have_subgroup = false;
  for (const auto clause : split_top_level(text.substr(colon + 1), ';')) {
    const auto eq = clause.find('=');
    if (eq == std::string_view::npos) catalog_error(line, "pattern clause needs '='");
    const std::string_view key = trim(clause.substr(0, eq));
    const std::string_view value = trim(clause.substr(eq + 1));
    if (key == "subgroup") {
      pattern.subgroup_words = p.parse_list(value);
      have_subgroup = true;
    } else if (key == "orient") {
      if (value == "always") {
        pattern.rule = OrientabilityRule::always();
      } else {
        pattern.rule = OrientabilityRule::z2_hom(parse_hom(value, p, line));
      }
    } else {
      catalog_error(line, "unknown pattern clause '" + std::string(key) + "'");
    }
  }
  if (!have_subgroup || pattern.subgroup_words.empty()) catalog_error(line, "pattern has no subgroup");
  return pattern;
}

std::int64_t scenario_alpha(const CaseScenario& s) {
  if (const auto* e = std::get_if<EdgeScenario>(&s)) return e->alpha;
  if (const auto* d = std::get_if<DashedArcScenario>(&s)) return d->alpha;
  return 0;
}

struct PendingCase {
  std::string id;
  std::size_t line = 0;
  std::optional<CaseScenario> scenario;
  std::optional<std::size_t> order;
  std::set<SurfaceType> surfaces;
  bool have_expect = false;
};

CatalogEntry finish(PendingCase&& c) {
  if (!c.scenario) catalog_error(c.line, "case " + c.id + " has no scenario");
  if (!c.have_expect) catalog_error(c.line, "case " + c.id + " has no expect line");
  if (const auto* e = std::get_if<EdgeScenario>(&*c.scenario); e && e->patterns.empty()) {
    catalog_error(c.line, "case " + c.id + " has no patterns");
  }
  const std::int64_t alpha = scenario_alpha(*c.scenario);
  for (const auto& s : c.surfaces) {
    if (algebraic_genus(s) != alpha) {
      throw InvalidParameter("case " + c.id + ": expected surface " + to_string(s) +
                             " does not have algebraic genus " + std::to_string(alpha));
    }
  }
  return {std::move(c.id), std::move(*c.scenario), c.order, std::move(c.surfaces)};
}

std::vector<CatalogEntry> family_entries() {
  return {{"15E", FamilyRef{Family::F15E}, std::nullopt, {}}, {"19", FamilyRef{Family::F19}, std::nullopt, {}}};
}

using Clock = std::chrono::steady_clock;

std::int64_t since_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string join_surfaces(const std::set<SurfaceType>& surfaces) {
  std::string out;
  for (const auto& s : surfaces) {
    if (!out.empty()) out += ",";
    out += to_string(s);
  }
  return out;
}

void finalize(CaseReport& report) {
  report.status = Status::Match;
  for (const auto& item : report.items) report.status = combine(report.status, item.status);
}

ReportItem summary_item(const CatalogEntry& entry, std::optional<std::size_t> order,
                        const std::set<SurfaceType>& computed) {
  ReportItem item;
  item.id = entry.id;
  item.order = order;
  item.surface = join_surfaces(computed);
  const bool order_ok = !entry.expected_order || order == entry.expected_order;
  const bool surfaces_ok = computed == entry.expected_surfaces;
  item.status = order_ok && surfaces_ok ? Status::Match : Status::Mismatch;
  if (!order_ok) {
    item.detail = "order " + (order ? std::to_string(*order) : std::string("?")) + ", expected " +
                  std::to_string(*entry.expected_order);
  }
  if (!surfaces_ok) {
    if (!item.detail.empty()) item.detail += "; ";
    item.detail += "surfaces {" + join_surfaces(computed) + "}, expected {" +
                   join_surfaces(entry.expected_surfaces) + "}";
  }
  return item;
}

ReportItem outcome_item(const std::string& id, const PatternOutcome& o, const std::set<SurfaceType>& expected) {
  ReportItem item;
  item.id = id;
  item.pattern = o.pattern;
  item.index = o.index;
  item.orientable = o.orientable;
  item.genus = o.surface.genus;
  item.boundary = o.surface.boundary;
  item.surface = to_string(o.surface);
  item.status = expected.contains(o.surface) ? Status::Match : Status::Mismatch;
  if (item.status == Status::Mismatch) item.detail = "surface not among the expected ones";
  return item;
}

ReportItem family_item(Family family, int n, Embedding embedding, const EnumerationLimits& limits) {
  const auto start = Clock::now();
  ReportItem item;
  item.id = std::string(family_name(family)) + "/n=" + std::to_string(n) + "/" +
            std::string(embedding_name(embedding));
  item.pattern = std::string(embedding_name(embedding));
  try {
    const FamilyEvaluation e = evaluate_family_detailed(family, n, embedding, limits);
    item.order = e.cover_order;
    item.index = e.index;
    item.orientable = e.orientable;
    item.genus = e.surface.genus;
    item.boundary = e.surface.boundary;
    item.surface = to_string(e.surface);
    const std::size_t expected_order =
        family == Family::F15E ? 2 * static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n;
    if (e.cover_order != expected_order) {
      item.status = Status::Mismatch;
      item.detail = "cover order " + std::to_string(e.cover_order) + ", expected " + std::to_string(expected_order);
    }
  } catch (const MismatchError& err) {
    item.status = Status::Mismatch;
    item.detail = err.what();
  } catch (const ClassificationError& err) {
    item.status = Status::Mismatch;
    item.detail = err.what();
  }
  item.elapsed_ms = since_ms(start);
  return item;
}

}  // namespace

// ---------------------------------------------------------------------------
// Table

std::vector<SurfaceType> TableRow::surfaces_at(std::int64_t a) const {
  switch (range) {
    case AlphaRange::Fixed: return a == alpha ? surfaces : std::vector<SurfaceType>{};
    case AlphaRange::Square: {
      const auto k = exact_sqrt(a);
      if (!k || *k < 2) return {};
      return {{true, *k * (*k - 1) / 2, *k + 1}};
    }
    case AlphaRange::Remaining: {
      std::vector<SurfaceType> out{{true, 0, a + 1}};
      if (a % 2 == 0) {
        out.push_back({true, a / 2, 1});
      } else {
        out.push_back({true, (a - 1) / 2, 2});
      }
      return out;
    }
  }
  return {};
}

std::string TableRow::describe() const {
  switch (range) {
    case AlphaRange::Fixed: return "alpha=" + std::to_string(alpha);
    case AlphaRange::Square: return "alpha=k^2";
    case AlphaRange::Remaining: return "alpha=remaining";
  }
  return "?";
}

std::vector<TableRow> builtin_table() {
  using K = MaxOrderKind;
  const auto S = [](std::int64_t g, std::int64_t b) { return SurfaceType{true, g, b}; };
  const auto N = [](std::int64_t g, std::int64_t b) { return SurfaceType{false, g, b}; };
  const auto fixed = [](std::int64_t alpha, K kind, std::uint64_t m, std::vector<SurfaceType> surfaces,
                        bool arithmetic_only = true) {
    return TableRow{AlphaRange::Fixed, alpha, kind, m, std::move(surfaces), arithmetic_only};
  };
  return {
      fixed(2, K::TwelveAlphaMinusOne, 12, {S(0, 3), S(1, 1)}),
      fixed(3, K::TwelveAlphaMinusOne, 24, {S(0, 4), N(1, 3)}),
      fixed(4, K::TwelveAlphaMinusOne, 36, {S(1, 3)}),
      fixed(5, K::TwelveAlphaMinusOne, 48, {S(0, 6), S(1, 4)}),
      fixed(9, K::TwelveAlphaMinusOne, 96, {S(2, 6), S(3, 4)}),
      fixed(11, K::TwelveAlphaMinusOne, 120, {S(0, 12), N(6, 6)}, false),
      fixed(25, K::TwelveAlphaMinusOne, 288, {S(7, 12), S(10, 6)}),
      fixed(97, K::TwelveAlphaMinusOne, 1152, {S(37, 24)}),
      fixed(121, K::TwelveAlphaMinusOne, 1440, {S(43, 36), S(55, 12)}),
      fixed(241, K::TwelveAlphaMinusOne, 2880, {S(73, 96), S(97, 48), N(206, 36)}),
      fixed(7, K::EightAlphaMinusOne, 48, {S(0, 8), N(4, 4)}),
      fixed(49, K::EightAlphaMinusOne, 384, {S(17, 16), S(21, 8)}),
      fixed(16, K::TwentyThirdsAlphaMinusOne, 100, {S(6, 5)}),
      fixed(19, K::TwentyThirdsAlphaMinusOne, 120, {S(0, 20), N(14, 6)}),
      fixed(361, K::TwentyThirdsAlphaMinusOne, 2400, {S(131, 100), S(151, 60), S(171, 20)}),
      fixed(21, K::SixAlphaMinusOne, 120, {S(5, 12)}, false),
      fixed(481, K::SixAlphaMinusOne, 2880, {S(205, 72), S(193, 96)}),
      fixed(41, K::TwentyFourFifthsAlphaMinusOne, 192, {N(30, 12)}),
      fixed(1681, K::ThirtySeventhsAlphaMinusOne, 7200, {N(1562, 120)}),
      fixed(841, K::SquareRootPlusOneSquared, 3600, {S(391, 60), S(406, 30)}),
      TableRow{AlphaRange::Square, 0, K::SquareRootPlusOneSquared, std::nullopt, {}, false},
      fixed(29, K::AlphaPlusOne, 120, {S(0, 30), S(9, 12), S(14, 2)}),
      TableRow{AlphaRange::Remaining, 0, K::AlphaPlusOne, std::nullopt, {}, false},
  };
}

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

TableReport verify_table(std::span<const TableRow> rows, std::int64_t square_limit, std::int64_t remaining_limit) {
  TableReport report;
  report.rows = rows.size();
  const auto check = [&](const std::string& row, const std::string& name, bool ok, std::string detail = {}) {
    report.checks.push_back({row, name, ok, ok ? std::string{} : std::move(detail)});
  };

  // Formula data: exceptional sets pairwise disjoint, excluded squares all exceptional.
  {
    std::map<std::int64_t, int> seen;
    for (const auto& ex : exceptional_alphas()) {
      for (const auto a : ex.alphas) ++seen[a];
    }
    bool disjoint = std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second == 1; });
    check("formula", "exceptional sets disjoint", disjoint, "an alpha appears in two exceptional sets");
    for (const auto k : square_rule_exclusions()) {
      check("formula", "k=" + std::to_string(k) + " excluded square is exceptional", seen.contains(k * k),
            std::to_string(k * k) + " falls through to no rule");
    }
  }

  const auto check_surfaces = [&](const std::string& row, std::int64_t alpha, const std::vector<SurfaceType>& surfaces) {
    for (const auto& s : surfaces) {
      std::int64_t got = -1;
      std::string detail;
      try {
        got = algebraic_genus(s);
      } catch (const Error& e) {
        detail = e.what();
      }
      if (detail.empty()) {
        detail = "alpha(" + to_string(s) + ") = " + std::to_string(got) + " != " + std::to_string(alpha);
      }
      check(row, "alpha of " + to_string(s), got == alpha, detail);
    }
  };

  // Where a parametric family's group order equals m_alpha, its surfaces must be listed.
  const auto check_family_realization = [&](const std::string& row, std::int64_t alpha, std::uint64_t m,
                                            const std::vector<SurfaceType>& listed) {
    const auto contains = [&](const SurfaceType& s) {
      return std::find(listed.begin(), listed.end(), s) != listed.end();
    };
    if (alpha + 1 >= 3 && m == static_cast<std::uint64_t>(4 * (alpha + 1))) {
      const int n = static_cast<int>(alpha + 1);
      for (const auto e : family_embeddings(Family::F15E)) {
        const SurfaceType s = family_closed_form(Family::F15E, n, e);
        check(row, "family 15E n=" + std::to_string(n) + " surface " + to_string(s) + " listed", contains(s),
              to_string(s) + " realizes m_alpha but is not listed");
      }
    }
    if (const auto k = exact_sqrt(alpha); k && *k >= 2 && m == static_cast<std::uint64_t>(4 * (*k + 1) * (*k + 1))) {
      const SurfaceType s = family_closed_form(Family::F19, static_cast<int>(*k + 1), Embedding::Unique);
      check(row, "family 19 n=" + std::to_string(*k + 1) + " surface " + to_string(s) + " listed", contains(s),
            to_string(s) + " realizes m_alpha but is not listed");
    }
  };

  for (const auto& row : rows) {
    const std::string name = row.describe();
    switch (row.range) {
      case AlphaRange::Fixed: {
        const MaxOrderClass m = m_alpha(row.alpha);
        check(name, "m_alpha class", m.kind == row.m_class,
              "formula " + std::string(m.label()) + ", row says " + std::string(label(row.m_class)));
        std::uint64_t row_value = 0;
        std::string divisibility;
        try {
          row_value = evaluate_max_order(row.m_class, row.alpha);
        } catch (const InvalidParameter& e) {
          divisibility = e.what();
        }
        check(name, "row formula exact", divisibility.empty(), divisibility);
        check(name, "m_alpha value", row.printed_m == m.value,
              "computed " + std::to_string(m.value) + ", printed " +
                  (row.printed_m ? std::to_string(*row.printed_m) : std::string("none")));
        check(name, "row formula value", divisibility.empty() && row_value == m.value,
              std::string(label(row.m_class)) + " gives " + std::to_string(row_value));
        check(name, "lower bound 4(a+1)", m.value >= static_cast<std::uint64_t>(4 * (row.alpha + 1)),
              std::to_string(m.value) + " below 4(a+1)");
        check(name, "surfaces listed", !row.surfaces.empty(), "row lists no surface");
        check_surfaces(name, row.alpha, row.surfaces);
        check_family_realization(name, row.alpha, m.value, row.surfaces);
        break;
      }
      case AlphaRange::Square: {
        const auto& excluded = square_rule_exclusions();
        for (std::int64_t k = 2; k <= square_limit; ++k) {
          if (std::find(excluded.begin(), excluded.end(), k) != excluded.end()) continue;
          const std::int64_t alpha = k * k;
          const std::string sub = name + " k=" + std::to_string(k);
          const MaxOrderClass m = m_alpha(alpha);
          const std::uint64_t expected = evaluate_max_order(MaxOrderKind::SquareRootPlusOneSquared, alpha);
          check(sub, "m_alpha value", m.value == expected,
                "m_alpha " + std::to_string(m.value) + ", 4(k+1)^2 = " + std::to_string(expected));
          check_surfaces(sub, alpha, row.surfaces_at(alpha));
        }
        break;
      }
      case AlphaRange::Remaining: {
        for (std::int64_t alpha = 2; alpha <= remaining_limit; ++alpha) {
          if (!is_remaining_number(alpha)) continue;
          const std::string sub = name + " a=" + std::to_string(alpha);
          const MaxOrderClass m = m_alpha(alpha);
          check(sub, "m_alpha class", m.kind == MaxOrderKind::AlphaPlusOne && m.value == static_cast<std::uint64_t>(4 * (alpha + 1)),
                "m_alpha " + std::to_string(m.value) + " via " + std::string(m.label()));
          check_surfaces(sub, alpha, row.surfaces_at(alpha));
        }
        break;
      }
    }
  }
  return report;
}

TableReport verify_table() {
  const auto rows = builtin_table();
  return verify_table(rows);
}

// ---------------------------------------------------------------------------
// Catalog files

std::vector<CatalogEntry> load_catalog(std::string_view text) {
  std::vector<CatalogEntry> entries;
  std::optional<PresentationBuilder> builder;
  std::optional<Presentation> presentation;
  std::optional<PendingCase> pending;

  const auto current_presentation = [&](std::size_t line) -> const Presentation& {
    if (!presentation) {
      if (!builder || !builder->has_generators()) catalog_error(line, "case before any presentation");
      presentation = builder->build();
    }
    return *presentation;
  };
  const auto flush = [&] {
    if (pending) entries.push_back(finish(std::move(*pending)));
    pending.reset();
  };

  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++line_number;
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    const std::string_view line = strip_comment(raw);
    if (line.empty()) continue;

    if (line.starts_with("generators:")) {
      flush();
      builder.emplace();
      presentation.reset();
    }
    if (!pending && !presentation && builder && builder->consume_line(raw, line_number)) continue;
    if (!builder && (line.starts_with("relators:") || line.starts_with("alias "))) {
      catalog_error(line_number, "presentation directive before 'generators:'");
    }

    const auto words = tokens(line);
    const std::string_view head = words.front();
    if (head == "case") {
      flush();
      if (words.size() != 2) catalog_error(line_number, "expected 'case <id>'");
      current_presentation(line_number);
      pending = PendingCase{std::string(words[1]), line_number, std::nullopt, std::nullopt, {}, false};
      if (std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.id == pending->id; })) {
        catalog_error(line_number, "duplicate case id '" + pending->id + "'");
      }
      continue;
    }
    if (!pending) catalog_error(line_number, "unexpected line outside a case: '" + std::string(line) + "'");
    const Presentation& p = current_presentation(line_number);

    if (head == "scenario") {
      if (pending->scenario) catalog_error(line_number, "case has two scenarios");
      if (words.size() < 3) catalog_error(line_number, "expected 'scenario <kind> alpha=<n> ...'");
      std::map<std::string_view, std::string_view> keys;
      std::vector<Z2Constraint> hom;
      std::size_t i = 2;
      for (; i < words.size(); ++i) {
        if (words[i] == "pattern") break;
        if (words[i].starts_with("hom(")) {
          hom = parse_hom(words[i], p, line_number);
          continue;
        }
        const auto eq = words[i].find('=');
        if (eq == std::string_view::npos) catalog_error(line_number, "expected key=value, got '" + std::string(words[i]) + "'");
        keys[words[i].substr(0, eq)] = words[i].substr(eq + 1);
      }
      if (!keys.contains("alpha")) catalog_error(line_number, "scenario needs alpha=");
      const std::int64_t alpha = parse_integer(keys["alpha"], line_number);
      if (words[1] == "edge") {
        EdgeScenario edge{p, alpha, {}};
        if (i < words.size()) {
          const auto offset = static_cast<std::size_t>(words[i].data() - line.data()) + std::string_view("pattern").size();
          edge.patterns.push_back(parse_pattern(line.substr(offset), p, line_number));
        }
        pending->scenario = std::move(edge);
      } else if (words[1] == "dashed") {
        if (!keys.contains("fixed") || !keys.contains("arc")) catalog_error(line_number, "dashed scenario needs fixed= and arc=");
        pending->scenario = DashedArcScenario{p, alpha, p.parse(keys["fixed"]), p.parse(keys["arc"]), std::move(hom)};
      } else {
        catalog_error(line_number, "unknown scenario kind '" + std::string(words[1]) + "'");
      }
      continue;
    }
    if (head == "pattern") {
      auto* edge = pending->scenario ? std::get_if<EdgeScenario>(&*pending->scenario) : nullptr;
      if (edge == nullptr) catalog_error(line_number, "pattern outside an edge scenario");
      edge->patterns.push_back(parse_pattern(line.substr(std::string_view("pattern").size()), p, line_number));
      continue;
    }
    if (head == "expect") {
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto eq = words[i].find('=');
        if (eq == std::string_view::npos) catalog_error(line_number, "expected key=value");
        const std::string_view key = words[i].substr(0, eq);
        const std::string_view value = words[i].substr(eq + 1);
        if (key == "order") {
          pending->order = static_cast<std::size_t>(parse_integer(value, line_number));
        } else if (key == "surfaces") {
          // Surfaces contain commas inside braces: split on "," only between '}' and 'S'/'N'.
          std::size_t pos = 0;
          while (pos < value.size()) {
            const auto close = value.find('}', pos);
            if (close == std::string_view::npos) catalog_error(line_number, "bad surface list");
            pending->surfaces.insert(parse_surface(value.substr(pos, close + 1 - pos)));
            pos = close + 1;
            if (pos < value.size() && value[pos] == ',') ++pos;
          }
        } else {
          catalog_error(line_number, "unknown expect key '" + std::string(key) + "'");
        }
      }
      pending->have_expect = true;
      continue;
    }
    catalog_error(line_number, "unrecognized directive '" + std::string(head) + "'");
  }
  flush();
  return entries;
}

std::vector<CatalogEntry> load_catalog_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cat") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> all;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw InvalidParameter("cannot read " + file.string());
    std::ostringstream content;
    content << in.rdbuf();
    for (auto& e : load_catalog(content.str())) {
      if (std::any_of(all.begin(), all.end(), [&](const auto& other) { return other.id == e.id; })) {
        throw InvalidParameter("case '" + e.id + "' defined twice (in " + file.string() + ")");
      }
      all.push_back(std::move(e));
    }
  }
  for (auto& e : family_entries()) {
    if (std::any_of(all.begin(), all.end(), [&](const auto& other) { return other.id == e.id; })) {
      throw InvalidParameter("case id '" + e.id + "' is reserved for a parametric family");
    }
    all.push_back(std::move(e));
  }
  return all;
}

std::string_view builtin_catalog_text() { return kBuiltinCatalog; }

std::vector<CatalogEntry> builtin_cases() {
  std::vector<CatalogEntry> all = load_catalog(kBuiltinCatalog);
  for (auto& e : family_entries()) all.push_back(std::move(e));
  return all;
}

// ---------------------------------------------------------------------------
// Running

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::Error: return "error";
  }
  return "error";
}

Status combine(Status a, Status b) {
  if (a == Status::Error || b == Status::Error) return Status::Error;
  if (a == Status::Mismatch || b == Status::Mismatch) return Status::Mismatch;
  return Status::Match;
}

const CatalogEntry& find_case(std::span<const CatalogEntry> catalog, std::string_view id) {
  const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& e) { return e.id == id; });
  if (it == catalog.end()) throw UnknownCase(std::string(id));
  return *it;
}

CaseReport run_case(std::span<const CatalogEntry> catalog, std::string_view id, std::optional<int> n,
                    const RunOptions& options) {
  const CatalogEntry& entry = find_case(catalog, id);
  CaseReport report{entry.id, {}, Status::Match};
  const auto start = Clock::now();

  if (const auto* family = std::get_if<FamilyRef>(&entry.scenario)) {
    std::vector<int> ns;
    if (n) {
      ns.push_back(*n);
    } else {
      for (int k = options.family_min_n; k <= options.family_max_n; ++k) ns.push_back(k);
    }
    for (const int k : ns) {
      if (k < 3) throw InvalidParameter("family parameter n must be at least 3");
    }
    const auto embeddings = family_embeddings(family->family);
    std::vector<ReportItem> items(ns.size() * embeddings.size());
    detail::parallel_for(items.size(), options.threads, [&](std::size_t i) {
      items[i] = family_item(family->family, ns[i / embeddings.size()], embeddings[i % embeddings.size()],
                             options.limits);
    });
    report.items = std::move(items);
    finalize(report);
    return report;
  }

  if (n) throw InvalidParameter("case '" + entry.id + "' takes no parameter n");

  if (const auto* edge = std::get_if<EdgeScenario>(&entry.scenario)) {
    const std::size_t order = group_order(edge->presentation, options.limits);
    const ScenarioResult result = evaluate_edge_scenario(*edge, options.limits);
    for (const auto& o : result.per_pattern) {
      report.items.push_back(outcome_item(entry.id + "/" + o.pattern, o, entry.expected_surfaces));
    }
    report.items.push_back(summary_item(entry, order, result.surfaces));
  } else {
    const auto& dashed = std::get<DashedArcScenario>(entry.scenario);
    SweepOptions sweep;
    sweep.limits = options.limits;
    sweep.threads = options.threads;
    sweep.early_stop = options.early_stop;
    const ScenarioResult result = evaluate_dashed_arc_scenario(dashed, sweep);
    // One item per distinct outcome of each pattern, in first-seen order.
    std::vector<std::pair<std::string, SurfaceType>> seen;
    std::map<std::pair<std::string, SurfaceType>, std::size_t> counts;
    for (const auto& o : result.per_pattern) {
      const auto key = std::make_pair(o.pattern, o.surface);
      if (counts[key]++ == 0) {
        seen.push_back(key);
        report.items.push_back(outcome_item(entry.id + "/" + o.pattern + "/" + to_string(o.surface), o,
                                            entry.expected_surfaces));
        report.items.back().detail.clear();
      }
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      auto& item = report.items[i];
      item.detail = std::to_string(counts[seen[i]]) + " of " + std::to_string(result.conjugators_connected) +
                    " connected conjugators (" + std::to_string(result.conjugators_visited) + " visited)";
      if (item.status == Status::Mismatch) item.detail += "; surface not among the expected ones";
    }
    report.items.push_back(summary_item(entry, result.group_order, result.surfaces));
  }
  for (auto& item : report.items) item.elapsed_ms = since_ms(start);
  finalize(report);
  return report;
}

std::vector<CaseReport> reproduce_all(std::span<const CatalogEntry> catalog, const RunOptions& options) {
  std::vector<const CatalogEntry*> sorted;
  for (const auto& e : catalog) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) { return a->id < b->id; });

  std::vector<CaseReport> reports;
  for (const auto* e : sorted) {
    try {
      reports.push_back(run_case(catalog, e->id, std::nullopt, options));
    } catch (const Error& err) {
      ReportItem item;
      item.id = e->id;
      item.status = Status::Error;
      item.detail = err.what();
      reports.push_back({e->id, {item}, Status::Error});
    }
  }
  return reports;
}

}  // namespace orbisym
