#include "orbisym_cli.hpp"

#include "orbisym/catalog.hpp"
#include "orbisym/coset_enum.hpp"
#include "orbisym/errors.hpp"
#include "orbisym/presentation.hpp"
#include "orbisym/z2_hom.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace orbisym::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::string_view kDefaultCatalogDir = "./catalog";

struct Settings {
  bool json = false;
  std::size_t max_cosets = EnumerationLimits{}.max_cosets;
  unsigned threads = 1;
  bool early_stop = false;
  std::string file;
  std::vector<std::string> subgroup;
  std::string dump;
  std::vector<std::string> maps;
  std::string case_id;
  std::optional<int> n;
};

struct Outcome {
  std::vector<ReportItem> items;
  Status status = Status::Match;
  int code = kSuccess;
  std::vector<std::string> text;  // human-readable lines
};

Presentation read_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read presentation file '" + path + "'");
  std::ostringstream content;
  content << in.rdbuf();
  return load_presentation(content.str());
}

std::vector<CatalogEntry> load_catalog_from_env() {
  const char* env = std::getenv("ORBISYM_CATALOG");
  const std::filesystem::path dir = env != nullptr && *env != '\0' ? env : std::string(kDefaultCatalogDir);
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    if (env != nullptr && *env != '\0') {
      throw InvalidParameter("ORBISYM_CATALOG='" + dir.string() + "' is not a directory");
    }
    return builtin_cases();
  }
  auto entries = load_catalog_dir(dir);
  const bool has_files = std::any_of(entries.begin(), entries.end(),
                                     [](const auto& e) { return !std::holds_alternative<FamilyRef>(e.scenario); });
  return has_files ? entries : builtin_cases();
}

EnumerationLimits limits_of(const Settings& s) {
  EnumerationLimits limits;
  limits.max_cosets = s.max_cosets;
  return limits;
}

RunOptions run_options(const Settings& s) {
  RunOptions options;
  options.limits = limits_of(s);
  options.threads = s.threads;
  options.early_stop = s.early_stop;
  return options;
}

int code_for(Status status) {
  switch (status) {
    case Status::Match: return kSuccess;
    case Status::Mismatch: return kMismatch;
    case Status::Error: return kInputError;
  }
  return kInputError;
}

std::string describe(const ReportItem& item) {
  std::string line = std::string(to_string(item.status)) + "  " + item.id;
  if (item.order) line += "  order=" + std::to_string(*item.order);
  if (item.index) line += "  index=" + std::to_string(*item.index);
  if (item.orientable) line += std::string("  ") + (*item.orientable ? "orientable" : "non-orientable");
  if (item.surface) line += "  " + *item.surface;
  if (!item.detail.empty()) line += "  (" + item.detail + ")";
  return line;
}

Outcome cmd_order(const Settings& s) {
  const auto start = Clock::now();
  const Presentation p = read_presentation(s.file);
  const std::size_t order = group_order(p, limits_of(s));
  ReportItem item;
  item.id = s.file;
  item.order = order;
  item.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return {{item}, Status::Match, kSuccess, {std::to_string(order)}};
}

Outcome cmd_index(const Settings& s) {
  const auto start = Clock::now();
  const Presentation p = read_presentation(s.file);
  std::vector<Word> subgroup;
  for (const auto& text : s.subgroup) {
    for (auto& w : p.parse_list(text)) subgroup.push_back(std::move(w));
  }
  const CosetTable table = enumerate(p, subgroup, limits_of(s));
  if (!s.dump.empty()) {
    std::ofstream out(s.dump);
    if (!out) throw InvalidParameter("cannot write '" + s.dump + "'");
    write_tsv(table, out);
  }
  ReportItem item;
  item.id = s.file;
  item.index = table.n_cosets();
  item.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return {{item}, Status::Match, kSuccess, {std::to_string(table.n_cosets())}};
}

Outcome cmd_hom2(const Settings& s, Json& extra) {
  const auto start = Clock::now();
  const Presentation p = read_presentation(s.file);
  std::vector<Z2Constraint> constraints;
  for (const auto& map : s.maps) {
    const auto eq = map.rfind('=');
    if (eq == std::string::npos) throw InvalidParameter("--map expects word=bit, got '" + map + "'");
    const std::string bit(trim(std::string_view(map).substr(eq + 1)));
    if (bit != "0" && bit != "1") throw InvalidParameter("--map target must be 0 or 1, got '" + bit + "'");
    constraints.push_back({p.parse(std::string_view(map).substr(0, eq)), bit == "1"});
  }
  const Z2HomResult result = solve_hom_to_z2(p, constraints);
  ReportItem item;
  item.id = s.file;
  item.detail = result.solvable ? "solvable" : "unsolvable";
  item.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  std::string line = item.detail;
  extra["solvable"] = result.solvable;
  if (result.assignment) {
    Json witness = Json::object();
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      const int bit = (*result.assignment)[i] ? 1 : 0;
      witness[p.generator_names()[i]] = bit;
      line += " " + p.generator_names()[i] + "=" + std::to_string(bit);
    }
    extra["assignment"] = witness;
  }
  return {{item}, Status::Match, kSuccess, {line}};
}

Outcome from_reports(const std::vector<CaseReport>& reports) {
  Outcome outcome;
  for (const auto& report : reports) {
    for (const auto& item : report.items) {
      outcome.text.push_back(describe(item));
      outcome.items.push_back(item);
    }
    outcome.status = combine(outcome.status, report.status);
  }
  outcome.code = code_for(outcome.status);
  outcome.text.push_back(outcome.status == Status::Match ? "MATCH" : outcome.status == Status::Mismatch ? "MISMATCH" : "ERROR");
  return outcome;
}

Outcome cmd_case(const Settings& s) {
  const auto catalog = load_catalog_from_env();
  return from_reports({run_case(catalog, s.case_id, s.n, run_options(s))});
}

Outcome cmd_reproduce_all(const Settings& s) {
  const auto catalog = load_catalog_from_env();
  Outcome outcome = from_reports(reproduce_all(catalog, run_options(s)));
  outcome.text.back() = outcome.status == Status::Match ? "PASS" : "FAIL";
  return outcome;
}

Outcome cmd_verify_table() {
  const auto start = Clock::now();
  const TableReport report = verify_table();
  Outcome outcome;
  std::map<std::string, ReportItem> by_row;
  std::vector<std::string> order;
  for (const auto& check : report.checks) {
    auto [it, inserted] = by_row.try_emplace(check.row);
    if (inserted) {
      it->second.id = check.row;
      order.push_back(check.row);
    }
    if (!check.passed) {
      it->second.status = Status::Mismatch;
      if (!it->second.detail.empty()) it->second.detail += "; ";
      it->second.detail += check.name + ": " + check.detail;
      outcome.text.push_back("FAIL  " + check.row + "  " + check.name + ": " + check.detail);
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  for (const auto& row : order) {
    by_row[row].elapsed_ms = elapsed;
    outcome.items.push_back(by_row[row]);
    outcome.status = combine(outcome.status, by_row[row].status);
  }
  outcome.code = code_for(outcome.status);
  outcome.text.push_back((report.passed() ? "PASS: " : "FAIL: ") + std::to_string(report.rows) + " rows, " +
                         std::to_string(report.checks.size()) + " checks, " + std::to_string(report.failures()) +
                         " failed");
  return outcome;
}

Json item_json(const ReportItem& item) {
  Json j;
  j["id"] = item.id;
  if (item.order) j["order"] = *item.order;
  if (item.index) j["index"] = *item.index;
  if (item.pattern) j["pattern"] = *item.pattern;
  if (item.orientable) j["orientable"] = *item.orientable;
  if (item.genus) j["genus"] = *item.genus;
  if (item.boundary) j["boundary"] = *item.boundary;
  if (item.surface) j["surface"] = *item.surface;
  j["status"] = std::string(to_string(item.status));
  if (!item.detail.empty()) j["detail"] = item.detail;
  j["elapsed_ms"] = item.elapsed_ms;
  return j;
}

void emit(const Settings& s, const std::string& command, const Outcome& outcome, const Json& extra,
          std::int64_t elapsed_ms, std::ostream& out) {
  if (!s.json) {
    for (const auto& line : outcome.text) out << line << '\n';
    return;
  }
  Json j;
  j["command"] = command;
  j["items"] = Json::array();
  for (const auto& item : outcome.items) j["items"].push_back(item_json(item));
  j["status"] = std::string(to_string(outcome.status));
  j["elapsed_ms"] = elapsed_ms;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  out << j.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  Settings s;
  CLI::App app{"Coset enumeration and surface classification for group actions on (S^3, surface)", "orbisym"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", s.json, "Emit a JSON report");
  app.add_option("--max-cosets", s.max_cosets, "Coset table size limit")->check(CLI::PositiveNumber);
  app.add_option("--threads", s.threads, "Worker threads for sweeps and families")->check(CLI::Range(1u, 256u));

  auto* order = app.add_subcommand("order", "Print the order of a finitely presented group");
  order->add_option("file", s.file, "Presentation file")->required();

  auto* index = app.add_subcommand("index", "Print the index of a subgroup");
  index->add_option("file", s.file, "Presentation file")->required();
  index->add_option("--subgroup", s.subgroup, "Subgroup generators, comma separated")->required();
  index->add_option("--dump", s.dump, "Write the coset table as TSV");

  auto* hom2 = app.add_subcommand("hom2", "Decide whether a homomorphism to Z2 with given values exists");
  hom2->add_option("file", s.file, "Presentation file")->required();
  hom2->add_option("--map", s.maps, "Constraint word=0|1 (repeatable)");

  auto* case_cmd = app.add_subcommand("case", "Reproduce one catalog case");
  case_cmd->add_option("id", s.case_id, "Case id")->required();
  case_cmd->add_option("--n", s.n, "Family parameter");
  case_cmd->add_flag("--early-stop", s.early_stop, "Evaluate one conjugator per double coset");

  auto* verify = app.add_subcommand("verify-table", "Check the maximal-order table arithmetically");

  auto* reproduce = app.add_subcommand("reproduce-all", "Reproduce every catalog case");
  reproduce->add_flag("--early-stop", s.early_stop, "Evaluate one conjugator per double coset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "orbisym: " << e.what() << '\n';
    return kInputError;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  const auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  };
  const auto fail = [&](int code, const std::string& message) {
    err << "orbisym: " << message << '\n';
    if (s.json) {
      Outcome o;
      ReportItem item;
      item.id = command;
      item.status = Status::Error;
      item.detail = message;
      o.items.push_back(item);
      o.status = Status::Error;
      emit(s, command, o, Json::object(), elapsed(), out);
    }
    return code;
  };

  try {
    Json extra = Json::object();
    Outcome outcome;
    if (*order) {
      outcome = cmd_order(s);
    } else if (*index) {
      outcome = cmd_index(s);
    } else if (*hom2) {
      outcome = cmd_hom2(s, extra);
    } else if (*case_cmd) {
      outcome = cmd_case(s);
    } else if (*verify) {
      outcome = cmd_verify_table();
    } else {
      (void)reproduce;
      outcome = cmd_reproduce_all(s);
    }
    emit(s, command, outcome, extra, elapsed(), out);
    return outcome.code;
  } catch (const LimitExceeded& e) {
    return fail(kResourceLimit, e.what());
  } catch (const Error& e) {
    return fail(kInputError, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(kInputError, e.what());
  }
}

}  // namespace orbisym::cli
