// klbraid: compute braid KL polynomials, enumerate the families counted by
// their coefficients, and run the verification suites.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "klbraid/cache.hpp"
#include "klbraid/cactus.hpp"
#include "klbraid/klcore.hpp"
#include "klbraid/oracles.hpp"
#include "klbraid/spgen.hpp"
#include "klbraid/verify.hpp"

namespace {

using namespace klbraid;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

nlohmann::ordered_json table_json(const Table& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
    rows.push_back(obj);
  }
  return rows;
}

void print_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  }
}

void print_md(std::ostream& out, const Table& t) {
  out << '|';
  for (const auto& c : t.columns) out << ' ' << md_field(c) << " |";
  out << "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& row : t.rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << md_field(cell) << " |";
    out << '\n';
  }
}

struct Config {
  std::string format = "md";
  std::string cache_dir;
  bool no_cache = false;

  PolyCache cache() const {
    return PolyCache(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));
  }
};

// Prints a single table, wrapping it with `extra` fields in JSON mode.
void emit(const Config& cfg, const Table& t, nlohmann::ordered_json extra = nlohmann::ordered_json::object()) {
  if (cfg.format == "json") {
    extra["rows"] = table_json(t);
    std::cout << extra.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    print_csv(std::cout, t);
  } else {
    print_md(std::cout, t);
  }
}

PolyKind parse_kind(const std::string& kind) {
  if (kind == "P") return PolyKind::kP;
  if (kind == "Q") return PolyKind::kQ;
  throw UsageError("polynomial kind must be P or Q");
}

int cmd_poly(const Config& cfg, const std::string& kind_name, int n) {
  const PolyKind kind = parse_kind(kind_name);
  if (n < 1) throw UsageError("n must be at least 1");
  KlTable table;
  const PolyCache cache = cfg.cache();
  if (!cfg.no_cache) {
    for (int k = 1; k <= n; ++k) {
      for (PolyKind c : {PolyKind::kP, PolyKind::kQ}) {
        try {
          if (auto poly = cache.load(c, k)) table.insert(c, k, *poly, Provenance::kCache);
        } catch (const CacheError& e) {
          std::cerr << "warning: ignoring cache entry: " << e.what() << '\n';
        }
      }
    }
  }
  const IntPoly poly = kind == PolyKind::kP ? kl_poly_braid(n, table) : inv_kl_poly_braid(n, table);
  const Provenance provenance = table.find(kind, n)->provenance;
  if (!cfg.no_cache) {
    for (PolyKind c : {PolyKind::kP, PolyKind::kQ}) {
      for (int k : table.keys(c)) {
        auto entry = table.find(c, k);
        if (entry->provenance != Provenance::kRecursion) continue;
        try {
          cache.store(c, k, entry->poly);
        } catch (const CacheError& e) {
          std::cerr << "warning: cache not written: " << e.what() << '\n';
        }
      }
    }
  }
  Table t{{"i", "coeff"}, {}};
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
    t.rows.push_back({std::to_string(i), poly.coeffs()[i].get_str()});
  }
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = kind_name;
    j["n"] = n;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : poly.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    j["provenance"] = to_string(provenance);
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    print_csv(std::cout, t);
  } else {
    std::cout << kind_name << "_{B_" << n << "}(t) = " << poly.to_string() << "\n\n";
    print_md(std::cout, t);
  }
  return 0;
}

struct EnumArgs {
  int n = -1;
  int k = -1;
  int m = -1;
  int vertices = -1;
  int p = -1;
  std::string type;
  bool list = false;
};

int require(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string("missing ") + flag);
  return value;
}

HusimiType parse_type(const std::string& text) {
  std::vector<int> counts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      counts.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--type expects comma-separated nonnegative counts n_2,n_3,...");
    }
  }
  return HusimiType::of(counts);
}

int cmd_enum(const Config& cfg, const std::string& family, const EnumArgs& a) {
  Integer count;
  std::vector<std::string> items;
  std::string label;
  if (family == "s") {
    const int n = require(a.n, "--n");
    const int k = require(a.k, "--k");
    label = "S(" + std::to_string(n) + "," + std::to_string(k) + ")";
    if (a.list) {
      for (const auto& m : enumerate_S(n, k)) items.push_back(m.to_string());
      count = static_cast<unsigned long>(items.size());
    } else {
      count = count_S(n, k);
    }
  } else if (family == "cacti") {
    const int v = require(a.vertices, "--vertices");
    if (v < 1 || v > kMaxVertex) throw UsageError("--vertices must be in 1.." + std::to_string(kMaxVertex));
    label = "cacti on " + std::to_string(v) + " vertices";
    for (const auto& g : enumerate_cacti(prefix_set(v))) items.push_back(g.to_string());
    count = static_cast<unsigned long>(items.size());
  } else if (family == "deserts" || family == "rdeserts") {
    const int n = require(a.n, "--n");
    const int m = require(a.m, "--m");
    label = (family == "deserts" ? "Des_" : "RDes_") + std::to_string(m) + "(" + std::to_string(n) + ")";
    if (family == "deserts") {
      for (const auto& g : enumerate_deserts(n, m)) items.push_back(g.to_string());
    } else {
      for (const auto& d : enumerate_rooted_deserts(n, m)) {
        items.push_back(d.graph.to_string() + " roots " + format_set(d.roots));
      }
    }
    count = static_cast<unsigned long>(items.size());
  } else if (family == "husimi") {
    const int p = require(a.p, "--p");
    if (a.type.empty()) throw UsageError("missing --type");
    const HusimiType type = parse_type(a.type);
    label = "Husimi type " + type.to_string() + " on " + std::to_string(p) + " vertices";
    for (const auto& g : enumerate_husimi(p, type)) items.push_back(g.to_string());
    count = static_cast<unsigned long>(items.size());
  } else {
    throw UsageError("unknown family: " + family);
  }
  Table t;
  if (a.list) {
    t.columns = {"index", "object"};
    for (std::size_t i = 0; i < items.size(); ++i) t.rows.push_back({std::to_string(i + 1), items[i]});
  } else {
    t.columns = {"family", "count"};
    t.rows.push_back({label, count.get_str()});
  }
  nlohmann::ordered_json extra;
  extra["family"] = label;
  extra["count"] = count.get_str();
  if (!a.list) {
    if (cfg.format == "json") {
      std::cout << extra.dump(2) << '\n';
    } else if (cfg.format == "csv") {
      print_csv(std::cout, t);
    } else {
      std::cout << count.get_str() << '\n';
    }
    return 0;
  }
  emit(cfg, t, extra);
  return 0;
}

VerifyMode parse_mode(const std::string& mode) {
  if (mode == "closed-form") return VerifyMode::kClosedForm;
  if (mode == "exhaustive") return VerifyMode::kExhaustive;
  if (mode == "both") return VerifyMode::kBoth;
  throw UsageError("--mode must be closed-form, exhaustive or both");
}

int cmd_verify(const Config& cfg, const std::string& suite, int max_n, const std::string& mode) {
  SuiteOptions options;
  if (max_n > 0) options.max_n = max_n;
  options.mode = parse_mode(mode);
  std::vector<std::string> ids;
  if (suite == "all") {
    for (const auto& s : verify_suites()) ids.push_back(s.id);
  } else {
    bool known = false;
    for (const auto& s : verify_suites()) known = known || s.id == suite;
    if (!known) throw UsageError("unknown suite: " + suite);
    ids.push_back(suite);
  }
  std::vector<ReportRow> rows;
  for (const auto& id : ids) {
    for (auto& row : run_suite(id, options)) rows.push_back(std::move(row));
  }
  Table t{{"suite", "parameter", "lhs", "rhs", "pass"}, {}};
  Table failures{t.columns, {}};
  for (const auto& r : rows) {
    std::vector<std::string> cells{r.suite, r.parameter, r.lhs, r.rhs, r.pass ? "true" : "false"};
    if (!r.pass) failures.rows.push_back(cells);
    t.rows.push_back(std::move(cells));
  }
  const bool ok = failures.rows.empty();
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = ok;
    j["rows"] = table_json(t);
    j["failures"] = table_json(failures);
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    print_csv(std::cout, t);
    if (!ok) {
      std::cerr << "failures:\n";
      print_csv(std::cerr, failures);
    }
  } else {
    print_md(std::cout, t);
    std::cout << '\n'
              << (ok ? "PASS" : "FAIL") << ": " << (t.rows.size() - failures.rows.size()) << " of "
              << t.rows.size() << " rows agree\n";
    if (!ok) {
      std::cout << "\n## Failures\n\n";
      print_md(std::cout, failures);
    }
  }
  return ok ? 0 : kExitFailure;
}

int cmd_cache(const Config& cfg, const std::string& action) {
  const PolyCache cache = cfg.cache();
  if (action == "list") {
    Table t{{"kind", "n", "coeffs"}, {}};
    for (const auto& e : cache.list()) {
      t.rows.push_back({to_string(e.kind), std::to_string(e.n), e.poly.to_string()});
    }
    nlohmann::ordered_json extra;
    extra["cache_dir"] = cache.dir().string();
    emit(cfg, t, extra);
    return 0;
  }
  if (action == "clear") {
    const int removed = cache.clear();
    Table t{{"cache_dir", "removed"}, {{cache.dir().string(), std::to_string(removed)}}};
    emit(cfg, t);
    return 0;
  }
  throw UsageError("cache action must be list or clear");
}

int cmd_oracle(const Config& cfg, const std::string& name, int n) {
  oracles::OracleResult r;
  try {
    r = oracles::run_oracle(name, n);
  } catch (const std::out_of_range& e) {
    throw ResourceError(e.what());
  }
  Table t{{"oracle", "input", "value"}, {{r.oracle, r.input, r.value}}};
  emit(cfg, t);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig polynomials of braid matroids and their combinatorics", "klbraid"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "cache directory (default $KLBRAID_CACHE_DIR or .klbraid-cache)");

  std::string kind;
  int n = 0;
  auto* poly = app.add_subcommand("poly", "print P_{B_n} or Q_{B_n}");
  poly->add_option("kind", kind, "P or Q")->required();
  poly->add_option("n", n, "braid index")->required();
  poly->add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");

  std::string family;
  EnumArgs enum_args;
  auto* enumerate = app.add_subcommand("enum", "count or list a combinatorial family");
  enumerate->add_option("family", family, "s, cacti, deserts, rdeserts or husimi")
      ->required()
      ->check(CLI::IsMember({"s", "cacti", "deserts", "rdeserts", "husimi"}));
  enumerate->add_option("--n", enum_args.n);
  enumerate->add_option("--k", enum_args.k);
  enumerate->add_option("--m", enum_args.m);
  enumerate->add_option("--vertices", enum_args.vertices);
  enumerate->add_option("--p", enum_args.p);
  enumerate->add_option("--type", enum_args.type, "Husimi block counts n_2,n_3,...");
  enumerate->add_flag("--list", enum_args.list, "list the objects, not just the count");

  std::string suite;
  int max_n = 0;
  std::string mode = "both";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suite_ids{"all"};
  for (const auto& s : verify_suites()) suite_ids.push_back(s.id);
  verify->add_option("suite", suite, "suite id or 'all'")->required()->check(CLI::IsMember(suite_ids));
  verify->add_option("--max-n", max_n, "largest n (suite default if omitted)");
  verify->add_option("--mode", mode, "closed-form, exhaustive or both")
      ->check(CLI::IsMember({"closed-form", "exhaustive", "both"}))
      ->capture_default_str();

  std::string action;
  auto* cache = app.add_subcommand("cache", "inspect or clear the polynomial cache");
  cache->add_option("action", action, "list or clear")->required()->check(CLI::IsMember({"list", "clear"}));

  std::string oracle_name;
  int oracle_n = 0;
  auto* oracle = app.add_subcommand("oracle", "");
  oracle->group("");
  oracle->add_option("name", oracle_name)->required();
  oracle->add_option("n", oracle_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(cfg, kind, n);
    if (*enumerate) return cmd_enum(cfg, family, enum_args);
    if (*verify) return cmd_verify(cfg, suite, max_n, mode);
    if (*cache) return cmd_cache(cfg, action);
    if (*oracle) return cmd_oracle(cfg, oracle_name, oracle_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}
