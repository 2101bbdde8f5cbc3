// Command-line front end: exact fixed-perimeter partition counting, tables,
// enumeration, series expansion, identity verification and conjecture scans.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "perim/analysis.hpp"
#include "perim/closed_forms.hpp"
#include "perim/enumerate.hpp"
#include "perim/series.hpp"

using json = nlohmann::ordered_json;
using namespace perim;

namespace {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Text;
}

int enum_cap_from_env() {
  const char* raw = std::getenv("PERIM_ENUM_CAP");
  if (raw == nullptr) return kDefaultEnumCap;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1)
    throw std::domain_error("PERIM_ENUM_CAP must be a positive integer");
  return static_cast<int>(v);
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string join_parts(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(p.parts[i]);
  }
  return s;
}

// Shared flag bundle for the partition-query commands.
struct QueryFlags {
  std::string family = "h";
  int d = 1;
  int a = 1;
  std::optional<int> b;
  int n = 1;
  std::string format = "text";

  Family parsed_family() const {
    auto f = family_from_string(family);
    if (!f) throw std::domain_error("family must be one of h, f, l, lab");
    if (*f == Family::LAB && !b)
      throw std::domain_error("family lab requires --b");
    if (*f != Family::LAB && b)
      throw std::domain_error("--b is only accepted with --family lab");
    return *f;
  }

  void add_param_fields(json& doc) const {
    doc["family"] = family;
    doc["d"] = d;
    doc["a"] = a;
    if (b) doc["b"] = *b;
    doc["n"] = n;
  }
};

void add_query_flags(CLI::App* cmd, QueryFlags& q) {
  cmd->add_option("--family", q.family, "family: h, f, l or lab")->required();
  cmd->add_option("--d", q.d, "gap / modulus parameter d")->required();
  cmd->add_option("--a", q.a, "residue or minimum part a")->required();
  cmd->add_option("--b", q.b, "second residue (family lab only)");
  cmd->add_option("--n", q.n, "perimeter n")->required();
  cmd->add_option("--format", q.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

int cmd_count(const QueryFlags& q) {
  Family f = q.parsed_family();
  Count c;
  switch (f) {
    case Family::H: c = h_total(q.d, q.a, q.n); break;
    case Family::F: c = f_total(q.d, q.a, q.n); break;
    case Family::L: c = l_total(q.d, q.a, q.n); break;
    case Family::LAB: c = l_ab_total(q.d, q.a, *q.b, q.n); break;
  }
  switch (parse_format(q.format)) {
    case Format::Text:
      std::cout << c.str() << "\n";
      break;
    case Format::Csv:
      std::cout << "family,d,a,b,n,count\n"
                << q.family << "," << q.d << "," << q.a << ","
                << (q.b ? std::to_string(*q.b) : "") << "," << q.n << "," << c.str() << "\n";
      break;
    case Format::Json: {
      json doc;
      q.add_param_fields(doc);
      doc["count"] = c.str();
      emit(doc);
      break;
    }
  }
  return 0;
}

int cmd_table(const QueryFlags& q) {
  Family f = q.parsed_family();
  RefinementTable t = f == Family::LAB ? refinement_table_ab(q.d, q.a, *q.b, q.n)
                                       : refinement_table(f, q.d, q.a, q.n);
  switch (parse_format(q.format)) {
    case Format::Text: {
      std::cout << std::setw(6) << "alpha" << std::setw(8) << "lambda" << "  count\n";
      for (const auto& cell : t.cells)
        std::cout << std::setw(6) << cell.alpha << std::setw(8) << cell.lambda << "  "
                  << cell.count.str() << "\n";
      std::cout << "total " << t.total().str() << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "alpha,lambda,count\n";
      for (const auto& cell : t.cells)
        std::cout << cell.alpha << "," << cell.lambda << "," << cell.count.str() << "\n";
      break;
    case Format::Json: {
      json doc;
      q.add_param_fields(doc);
      json cells = json::array();
      for (const auto& cell : t.cells) {
        json c;
        c["alpha"] = cell.alpha;
        c["lambda"] = cell.lambda;
        c["count"] = cell.count.str();
        cells.push_back(std::move(c));
      }
      doc["cells"] = std::move(cells);
      doc["total"] = t.total().str();
      emit(doc);
      break;
    }
  }
  return 0;
}

int cmd_enumerate(const QueryFlags& q, int cap) {
  Family f = q.parsed_family();
  if (q.n > cap)
    throw std::domain_error("enumerate: perimeter " + std::to_string(q.n) +
                            " exceeds enumeration cap " + std::to_string(cap) +
                            " (override with PERIM_ENUM_CAP)");
  PartConstraint c = PartConstraint::for_family(f, q.d, q.a, q.b.value_or(0));
  Format fmt = parse_format(q.format);
  if (fmt == Format::Json) {
    json doc;
    q.add_param_fields(doc);
    json parts = json::array();
    for_each_fixed_perimeter(q.n, c, [&](const Partition& p) { parts.push_back(p.parts); });
    doc["partitions"] = std::move(parts);
    emit(doc);
  } else {
    if (fmt == Format::Csv) std::cout << "parts\n";
    for_each_fixed_perimeter(q.n, c,
                             [&](const Partition& p) { std::cout << join_parts(p) << "\n"; });
  }
  return 0;
}

int cmd_series(const std::string& kind, int d, int a, int cap, const std::string& format) {
  Format fmt = parse_format(format);
  json doc;
  doc["kind"] = kind;
  doc["d"] = d;
  doc["a"] = a;
  doc["cap"] = cap;
  json coeffs = json::array();
  if (kind == "h1") {
    auto s = expand_h_univariate(d, a, cap);
    if (fmt == Format::Csv) std::cout << "n,coeff\n";
    for (int n = 1; n <= cap; ++n) {
      Count c = s.coefficient(n);
      if (c == 0) continue;
      switch (fmt) {
        case Format::Text:
          std::cout << std::setw(4) << n << "  " << c.str() << "\n";
          break;
        case Format::Csv:
          std::cout << n << "," << c.str() << "\n";
          break;
        case Format::Json: {
          json e;
          e["n"] = n;
          e["count"] = c.str();
          coeffs.push_back(std::move(e));
          break;
        }
      }
    }
  } else {
    auto s = kind == "H" ? expand_h(d, a, cap) : expand_f(d, a, cap);
    if (fmt == Format::Csv) std::cout << "alpha,lambda,coeff\n";
    for (int p = 1; p <= cap; ++p) {
      for (int alpha = 1; alpha <= p; ++alpha) {
        int lambda = p - alpha + 1;
        Count c = s.coefficient(alpha, lambda);
        if (c == 0) continue;
        switch (fmt) {
          case Format::Text:
            std::cout << std::setw(4) << alpha << std::setw(6) << lambda << "  " << c.str()
                      << "\n";
            break;
          case Format::Csv:
            std::cout << alpha << "," << lambda << "," << c.str() << "\n";
            break;
          case Format::Json: {
            json e;
            e["alpha"] = alpha;
            e["lambda"] = lambda;
            e["count"] = c.str();
            coeffs.push_back(std::move(e));
            break;
          }
        }
      }
    }
  }
  if (fmt == Format::Json) {
    doc["coefficients"] = std::move(coeffs);
    emit(doc);
  }
  return 0;
}

constexpr std::size_t kTextFailureLimit = 20;

int cmd_verify(const std::string& checks_flag, const GridSpec& g, int cap,
               const std::string& format) {
  std::vector<std::string> selected;
  if (checks_flag == "all") {
    selected = check_names();
  } else {
    std::stringstream ss(checks_flag);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) selected.push_back(item);
    }
  }
  if (selected.empty()) throw std::domain_error("verify: no checks selected");
  auto known = check_names();
  for (const auto& name : selected)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw std::domain_error("verify: unknown check '" + name + "'");
  validate(g, cap);

  std::vector<CheckReport> reports;
  for (const auto& name : selected) reports.push_back(*run_check(name, g, cap));
  bool all_passed = true;
  for (const auto& r : reports) all_passed &= r.passed();

  switch (parse_format(format)) {
    case Format::Text: {
      for (const auto& r : reports) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.check_name
                  << "  cases=" << r.cases_run;
        if (!r.failures.empty()) std::cout << "  failures=" << r.failures.size();
        for (const auto& [k, v] : r.stats) std::cout << "  " << k << "=" << v;
        std::cout << "\n";
        for (std::size_t i = 0; i < r.failures.size() && i < kTextFailureLimit; ++i) {
          const auto& f = r.failures[i];
          std::cout << "    " << f.params << " : " << f.relation << " : " << f.lhs << " vs "
                    << f.rhs << "\n";
        }
        if (r.failures.size() > kTextFailureLimit)
          std::cout << "    (+" << r.failures.size() - kTextFailureLimit << " more)\n";
      }
      break;
    }
    case Format::Csv: {
      std::cout << "check,cases,failures,passed\n";
      for (const auto& r : reports)
        std::cout << r.check_name << "," << r.cases_run << "," << r.failures.size() << ","
                  << (r.passed() ? "true" : "false") << "\n";
      break;
    }
    case Format::Json: {
      json doc;
      json checks = json::array();
      for (const auto& r : reports) {
        json c;
        c["name"] = r.check_name;
        c["cases"] = r.cases_run;
        c["passed"] = r.passed();
        json stats = json::object();
        for (const auto& [k, v] : r.stats) stats[k] = v;
        c["stats"] = std::move(stats);
        json fails = json::array();
        for (const auto& f : r.failures) {
          json e;
          e["params"] = f.params;
          e["relation"] = f.relation;
          e["lhs"] = f.lhs;
          e["rhs"] = f.rhs;
          fails.push_back(std::move(e));
        }
        c["failures"] = std::move(fails);
        checks.push_back(std::move(c));
      }
      doc["checks"] = std::move(checks);
      doc["passed"] = all_passed;
      emit(doc);
      break;
    }
  }
  return all_passed ? 0 : 1;
}

int cmd_scan(int d, int a, int n_max, const std::string& format) {
  ScanReport rep = scan_a_shift_conjecture(d, a, n_max);
  switch (parse_format(format)) {
    case Format::Text: {
      std::cout << "scan d=" << rep.d << " a=" << rep.a << " n_max=" << rep.n_max << "\n";
      std::cout << "exceptions:";
      for (int n : rep.exceptions) std::cout << " " << n;
      std::cout << "\nstable_from: " << rep.stable_from << "\n";
      break;
    }
    case Format::Csv: {
      std::cout << "d,a,n_max,exceptions,stable_from\n";
      std::cout << rep.d << "," << rep.a << "," << rep.n_max << ",";
      for (std::size_t i = 0; i < rep.exceptions.size(); ++i) {
        if (i) std::cout << ";";
        std::cout << rep.exceptions[i];
      }
      std::cout << "," << rep.stable_from << "\n";
      break;
    }
    case Format::Json: {
      json doc;
      doc["d"] = rep.d;
      doc["a"] = rep.a;
      doc["n_max"] = rep.n_max;
      doc["exceptions"] = rep.exceptions;
      doc["stable_from"] = rep.stable_from;
      emit(doc);
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of integer partitions with fixed perimeter"};
  app.require_subcommand(1);

  QueryFlags count_q, table_q, enum_q;
  auto* count_cmd = app.add_subcommand("count", "total count for one family at perimeter n");
  add_query_flags(count_cmd, count_q);
  auto* table_cmd = app.add_subcommand("table", "nonzero (alpha, lambda) refinement cells");
  add_query_flags(table_cmd, table_q);
  auto* enum_cmd = app.add_subcommand("enumerate", "list the counted partitions");
  add_query_flags(enum_cmd, enum_q);

  std::string series_kind;
  int series_d = 1, series_a = 1, series_cap = 1;
  std::string series_format = "text";
  auto* series_cmd = app.add_subcommand("series", "truncated generating-series coefficients");
  series_cmd->add_option("--kind", series_kind, "h1 (univariate), H or F (bivariate)")
      ->required()
      ->check(CLI::IsMember({"h1", "H", "F"}));
  series_cmd->add_option("--d", series_d, "parameter d")->required();
  series_cmd->add_option("--a", series_a, "parameter a")->required();
  series_cmd->add_option("--cap", series_cap, "truncation cap (perimeter)")->required();
  series_cmd->add_option("--format", series_format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  std::string verify_checks = "all";
  GridSpec grid;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks over a parameter grid");
  verify_cmd->add_option("--checks", verify_checks,
                         "comma-separated check names, or 'all'");
  verify_cmd->add_option("--d-min", grid.d_min, "smallest d");
  verify_cmd->add_option("--d-max", grid.d_max, "largest d");
  verify_cmd->add_option("--a", grid.fixed_a, "restrict to one a (default: all valid)");
  verify_cmd->add_option("--n-max", grid.n_max, "largest perimeter");
  verify_cmd->add_option("--oracle-n-max", grid.oracle_n_max,
                         "largest perimeter for enumeration comparisons");
  verify_cmd->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  int scan_d = 1, scan_a = 1, scan_n_max = 200;
  std::string scan_format = "text";
  auto* scan_cmd = app.add_subcommand("scan", "scan the a-shift comparison for exceptions");
  scan_cmd->add_option("--d", scan_d, "parameter d")->required();
  scan_cmd->add_option("--a", scan_a, "parameter a (compared against a+1)")->required();
  scan_cmd->add_option("--n-max", scan_n_max, "largest perimeter scanned");
  scan_cmd->add_option("--format", scan_format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    int cap = enum_cap_from_env();
    if (app.got_subcommand(count_cmd)) return cmd_count(count_q);
    if (app.got_subcommand(table_cmd)) return cmd_table(table_q);
    if (app.got_subcommand(enum_cmd)) return cmd_enumerate(enum_q, cap);
    if (app.got_subcommand(series_cmd))
      return cmd_series(series_kind, series_d, series_a, series_cap, series_format);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_checks, grid, cap, verify_format);
    if (app.got_subcommand(scan_cmd)) return cmd_scan(scan_d, scan_a, scan_n_max, scan_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
