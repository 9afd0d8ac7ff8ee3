#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ezeta/identities.hpp"
#include "ezeta/records.hpp"
#include "ezeta/verify.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr unsigned kDefaultDigits = 30;

constexpr std::string_view kPrintedWarning =
    "warning: leeryoo-printed uses the recurrence constant with denominator "
    "2^(2s+1)(2s-1)(2s+3) as published; it contradicts the x=1 identity it is derived "
    "from and is wrong for every s >= 2 (s=2 gives 5/336, the true value is 7/720)";

struct Options {
  unsigned long s = 0;
  unsigned long s_max = 0;
  unsigned long m = 0;
  int x = -1;
  unsigned long repeats = 1;
  std::string method = "new-theorem";
  std::string methods = "all";
  std::string format = "plain";
  unsigned digits = 0;
  bool decimal = false;
};

std::vector<Method> parse_methods(const std::string& list) {
  if (list == "all") return {kAllMethods.begin(), kAllMethods.end()};
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = parse_method(item);
    if (!m) throw UsageError("unknown method '" + item + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw UsageError("--methods is empty");
  return out;
}

Method single_method(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw UsageError("unknown method '" + name + "'");
  return *m;
}

std::optional<unsigned> requested_digits(const Options& o) {
  if (o.digits > 0) return o.digits;
  if (o.decimal) return kDefaultDigits;
  return std::nullopt;
}

void warn_if_printed(const std::vector<Method>& methods, std::ostream& err) {
  if (std::find(methods.begin(), methods.end(), Method::LeeRyooPrinted) != methods.end()) {
    err << kPrintedWarning << "\n";
  }
}

std::string plain_line(const OutputRecord& r) {
  std::string line = "zeta_E(" + std::to_string(2 * r.s) + ") = " + r.exact;
  if (r.decimal) line += " ~ " + *r.decimal;
  return line;
}

void print_plain_table(const std::vector<OutputRecord>& rows, std::ostream& out) {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"s", "method", "exact", "decimal"});
  for (const auto& r : rows) cells.push_back({std::to_string(r.s), r.method, r.exact, r.decimal.value_or("")});
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());
  }
  const bool with_decimal = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.decimal.has_value(); });
  const std::size_t columns = with_decimal ? 4 : 3;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < columns; ++i) {
      std::string cell = row[i];
      if (i + 1 < columns) cell.resize(width[i] + 2, ' ');
      line += cell;
    }
    out << line << "\n";
  }
}

void emit_records(const std::vector<OutputRecord>& rows, const std::string& format, bool single,
                  std::ostream& out) {
  if (format == "csv") {
    out << kCsvHeader << "\n";
    for (const auto& r : rows) out << to_csv_row(r) << "\n";
  } else if (format == "json") {
    if (single) {
      out << to_json(rows.front()) << "\n";
    } else {
      auto array = nlohmann::json::array();
      for (const auto& r : rows) array.push_back(nlohmann::json::parse(to_json(r)));
      out << array.dump(2) << "\n";
    }
  } else if (single) {
    out << plain_line(rows.front()) << "\n";
  } else {
    print_plain_table(rows, out);
  }
}

int cmd_value(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.s < 1) throw UsageError("--s must be >= 1");
  const Method method = single_method(o.method);
  warn_if_printed({method}, err);
  const auto rec = make_record(euler_zeta(o.s, method), method, requested_digits(o));
  emit_records({rec}, o.format, true, out);
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.s_max < 1) throw UsageError("--s-max must be >= 1");
  const auto methods = parse_methods(o.methods);
  warn_if_printed(methods, err);
  const auto digits = requested_digits(o);
  std::vector<OutputRecord> rows;
  for (unsigned long s = 1; s <= o.s_max; ++s) {
    for (Method m : methods) rows.push_back(make_record(euler_zeta(s, m), m, digits));
  }
  emit_records(rows, o.format, false, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
  if (o.s_max < 2) throw UsageError("--s-max must be >= 2");
  const auto results = run_verification(o.s_max);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
  }
  out << (all ? "all suites passed" : "verification FAILED") << "\n";
  return all ? kExitOk : kExitVerifyFailed;
}

int cmd_identities(const Options& o, std::ostream& out, std::ostream&) {
  if (o.m < 1) throw UsageError("--m must be >= 1");
  if (o.x < 0 || o.x > 2) throw UsageError("--x must be 0, 1 or 2");
  const LinearRelation rel = relation_at(o.m, o.x);
  const std::string family(family_name(rel.family));
  if (o.format == "csv") {
    out << "x,m,family,k,coefficient,rhs\n";
    for (const auto& [k, qk] : rel.coefficients) {
      out << o.x << "," << o.m << "," << family << "," << k << "," << qk.str() << "," << rel.rhs.str() << "\n";
    }
  } else if (o.format == "json") {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [k, qk] : rel.coefficients) coeffs[std::to_string(k)] = qk.str();
    nlohmann::json j = {{"x", o.x}, {"m", o.m}, {"family", family}, {"coefficients", coeffs}, {"rhs", rel.rhs.str()}};
    out << j.dump() << "\n";
  } else {
    const char* unknown = rel.family == Family::EulerZeta ? "zeta_E(2k)" : "zeta(2k)";
    out << "x=" << o.x << " m=" << o.m << " " << family << ": " << rel.str() << "\n";
    out << "  where v_k = " << unknown << " / pi^(2k)\n";
  }
  return kExitOk;
}

struct BenchRow {
  Method method;
  double best_ms;
  double mean_ms;
  std::size_t num_bits;
  std::size_t den_bits;
};

int cmd_bench(const Options& o, std::ostream& out, std::ostream&) {
  if (o.s_max < 2) throw UsageError("--s-max must be >= 2");
  if (o.repeats < 1) throw UsageError("--repeats must be >= 1");
  std::vector<BenchRow> rows;
  for (Method m : kAllMethods) {
    BenchRow row{m, 0.0, 0.0, 0, 0};
    double total = 0.0;
    for (unsigned long rep = 0; rep < o.repeats; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const auto table = euler_zeta_coefficients(o.s_max, m);
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
      total += took.count();
      row.best_ms = rep == 0 ? took.count() : std::min(row.best_ms, took.count());
      for (const auto& c : table) {
        row.num_bits = std::max(row.num_bits, bit_length(c.num()));
        row.den_bits = std::max(row.den_bits, bit_length(c.den()));
      }
    }
    row.mean_ms = total / static_cast<double>(o.repeats);
    rows.push_back(row);
  }
  if (o.format == "csv") {
    out << "method,s_max,repeats,best_ms,mean_ms,max_numerator_bits,max_denominator_bits\n";
    for (const auto& r : rows) {
      out << method_name(r.method) << "," << o.s_max << "," << o.repeats << "," << std::fixed
          << std::setprecision(3) << r.best_ms << "," << r.mean_ms << "," << r.num_bits << "," << r.den_bits << "\n";
    }
  } else {
    out << "s_max=" << o.s_max << " repeats=" << o.repeats << "\n";
    out << std::left << std::setw(18) << "method" << std::right << std::setw(12) << "best_ms" << std::setw(12)
        << "mean_ms" << std::setw(10) << "num_bits" << std::setw(10) << "den_bits" << "\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(18) << method_name(r.method) << std::right << std::fixed << std::setprecision(3)
          << std::setw(12) << r.best_ms << std::setw(12) << r.mean_ms << std::setw(10) << r.num_bits
          << std::setw(10) << r.den_bits << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact even-argument values of the Euler zeta function", "ezeta"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"plain", "csv", "json"};

  auto* value = app.add_subcommand("value", "zeta_E(2s) by one method");
  value->add_option("--s", o.s, "half the argument")->required();
  value->add_option("--method", o.method, "new-theorem|corollary|leeryoo-derived|leeryoo-printed|closed-form")
      ->capture_default_str();
  value->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  value->add_option("--digits", o.digits, "decimal places of the decimal rendering");
  value->add_flag("--decimal", o.decimal, "add a decimal rendering (30 places unless --digits)");

  auto* table = app.add_subcommand("table", "zeta_E(2s) for s = 1..s-max");
  table->add_option("--s-max", o.s_max)->required();
  table->add_option("--methods", o.methods, "comma-separated method names or 'all'")->capture_default_str();
  table->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
  table->add_option("--digits", o.digits);
  table->add_flag("--decimal", o.decimal);

  auto* verify = app.add_subcommand("verify", "run every oracle cross-check");
  verify->add_option("--s-max", o.s_max)->required();

  auto* identities = app.add_subcommand("identities", "substitution relation for x^(2m) at x");
  identities->add_option("--m", o.m)->required();
  identities->add_option("--x", o.x)->required();
  identities->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();

  auto* bench = app.add_subcommand("bench", "time each method over a full table");
  bench->add_option("--s-max", o.s_max)->required();
  bench->add_option("--repeats", o.repeats)->capture_default_str();
  bench->add_option("--format", o.format)->check(CLI::IsMember({"plain", "csv"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (value->parsed()) {
      if (value->count("--digits") && o.digits == 0) throw UsageError("--digits must be >= 1");
      return cmd_value(o, out, err);
    }
    if (table->parsed()) {
      if (table->count("--digits") && o.digits == 0) throw UsageError("--digits must be >= 1");
      return cmd_table(o, out, err);
    }
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (identities->parsed()) return cmd_identities(o, out, err);
    if (bench->parsed()) return cmd_bench(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace ezeta::cli
