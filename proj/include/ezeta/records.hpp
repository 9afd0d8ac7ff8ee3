#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ezeta/rational.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta {

/// "num/den * pi^power"; fractions are always written with a slash.
std::string format_exact(const Rational& coeff, long pi_power);

/// Inverse of format_exact. Throws std::invalid_argument on malformed text.
std::pair<Rational, long> parse_exact(std::string_view text);

/// One rendered value: zeta_E(2s) by one method, optionally with a decimal.
struct OutputRecord {
  unsigned long s = 0;
  std::string method;
  std::string exact;
  std::optional<std::string> decimal;
  std::optional<unsigned> digits;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const EulerZetaValue& value, Method method, std::optional<unsigned> digits);

inline constexpr std::string_view kCsvHeader = "s,method,numerator,denominator,pi_power,decimal";

std::string to_csv_row(const OutputRecord& r);
/// Throws std::invalid_argument on a malformed row.
OutputRecord parse_csv_row(std::string_view row);

/// Single-line JSON object.
std::string to_json(const OutputRecord& r);
OutputRecord parse_json(std::string_view text);

}  // namespace ezeta
