#include "ezeta/records.hpp"

#include <json.hpp>

#include <charconv>
#include <stdexcept>
#include <vector>

#include "ezeta/pi_polynomial.hpp"

namespace ezeta {

namespace {

using nlohmann::json;

constexpr std::string_view kPiMarker = " * pi^";

long parse_long(std::string_view text) {
  long v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

unsigned places(std::string_view decimal) {
  const auto dot = decimal.find('.');
  return dot == std::string_view::npos ? 0U : static_cast<unsigned>(decimal.size() - dot - 1);
}

}  // namespace

std::string format_exact(const Rational& coeff, long pi_power) {
  return coeff.fraction_str() + std::string(kPiMarker) + std::to_string(pi_power);
}

std::pair<Rational, long> parse_exact(std::string_view text) {
  const auto pos = text.find(kPiMarker);
  if (pos == std::string_view::npos) {
    throw std::invalid_argument("exact value lacks ' * pi^': '" + std::string(text) + "'");
  }
  const std::string_view fraction = text.substr(0, pos);
  if (fraction.find('/') == std::string_view::npos) {
    throw std::invalid_argument("exact value must be written num/den");
  }
  return {Rational::parse(fraction), parse_long(text.substr(pos + kPiMarker.size()))};
}

OutputRecord make_record(const EulerZetaValue& value, Method method, std::optional<unsigned> digits) {
  OutputRecord r;
  r.s = value.s;
  r.method = std::string(method_name(method));
  r.exact = format_exact(value.coeff, 2 * static_cast<long>(value.s));
  if (digits) {
    r.digits = *digits;
    r.decimal = eval_pi_polynomial(value.as_pi_polynomial(), *digits).value_str();
  }
  return r;
}

std::string to_csv_row(const OutputRecord& r) {
  const auto [coeff, power] = parse_exact(r.exact);
  return std::to_string(r.s) + "," + r.method + "," + coeff.num().get_str() + "," +
         coeff.den().get_str() + "," + std::to_string(power) + "," + r.decimal.value_or("");
}

OutputRecord parse_csv_row(std::string_view row) {
  const auto fields = split(row, ',');
  if (fields.size() != 6) throw std::invalid_argument("CSV row needs 6 fields");
  OutputRecord r;
  r.s = static_cast<unsigned long>(parse_long(fields[0]));
  r.method = std::string(fields[1]);
  const Rational coeff = Rational::parse(std::string(fields[2]) + "/" + std::string(fields[3]));
  r.exact = format_exact(coeff, parse_long(fields[4]));
  if (!fields[5].empty()) {
    r.decimal = std::string(fields[5]);
    r.digits = places(fields[5]);
  }
  return r;
}

std::string to_json(const OutputRecord& r) {
  const auto [coeff, power] = parse_exact(r.exact);
  json j = {
      {"s", r.s},
      {"method", r.method},
      {"exact", r.exact},
      {"numerator", coeff.num().get_str()},
      {"denominator", coeff.den().get_str()},
      {"pi_power", power},
  };
  j["decimal"] = r.decimal ? json(*r.decimal) : json(nullptr);
  j["digits"] = r.digits ? json(*r.digits) : json(nullptr);
  return j.dump();
}

OutputRecord parse_json(std::string_view text) {
  const json j = json::parse(text);
  OutputRecord r;
  r.s = j.at("s").get<unsigned long>();
  r.method = j.at("method").get<std::string>();
  r.exact = j.at("exact").get<std::string>();
  parse_exact(r.exact);
  if (!j.at("decimal").is_null()) r.decimal = j.at("decimal").get<std::string>();
  if (!j.at("digits").is_null()) r.digits = j.at("digits").get<unsigned>();
  return r;
}

}  // namespace ezeta
