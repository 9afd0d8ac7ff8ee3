#include "ezeta/pi_polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ezeta {

PiPolynomial::PiPolynomial(const Terms& terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

PiPolynomial PiPolynomial::monomial(const Rational& c, long k) {
  PiPolynomial p;
  p.add_term(k, c);
  return p;
}

Rational PiPolynomial::coefficient(long k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational() : it->second;
}

void PiPolynomial::add_term(long k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PiPolynomial& PiPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string PiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    const Rational shown = out.empty() ? c : c.abs();
    out += shown.fraction_str();
    if (k != 0) out += " * pi^" + std::to_string(2 * k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PiPolynomial& p) { return os << p.str(); }

FixedInterval enclose(const PiPolynomial& p, unsigned scale) {
  FixedInterval sum = FixedInterval::exact(Rational(), scale);
  if (p.is_zero()) return sum;
  const FixedInterval pi2 = pi_interval(scale).pow(2);
  for (const auto& [k, c] : p.terms()) {
    FixedInterval power = pi2.pow(static_cast<unsigned long>(k < 0 ? -k : k));
    if (k < 0) power = power.reciprocal();
    sum = sum + power.scaled(c);
  }
  return sum;
}

DecimalApprox eval_pi_polynomial(const PiPolynomial& p, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("eval_pi_polynomial: digits must be >= 1");
  // Guard digits cover the magnitude of coefficients times pi^(2|k|) plus
  // accumulated rounding; widen until the enclosure is tight enough.
  std::size_t magnitude_bits = 0;
  for (const auto& [k, c] : p.terms()) {
    magnitude_bits = std::max(magnitude_bits, bit_length(c.num()) + 4 * static_cast<std::size_t>(k < 0 ? -k : k));
  }
  unsigned guard = 8 + static_cast<unsigned>(magnitude_bits * 3 / 10);
  for (;;) {
    if (auto d = enclose(p, digits + guard).to_decimal(digits)) return *d;
    guard *= 2;
  }
}

}  // namespace ezeta
