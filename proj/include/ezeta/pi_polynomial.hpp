#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "ezeta/decimal.hpp"
#include "ezeta/rational.hpp"

namespace ezeta {

/// Finite exact sum  sum_k c_k * pi^(2k)  with rational c_k and integer k
/// (possibly negative). Only even powers of pi are representable. Zero
/// coefficients are never stored.
class PiPolynomial {
public:
  using Terms = std::map<long, Rational>;

  PiPolynomial() = default;
  explicit PiPolynomial(const Terms& terms);

  /// c * pi^(2k)
  static PiPolynomial monomial(const Rational& c, long k);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Coefficient of pi^(2k); zero if absent.
  [[nodiscard]] Rational coefficient(long k) const;

  void add_term(long k, const Rational& c);

  PiPolynomial& operator+=(const PiPolynomial& o);
  PiPolynomial& operator-=(const PiPolynomial& o);
  PiPolynomial& operator*=(const Rational& c);

  friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
  friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
  friend PiPolynomial operator*(PiPolynomial a, const Rational& c) { return a *= c; }
  friend PiPolynomial operator*(const Rational& c, PiPolynomial a) { return a *= c; }
  friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) = default;

  /// e.g. "-128/1 * pi^-2 + 768/1 * pi^-4"; "0" when empty.
  [[nodiscard]] std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const PiPolynomial& p);

private:
  Terms terms_;
};

/// Enclosure of the value at `scale` places, using a pi interval at the same
/// scale. Width grows with coefficient size and exponent.
FixedInterval enclose(const PiPolynomial& p, unsigned scale);

/// Value of p to `digits` places with bound <= 10^-digits.
DecimalApprox eval_pi_polynomial(const PiPolynomial& p, unsigned digits);

}  // namespace ezeta
