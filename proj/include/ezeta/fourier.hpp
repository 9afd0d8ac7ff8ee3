#pragma once

#include <stdexcept>

#include "ezeta/decimal.hpp"
#include "ezeta/pi_polynomial.hpp"
#include "ezeta/rational.hpp"

namespace ezeta {

/// Cosine series of f(x) = x^(2m) on (-2, 2):
///
///   f(x) = 2^(2m)/(2m+1) + sum_{n>=1} a_n cos(n pi x / 2)
///
/// where each a_n is a combination of pi^-2 .. pi^-2m.
class FourierExpansion {
public:
  /// Only the half period 2 is supported; anything else throws
  /// std::invalid_argument, as does m == 0.
  explicit FourierExpansion(unsigned long m, const Rational& half_period = Rational(2));

  [[nodiscard]] unsigned long m() const { return m_; }
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] PiPolynomial coefficient(unsigned long n) const;

private:
  unsigned long m_;
};

/// a_n of x^(2m), exact.
PiPolynomial fourier_coefficient(unsigned long m, unsigned long n);

class QuadratureDidNotConverge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Composite Simpson halving budget.
inline constexpr unsigned kDefaultQuadratureHalvings = 24;

/// (1/2) * integral_{-2}^{2} x^(2m) cos(n pi x / 2) dx by composite Simpson
/// with a Richardson error estimate. Throws QuadratureDidNotConverge if the
/// estimate is still above tol after max_halvings refinements.
DecimalApprox fourier_coefficient_numeric(unsigned long m, unsigned long n, double tol,
                                          unsigned max_halvings = kDefaultQuadratureHalvings);

/// constant_term + sum_{n=1}^{N} a_n cos(n pi x / 2) at x in [-2, 2].
/// The bound covers evaluation error only, not truncation of the series.
DecimalApprox partial_sum(unsigned long m, const Rational& x, unsigned long N, unsigned digits);

/// Enclosure of cos(pi t) at the given scale. Exact for t a multiple of 1/2.
FixedInterval cos_pi(const Rational& t, unsigned scale);

}  // namespace ezeta
