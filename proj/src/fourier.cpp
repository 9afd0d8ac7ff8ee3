#include "ezeta/fourier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ezeta/combinatorics.hpp"

namespace ezeta {

namespace {

// Coefficient of pi^(-2k) in a_n before the factors (-1)^n / n^(2k).
Rational coefficient_base(unsigned long m, unsigned long k) {
  const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
  return sign * Rational(falling_factorial(2 * m, 2 * k - 1)) *
         pow2(2 * static_cast<long>(m) - 2 * static_cast<long>(k) + 1) * pow2(2 * static_cast<long>(k));
}

Rational floor_rational(const Rational& t) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
  return Rational(fl);
}

// Alternating Taylor series of cos(theta) (odd = false) or sin(theta) for an
// interval 0 <= theta < 1. The tail is bounded by the first omitted term.
FixedInterval taylor_cos_sin(const FixedInterval& theta, bool odd) {
  const unsigned scale = theta.scale();
  const FixedInterval theta2 = theta * theta;
  FixedInterval term = odd ? theta : FixedInterval::exact(Rational(1), scale);
  FixedInterval sum = term;
  for (unsigned long j = odd ? 1 : 0;; j += 2) {
    term = (term * theta2).scaled(Rational(BigInt(1), BigInt((j + 1) * (j + 2))));
    const bool subtract = ((j + 1) / 2) % 2 == (odd ? 1UL : 0UL);
    if (term.hi() <= 1) {
      return {sum.lo() - term.hi(), sum.hi() + term.hi(), scale};
    }
    sum = subtract ? sum - term : sum + term;
  }
}

}  // namespace

FourierExpansion::FourierExpansion(unsigned long m, const Rational& half_period) : m_(m) {
  if (m == 0) throw std::invalid_argument("FourierExpansion: m must be >= 1");
  if (half_period != Rational(2)) {
    throw std::invalid_argument("FourierExpansion: only the interval (-2, 2) is supported");
  }
}

Rational FourierExpansion::constant_term() const {
  return pow2(2 * static_cast<long>(m_)) / Rational(static_cast<long>(2 * m_ + 1));
}

PiPolynomial FourierExpansion::coefficient(unsigned long n) const {
  if (n == 0) throw std::invalid_argument("fourier_coefficient: n must be >= 1");
  PiPolynomial a;
  const Rational parity = (n % 2 == 0) ? Rational(1) : Rational(-1);
  for (unsigned long k = 1; k <= m_; ++k) {
    BigInt n_power;
    mpz_ui_pow_ui(n_power.get_mpz_t(), n, 2 * k);
    a.add_term(-static_cast<long>(k), coefficient_base(m_, k) * parity / Rational(n_power));
  }
  return a;
}

PiPolynomial fourier_coefficient(unsigned long m, unsigned long n) {
  return FourierExpansion(m).coefficient(n);
}

FixedInterval cos_pi(const Rational& t_in, unsigned scale) {
  // Reduce to cos(pi t) or sin(pi t) with t in (0, 1/4].
  Rational t = t_in - Rational(2) * floor_rational(t_in / Rational(2));
  if (t > Rational(1)) t = Rational(2) - t;
  bool negate = false;
  if (t > Rational(1L, 2L)) {
    t = Rational(1) - t;
    negate = true;
  }
  if (t.is_zero()) {
    return FixedInterval::exact(Rational(negate ? -1 : 1), scale);
  }
  if (t == Rational(1L, 2L)) return FixedInterval::exact(Rational(), scale);

  bool use_sin = false;
  if (t > Rational(1L, 4L)) {
    t = Rational(1L, 2L) - t;
    use_sin = true;
  }
  const unsigned working = scale + 6;
  const FixedInterval theta = pi_interval(working).scaled(t);
  FixedInterval value = taylor_cos_sin(theta, use_sin).coarsen(scale);
  if (negate) value = -value;
  return value;
}

DecimalApprox fourier_coefficient_numeric(unsigned long m, unsigned long n, double tol,
                                          unsigned max_halvings) {
  if (m == 0 || n == 0) throw std::invalid_argument("fourier_coefficient_numeric: m, n must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("fourier_coefficient_numeric: tol must be > 0");

  const double a = -2.0;
  const double b = 2.0;
  const double freq = static_cast<double>(n) * std::numbers::pi / 2.0;
  const int power = static_cast<int>(2 * m);
  auto f = [&](double x) { return 0.5 * std::pow(x, power) * std::cos(freq * x); };

  // Simpson weights: ends 1, odd nodes 4, interior even nodes 2.
  double ends = f(a) + f(b);
  double ends_abs = std::abs(f(a)) + std::abs(f(b));
  double even = 0.0, even_abs = 0.0;
  double odd = f(0.0), odd_abs = std::abs(odd);
  std::size_t intervals = 2;
  double h = (b - a) / 2.0;
  double previous = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);

  constexpr unsigned kMinHalvings = 4;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (unsigned halving = 1; halving <= max_halvings; ++halving) {
    even += odd;
    even_abs += odd_abs;
    intervals *= 2;
    h /= 2.0;
    odd = 0.0;
    odd_abs = 0.0;
    for (std::size_t i = 1; i < intervals; i += 2) {
      const double v = f(a + static_cast<double>(i) * h);
      odd += v;
      odd_abs += std::abs(v);
    }
    const double current = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
    const double estimate = std::abs(current - previous) / 15.0;
    const double roundoff =
        64.0 * eps * h / 3.0 * (ends_abs + 4.0 * odd_abs + 2.0 * even_abs) + eps * std::abs(current);
    if (halving >= kMinHalvings && estimate + roundoff <= tol) {
      return DecimalApprox::from_double(current, estimate + roundoff, 20);
    }
    previous = current;
  }
  throw QuadratureDidNotConverge("fourier_coefficient_numeric: refinement budget exhausted for m=" +
                                 std::to_string(m) + ", n=" + std::to_string(n));
}

DecimalApprox partial_sum(unsigned long m, const Rational& x, unsigned long N, unsigned digits) {
  const FourierExpansion expansion(m);
  if (x < Rational(-2) || x > Rational(2)) throw std::invalid_argument("partial_sum: x must lie in [-2, 2]");
  if (N == 0) throw std::invalid_argument("partial_sum: N must be >= 1");
  if (digits == 0) throw std::invalid_argument("partial_sum: digits must be >= 1");

  std::vector<Rational> base(m + 1);
  std::size_t magnitude_bits = 0;
  for (unsigned long k = 1; k <= m; ++k) {
    base[k] = coefficient_base(m, k);
    magnitude_bits = std::max(magnitude_bits, bit_length(base[k].num()));
  }
  unsigned guard = 8 + static_cast<unsigned>(std::to_string(N).size() + magnitude_bits * 3 / 10);

  for (;;) {
    const unsigned scale = digits + guard;
    const FixedInterval inv_pi2 = pi_interval(scale).pow(2).reciprocal();
    std::vector<FixedInterval> inv_pi_powers(m + 1);
    inv_pi_powers[1] = inv_pi2;
    for (unsigned long k = 2; k <= m; ++k) inv_pi_powers[k] = inv_pi_powers[k - 1] * inv_pi2;

    FixedInterval sum = FixedInterval::exact(expansion.constant_term(), scale);
    const Rational half_x = x / Rational(2);
    BigInt n_power;
    for (unsigned long n = 1; n <= N; ++n) {
      const FixedInterval c = cos_pi(Rational(static_cast<long>(n)) * half_x, scale);
      if (c.lo() == 0 && c.hi() == 0) continue;
      FixedInterval a_n = FixedInterval::exact(Rational(), scale);
      const Rational parity = (n % 2 == 0) ? Rational(1) : Rational(-1);
      for (unsigned long k = 1; k <= m; ++k) {
        mpz_ui_pow_ui(n_power.get_mpz_t(), n, 2 * k);
        a_n = a_n + inv_pi_powers[k].scaled(base[k] * parity / Rational(n_power));
      }
      sum = sum + a_n * c;
    }
    if (auto d = sum.to_decimal(digits)) return *d;
    guard *= 2;
  }
}

}  // namespace ezeta
