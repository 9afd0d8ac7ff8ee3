#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ezeta/fourier.hpp"
#include "oracles.hpp"

using namespace ezeta;

namespace {

Rational dec(const char* s) {
  // "-1.234" -> exact rational
  std::string t(s);
  const bool neg = t[0] == '-';
  if (neg) t.erase(0, 1);
  const auto dot = t.find('.');
  const std::string digits = t.substr(0, dot) + t.substr(dot + 1);
  Rational q(BigInt(digits, 10), pow10(static_cast<unsigned>(t.size() - dot - 1)));
  return neg ? -q : q;
}

double interval_mid(const FixedInterval& iv) {
  return (Rational(iv.lo(), pow10(iv.scale())) + Rational(iv.hi(), pow10(iv.scale()))).to_double() / 2.0;
}

}  // namespace

TEST_SUITE("fourier coefficients") {
  TEST_CASE("examples") {
    CHECK(fourier_coefficient(1, 1) == PiPolynomial({{-1, Rational(-16)}}));
    CHECK(fourier_coefficient(1, 2) == PiPolynomial({{-1, Rational(4)}}));
    CHECK(fourier_coefficient(2, 1) == PiPolynomial({{-1, Rational(-128)}, {-2, Rational(768)}}));
  }

  TEST_CASE("expansion object") {
    const FourierExpansion e(3);
    CHECK(e.constant_term() == Rational(64L, 7L));
    CHECK_THROWS_AS(FourierExpansion(0), std::invalid_argument);
    CHECK_THROWS_AS(FourierExpansion(1, Rational(3)), std::invalid_argument);
    CHECK_THROWS_AS(e.coefficient(0), std::invalid_argument);
    for (unsigned long n = 1; n <= 5; ++n) {
      const auto a = e.coefficient(n);
      for (const auto& [k, c] : a.terms()) {
        CHECK(k <= -1);
        CHECK(k >= -3);
      }
    }
  }

  TEST_CASE("matches integration by parts for m <= 6, n <= 10") {
    for (unsigned long m = 1; m <= 6; ++m) {
      for (unsigned long n = 1; n <= 10; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(fourier_coefficient(m, n) == PiPolynomial(oracle::fourier_by_parts(m, n)));
      }
    }
  }

  TEST_CASE("parity scaling: c_k(n) n^(2k) depends only on the parity of n") {
    for (unsigned long m = 1; m <= 4; ++m) {
      for (unsigned long n = 1; n <= 9; ++n) {
        const auto a = fourier_coefficient(m, n);
        const auto b = fourier_coefficient(m, n + 1);
        const auto c = fourier_coefficient(m, n + 2);
        for (long k = 1; k <= static_cast<long>(m); ++k) {
          auto scaled = [k](const PiPolynomial& p, unsigned long nn) {
            return p.coefficient(-k) * pow(Rational(static_cast<long>(nn)), static_cast<unsigned long>(2 * k));
          };
          CHECK(scaled(a, n) == scaled(c, n + 2));
          CHECK(scaled(a, n) == -scaled(b, n + 1));
        }
      }
    }
  }
}

TEST_SUITE("quadrature") {
  TEST_CASE("examples enclose the exact values") {
    const auto a = fourier_coefficient_numeric(1, 1, 1e-9);
    CHECK(a.bound() <= Rational(BigInt(1), pow10(9)));
    CHECK(a.contains(dec("-1.621138938277404343102071411")));
    const auto b = fourier_coefficient_numeric(2, 1, 1e-9);
    // -128/pi^2 + 768/pi^4 (mpmath)
    CHECK(b.contains(dec("-5.084837134621665319547233741")));
    const auto c = fourier_coefficient_numeric(1, 2, 1e-9);
    CHECK(c.contains(dec("0.405284734569351085775517852")));
  }

  TEST_CASE("m = 3, n = 5 against an independent quadrature value") {
    // mpmath quad: -2.866425103609746644994247232...
    const auto d = fourier_coefficient_numeric(3, 5, 1e-10);
    CHECK(d.contains(dec("-2.866425103609746644994247232")));
  }

  TEST_CASE("budget exhaustion is an error") {
    CHECK_THROWS_AS(fourier_coefficient_numeric(3, 8, 1e-11, 4), QuadratureDidNotConverge);
    CHECK_THROWS_AS(fourier_coefficient_numeric(1, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fourier_coefficient_numeric(0, 1, 1e-6), std::invalid_argument);
  }

  TEST_CASE("exact versus numeric for m <= 3, n <= 8") {
    for (unsigned long m = 1; m <= 3; ++m) {
      for (unsigned long n = 1; n <= 8; ++n) {
        const auto exact = eval_pi_polynomial(fourier_coefficient(m, n), 12);
        const auto numeric = fourier_coefficient_numeric(m, n, 1e-11);
        CAPTURE(m);
        CAPTURE(n);
        CHECK((exact.value() - numeric.value()).abs() <= Rational(BigInt(1), pow10(9)));
      }
    }
  }
}

TEST_SUITE("cos_pi") {
  TEST_CASE("exact at half-integers") {
    CHECK(cos_pi(Rational(0), 10).width() == 0);
    CHECK(cos_pi(Rational(0), 10).lo() == pow10(10));
    CHECK(cos_pi(Rational(1), 10).lo() == -pow10(10));
    CHECK(cos_pi(Rational(1L, 2L), 10).hi() == 0);
    CHECK(cos_pi(Rational(-7L, 2L), 10).lo() == 0);
    CHECK(cos_pi(Rational(5), 10).hi() == -pow10(10));
  }

  TEST_CASE("agrees with std::cos and stays tight") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const Rational t = oracle::random_rational(rng, 500);
      const auto iv = cos_pi(t, 25);
      CAPTURE(t.str());
      CHECK(iv.width() <= 40);
      CHECK(std::abs(interval_mid(iv) - std::cos(std::numbers::pi * t.to_double())) < 1e-12);
    }
  }
}

TEST_SUITE("partial sums") {
  TEST_CASE("two-term hand value") {
    const auto d = partial_sum(1, Rational(0), 1, 10);
    CHECK(d.value_str() == "-0.2878056049");
    CHECK(d.error_ulps() <= 1);
  }

  TEST_CASE("endpoint x = 2 climbs toward the jump average 4") {
    Rational previous(0);
    for (unsigned long N : {10UL, 100UL, 1000UL}) {
      const auto d = partial_sum(1, Rational(2), N, 12);
      // Tail sum_{n>N} 16/(n^2 pi^2) < 16/(pi^2 N) < 2/N.
      CHECK(d.upper() < Rational(4));
      CHECK(Rational(4) - d.lower() < Rational(2L, static_cast<long>(N)));
      CHECK(previous < d.value());
      previous = d.value();
    }
  }

  TEST_CASE("x = 0 with 10^4 terms is within 2e-4 of f(0)") {
    const auto d = partial_sum(1, Rational(0), 10000, 10);
    CHECK(d.value().abs() + d.bound() <= Rational(2L, 10000L));
  }

  TEST_CASE("generic rational point against double evaluation") {
    const Rational x(-5L, 7L);
    const unsigned long m = 2;
    const unsigned long N = 60;
    double expected = 16.0 / 5.0;
    for (unsigned long n = 1; n <= N; ++n) {
      const double a = oracle::eval_double(oracle::fourier_by_parts(m, n));
      expected += a * std::cos(static_cast<double>(n) * std::numbers::pi * x.to_double() / 2.0);
    }
    const auto d = partial_sum(m, x, N, 14);
    CHECK(std::abs(d.to_double() - expected) < 1e-10);
  }

  TEST_CASE("domain checks") {
    CHECK_THROWS_AS(partial_sum(1, Rational(3), 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum(1, Rational(0), 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum(1, Rational(0), 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(partial_sum(0, Rational(0), 5, 5), std::invalid_argument);
  }
}
