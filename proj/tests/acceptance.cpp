// Exit gate: one PASS/FAIL line per acceptance criterion. Returns nonzero if
// any criterion fails. Tolerances and runtime budgets are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ezeta/combinatorics.hpp"
#include "ezeta/fourier.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/zeta.hpp"
#include "oracles.hpp"

using namespace ezeta;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // <= 0: no runtime budget
  std::function<std::string()> check;  // empty string on success
};

Rational r(long n, long d) { return Rational(n, d); }
Rational ten_pow_neg(unsigned e) { return Rational(BigInt(1), pow10(e)); }

std::string method_agreement() {
  // Spot anchors come from the Bernoulli closed form.
  const Rational anchors[] = {r(1, 12), r(7, 720), r(31, 30240), r(127, 1209600)};
  const auto closed = euler_zeta_coefficients(64, Method::ClosedForm);
  for (int i = 0; i < 4; ++i) {
    if (closed[i] != anchors[i]) return "closed form anchor s=" + std::to_string(i + 1);
  }
  for (Method m : {Method::NewTheorem, Method::Corollary, Method::LeeRyooDerived}) {
    const auto table = euler_zeta_coefficients(64, m);
    for (unsigned long s = 1; s <= 64; ++s) {
      if (table[s - 1] != closed[s - 1]) return std::string(method_name(m)) + " at s=" + std::to_string(s);
    }
  }
  return {};
}

std::string documented_erratum() {
  const auto printed = euler_zeta(2, Method::LeeRyooPrinted).coeff;
  if (printed != r(5, 336)) return "printed s=2 gives " + printed.str();
  if (printed == r(7, 720)) return "printed agrees with the oracle";
  if (leeryoo_constant(2, LeeRyooVariant::Printed) != r(-13, 672)) return "printed constant";
  if (leeryoo_constant(2, LeeRyooVariant::Derived) != r(-13, 480)) return "derived constant";
  return {};
}

std::string sum_identity_x0() {
  for (long s = 1; s <= 64; ++s) {
    if (sum_identity_x0_lhs(s) != r(-1, 2 * (2 * s + 1))) return "s=" + std::to_string(s);
  }
  return {};
}

std::string sum_identity_x1() {
  for (long s = 1; s <= 64; ++s) {
    const Rational rhs = (Rational(2 * s + 1) - pow2(2 * s)) / (Rational(2 * s + 1) * pow2(2 * s + 1));
    if (sum_identity_x1_lhs(s) != rhs) return "s=" + std::to_string(s);
  }
  return {};
}

std::string perm_diff_identity() {
  for (unsigned long s = 1; s <= 128; ++s) {
    for (unsigned long k = 1; k <= s; ++k) {
      const BigInt rhs = 2 * oracle::gmp_factorial(2 * s - 2) * (2 * k - 1) * (2 * s - k) /
                         oracle::gmp_factorial(2 * s - 2 * k + 1);
      if (perm_diff(s, k) != rhs) return "s=" + std::to_string(s) + " k=" + std::to_string(k);
    }
  }
  return {};
}

std::string fourier_oracle() {
  const Rational tolerance = ten_pow_neg(9);
  for (unsigned long m = 1; m <= 3; ++m) {
    for (unsigned long n = 1; n <= 8; ++n) {
      const auto exact = eval_pi_polynomial(fourier_coefficient(m, n), 12);
      const auto numeric = fourier_coefficient_numeric(m, n, 1e-11);
      if ((exact.value() - numeric.value()).abs() > tolerance) {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
  }
  return {};
}

std::string convergence_at_substitution_points() {
  // 32/(pi^2 N) evaluated with an upper bound on pi^2 is the smaller, stricter value.
  const FixedInterval pi = pi_interval(30);
  const Rational pi_hi(pi.hi(), pow10(30));
  for (unsigned long N : {100UL, 1000UL, 10000UL}) {
    const Rational limit = Rational(32) / (pi_hi * pi_hi * Rational(static_cast<long>(N)));
    for (const auto& [x, fx] : {std::pair{Rational(0), Rational(0)}, std::pair{Rational(1), Rational(1)}}) {
      const auto d = partial_sum(1, x, N, 20);
      // Worst case distance from f(x) over the whole enclosure.
      const Rational worst = (d.value() - fx).abs() + d.bound();
      if (worst > limit) return "x=" + x.str() + " N=" + std::to_string(N);
    }
  }
  return {};
}

std::string series_enclosure() {
  const auto series = euler_zeta_series(1, 1000000);
  if (series.bound() > ten_pow_neg(12)) return "half-width " + series.bound_str();
  const auto exact = eval_pi_polynomial(PiPolynomial({{1, r(1, 12)}}), 30);
  if (exact.value_str() != "0.822467033424113218236207583323") return "pi^2/12 digits " + exact.value_str();
  if (!series.contains(exact.value())) return "30-digit value outside the series interval";
  return {};
}

std::string triangular_solve() {
  const auto euler = euler_zeta_coefficients(32, Method::ClosedForm);
  if (solve_triangular(relations_at(32, 0)) != euler) return "x=0 system";
  const auto ordinary = solve_triangular(relations_at(32, 2));
  if (ordinary[0] != r(1, 6) || ordinary[1] != r(1, 90) || ordinary[2] != r(1, 945)) return "x=2 anchors";
  for (unsigned long k = 1; k <= 32; ++k) {
    if (ordinary[k - 1] != zeta_even_closed_form(k)) return "x=2 system at k=" + std::to_string(k);
  }
  return {};
}

std::string bernoulli_integrity() {
  const auto rec = bernoulli_table_recurrence(128);
  const auto at = bernoulli_table_akiyama_tanigawa(128);
  for (unsigned long n = 0; n <= 128; ++n) {
    if (rec[n] != at[n]) return "B_" + std::to_string(n);
    if (n >= 3 && n % 2 == 1 && !rec[n].is_zero()) return "B_" + std::to_string(n) + " nonzero";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "method agreement s=1..64", 5.0, method_agreement},
      {2, "documented erratum of the printed constant", 0.0, documented_erratum},
      {3, "sum identity at x=0, s=1..64", 0.0, sum_identity_x0},
      {4, "sum identity at x=1, s=1..64", 0.0, sum_identity_x1},
      {5, "permutation-difference identity k<=s<=128", 2.0, perm_diff_identity},
      {6, "Fourier coefficients vs quadrature (m<=3, n<=8, 1e-9)", 10.0, fourier_oracle},
      {7, "partial-sum convergence at x=0 and x=1 (32/(pi^2 N))", 0.0, convergence_at_substitution_points},
      {8, "series enclosure of pi^2/12 with 10^6 terms", 5.0, series_enclosure},
      {9, "triangular solves reproduce zeta_E and zeta for k<=32", 0.0, triangular_solve},
      {10, "Bernoulli recurrence vs Akiyama-Tanigawa through B_128", 0.0, bernoulli_integrity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      problem = "over runtime budget of " + std::to_string(c.budget_seconds) + " s";
    }
    const bool ok = problem.empty();
    failures += ok ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                ok ? "" : " -- ", problem.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
