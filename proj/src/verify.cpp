#include "ezeta/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "ezeta/combinatorics.hpp"
#include "ezeta/fourier.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta {

namespace {

using Check = std::function<std::string(unsigned long)>;

// Each check returns an empty string on success, otherwise a description of
// the first failure.

std::string method_agreement(unsigned long s_max) {
  const auto reference = euler_zeta_coefficients(s_max, Method::ClosedForm);
  for (Method m : {Method::NewTheorem, Method::Corollary, Method::LeeRyooDerived}) {
    const auto table = euler_zeta_coefficients(s_max, m);
    for (unsigned long s = 1; s <= s_max; ++s) {
      if (table[s - 1] != reference[s - 1]) {
        return std::string(method_name(m)) + " differs at s=" + std::to_string(s);
      }
    }
  }
  return {};
}

std::string documented_erratum(unsigned long s_max) {
  if (leeryoo_constant(2, LeeRyooVariant::Printed) != Rational(-13L, 672L)) return "printed constant";
  if (leeryoo_constant(2, LeeRyooVariant::Derived) != Rational(-13L, 480L)) return "derived constant";
  const auto printed = euler_zeta_coefficients(s_max, Method::LeeRyooPrinted);
  const auto reference = euler_zeta_coefficients(s_max, Method::ClosedForm);
  if (printed[1] != Rational(5L, 336L)) return "printed s=2 is " + printed[1].str();
  for (unsigned long s = 2; s <= s_max; ++s) {
    if (printed[s - 1] == reference[s - 1]) return "printed agrees at s=" + std::to_string(s);
  }
  return {};
}

std::string sum_identity_x0(unsigned long s_max) {
  for (unsigned long s = 1; s <= s_max; ++s) {
    const long sl = static_cast<long>(s);
    if (sum_identity_x0_lhs(s) != Rational(-1L, 2 * (2 * sl + 1))) return "s=" + std::to_string(s);
  }
  return {};
}

std::string sum_identity_x1(unsigned long s_max) {
  for (unsigned long s = 1; s <= s_max; ++s) {
    if (sum_identity_x1_lhs(s) != sum_identity_x1_rhs(s)) return "s=" + std::to_string(s);
  }
  return {};
}

std::string perm_diff_identity(unsigned long s_max) {
  const unsigned long limit = 2 * s_max;
  for (unsigned long s = 1; s <= limit; ++s) {
    for (unsigned long k = 1; k <= s; ++k) {
      const BigInt closed = 2 * factorial(2 * s - 2) * (2 * k - 1) * (2 * s - k) / factorial(2 * s - 2 * k + 1);
      if (perm_diff(s, k) != closed) return "s=" + std::to_string(s) + " k=" + std::to_string(k);
    }
  }
  return {};
}

std::string bernoulli_integrity(unsigned long s_max) {
  const unsigned long n = std::max(2 * s_max, 128UL);
  const auto rec = bernoulli_table_recurrence(n);
  const auto at = bernoulli_table_akiyama_tanigawa(n);
  for (unsigned long i = 0; i <= n; ++i) {
    if (rec[i] != at[i]) return "B_" + std::to_string(i) + " disagrees";
    if (i >= 3 && i % 2 == 1 && !rec[i].is_zero()) return "B_" + std::to_string(i) + " nonzero";
  }
  return {};
}

std::string fourier_quadrature(unsigned long) {
  for (unsigned long m = 1; m <= 3; ++m) {
    for (unsigned long n = 1; n <= 8; ++n) {
      const auto exact = eval_pi_polynomial(fourier_coefficient(m, n), 12);
      const auto numeric = fourier_coefficient_numeric(m, n, 1e-11);
      if ((exact.value() - numeric.value()).abs() > Rational(BigInt(1), pow10(9))) {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
  }
  return {};
}

std::string triangular_solve(unsigned long s_max) {
  const auto euler = euler_zeta_coefficients(s_max, Method::ClosedForm);
  for (int x : {0, 1, 2}) {
    const auto relations = relations_at(s_max, x);
    const auto solved = solve_triangular(relations);
    for (unsigned long k = 1; k <= s_max; ++k) {
      const Rational expected = x == 2 ? zeta_even_closed_form(k) : euler[k - 1];
      if (solved[k - 1] != expected) return "x=" + std::to_string(x) + " k=" + std::to_string(k);
    }
  }
  const auto theorem = euler_zeta_coefficients(s_max, Method::NewTheorem);
  const auto solved0 = solve_triangular(relations_at(s_max, 0));
  if (solved0 != theorem) return "x=0 solve differs from the recurrence";
  return {};
}

std::string relation_consistency(unsigned long s_max) {
  const auto euler = euler_zeta_coefficients(s_max, Method::ClosedForm);
  std::vector<Rational> ordinary;
  for (unsigned long k = 1; k <= s_max; ++k) ordinary.push_back(zeta_even_closed_form(k));
  for (int x : {0, 1, 2}) {
    for (unsigned long m = 1; m <= s_max; ++m) {
      const auto rel = relation_at(m, x);
      if (!rel.balances(x == 2 ? ordinary : euler)) {
        return "x=" + std::to_string(x) + " m=" + std::to_string(m);
      }
    }
  }
  return {};
}

std::string series_enclosure(unsigned long s_max) {
  const auto euler = euler_zeta_coefficients(s_max, Method::ClosedForm);
  for (unsigned long s = 1; s <= s_max; ++s) {
    const auto series = euler_zeta_series(s, 1000);
    const EulerZetaValue v{s, euler[s - 1]};
    const auto exact = eval_pi_polynomial(v.as_pi_polynomial(), series.scale() + 4);
    if (!series.contains(exact.value())) return "s=" + std::to_string(s);
  }
  return {};
}

std::string positivity_monotonicity(unsigned long s_max) {
  const auto euler = euler_zeta_coefficients(s_max, Method::ClosedForm);
  Rational previous;
  for (unsigned long s = 1; s <= s_max; ++s) {
    if (euler[s - 1].sign() <= 0) return "c_" + std::to_string(s) + " not positive";
    const EulerZetaValue v{s, euler[s - 1]};
    // 1 - zeta_E(2s) is about 2^(-2s), so 30 places alone cannot separate
    // neighbouring values once s is large.
    const auto d = eval_pi_polynomial(v.as_pi_polynomial(), 30 + static_cast<unsigned>(s));
    if (!(d.upper() < Rational(1))) return "zeta_E(" + std::to_string(2 * s) + ") not below 1";
    if (s > 1 && !(previous < d.lower())) return "not increasing at s=" + std::to_string(s);
    previous = d.upper();
  }
  return {};
}

}  // namespace

std::vector<SuiteResult> run_verification(unsigned long s_max) {
  if (s_max < 2) throw std::invalid_argument("run_verification: s_max must be >= 2");
  const std::vector<std::pair<std::string, Check>> suites = {
      {"method-agreement", method_agreement},
      {"documented-erratum", documented_erratum},
      {"sum-identity-x0", sum_identity_x0},
      {"sum-identity-x1", sum_identity_x1},
      {"perm-diff-identity", perm_diff_identity},
      {"bernoulli-integrity", bernoulli_integrity},
      {"fourier-quadrature", fourier_quadrature},
      {"triangular-solve", triangular_solve},
      {"relation-consistency", relation_consistency},
      {"series-enclosure", series_enclosure},
      {"positivity-monotonicity", positivity_monotonicity},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, check] : suites) {
    SuiteResult r{name, false, {}};
    try {
      r.detail = check(s_max);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace ezeta
