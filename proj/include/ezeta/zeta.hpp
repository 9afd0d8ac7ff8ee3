#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "ezeta/decimal.hpp"
#include "ezeta/pi_polynomial.hpp"
#include "ezeta/rational.hpp"

namespace ezeta {

/// How a value of the Euler zeta function (the alternating series
/// sum (-1)^(n-1) / n^s) at an even argument is obtained.
enum class Method {
  NewTheorem,      ///< recurrence from the x = 0 substitution identity
  Corollary,       ///< the same recurrence with permutation numbers in factorial form
  LeeRyooDerived,  ///< x = 1 recurrence with the constant consistent with its derivation
  LeeRyooPrinted,  ///< x = 1 recurrence with the (2s-1)(2s+3) constant as published; wrong for s >= 2
  ClosedForm,      ///< (1 - 2^(1-2s)) zeta(2s) through Bernoulli numbers
};

/// Every method in the fixed order used for "all".
inline constexpr std::array<Method, 5> kAllMethods = {
    Method::NewTheorem, Method::Corollary, Method::LeeRyooDerived, Method::LeeRyooPrinted,
    Method::ClosedForm};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// zeta_E(2s) = coeff * pi^(2s).
struct EulerZetaValue {
  unsigned long s = 0;
  Rational coeff;

  [[nodiscard]] PiPolynomial as_pi_polynomial() const {
    return PiPolynomial::monomial(coeff, static_cast<long>(s));
  }
  friend bool operator==(const EulerZetaValue&, const EulerZetaValue&) = default;
};

enum class LeeRyooVariant { Printed, Derived };

/// Rational w_n with zeta(2n) = w_n pi^(2n), from B_{2n}. n >= 1.
Rational zeta_even_closed_form(unsigned long n);

/// s >= 1.
EulerZetaValue euler_zeta_closed_form(unsigned long s);

/// Coefficient c_s by the chosen method. Recurrence methods build and cache
/// c_1..c_s in one forward pass; s = 1 is the given base value 1/12.
/// Thread-safe.
EulerZetaValue euler_zeta(unsigned long s, Method method);

/// c_1..c_s_max computed from scratch without touching any cache.
std::vector<Rational> euler_zeta_coefficients(unsigned long s_max, Method method);

/// Constant term of the x = 1 recurrence, s >= 2:
///   numerator 2^(2s+1) - 12 s^2 + 3
///   printed denominator 2^(2s+1) (2s-1)(2s+3)
///   derived denominator 2^(2s+1) (2s-1)(2s+1)
Rational leeryoo_constant(unsigned long s, LeeRyooVariant variant);

/// sum_{k=1}^{s} (-1)^k P(2s, 2k-1) c_k with closed-form c_k; equals -1/(2(2s+1)).
Rational sum_identity_x0_lhs(unsigned long s);

/// (2s + 1 - 2^(2s)) / ((2s+1) 2^(2s+1)).
Rational sum_identity_x1_rhs(unsigned long s);

/// sum_{k=1}^{s} (-1)^k P(2s, 2k-1) 2^(-2k) c_k with closed-form c_k.
Rational sum_identity_x1_lhs(unsigned long s);

/// P(2s, 2k-1) - P(2s-2, 2k-1) for 1 <= k <= s.
BigInt perm_diff(unsigned long s, unsigned long k);

/// Partial sum of the defining alternating series with an enclosure that
/// covers the tail 1/(terms+1)^(2s) and all rounding.
DecimalApprox euler_zeta_series(unsigned long s, unsigned long terms);

}  // namespace ezeta
