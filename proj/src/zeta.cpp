#include "ezeta/zeta.hpp"

#include <mutex>
#include <stdexcept>

#include "ezeta/combinatorics.hpp"

namespace ezeta {

namespace {

Rational sign_power(unsigned long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational q(long n) { return Rational(n); }

void require_positive(unsigned long s, const char* what) {
  if (s == 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

// c_s for s >= 2 given c[0..s-2] = c_1..c_{s-1}.
Rational recurrence_step(Method method, unsigned long s, const std::vector<Rational>& c) {
  const long sl = static_cast<long>(s);
  Rational sum;
  switch (method) {
    case Method::NewTheorem: {
      for (unsigned long k = 1; k < s; ++k) {
        sum += sign_power(k) * c[k - 1] * Rational(perm_diff(s, k));
      }
      const Rational constant = Rational(1L, (2 * sl - 1) * (2 * sl + 1));
      return sign_power(s) / Rational(falling_factorial(2 * s, 2 * s - 1)) * (constant - sum);
    }
    case Method::Corollary: {
      for (unsigned long k = 1; k < s; ++k) {
        const long kl = static_cast<long>(k);
        sum += sign_power(k) * c[k - 1] * q((2 * kl - 1) * (2 * sl - kl)) /
               Rational(factorial(2 * s - 2 * k + 1));
      }
      const Rational constant = Rational(1) / Rational(factorial(2 * s + 1));
      return sign_power(s) / q(2 * sl - 1) * (constant - sum / q(sl));
    }
    case Method::LeeRyooDerived:
    case Method::LeeRyooPrinted: {
      for (unsigned long k = 1; k < s; ++k) {
        sum += sign_power(k) * c[k - 1] * pow2(-2 * static_cast<long>(k)) * Rational(perm_diff(s, k));
      }
      const auto variant =
          method == Method::LeeRyooPrinted ? LeeRyooVariant::Printed : LeeRyooVariant::Derived;
      return sign_power(s) * pow2(2 * sl) / Rational(falling_factorial(2 * s, 2 * s - 1)) *
             (leeryoo_constant(s, variant) - sum);
    }
    case Method::ClosedForm:
      break;
  }
  throw std::logic_error("recurrence_step: not a recurrence method");
}

Rational closed_form_from(const Rational& b2s, unsigned long s) {
  const long two_s = 2 * static_cast<long>(s);
  const Rational zeta = sign_power(s + 1) * b2s * pow2(two_s - 1) / Rational(factorial(2 * s));
  return (Rational(1) - pow2(1 - two_s)) * zeta;
}

void extend(std::vector<Rational>& c, unsigned long s_max, Method method) {
  if (c.empty() && s_max >= 1) c.emplace_back(1L, 12L);
  for (unsigned long s = c.size() + 1; s <= s_max; ++s) c.push_back(recurrence_step(method, s, c));
}

struct CoefficientCache {
  std::mutex mutex;
  std::array<std::vector<Rational>, kAllMethods.size()> tables;
};

CoefficientCache& coefficient_cache() {
  static CoefficientCache cache;
  return cache;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::NewTheorem: return "new-theorem";
    case Method::Corollary: return "corollary";
    case Method::LeeRyooDerived: return "leeryoo-derived";
    case Method::LeeRyooPrinted: return "leeryoo-printed";
    case Method::ClosedForm: return "closed-form";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

Rational zeta_even_closed_form(unsigned long n) {
  require_positive(n, "zeta_even_closed_form");
  // zeta(2n) = (-1)^(n+1) B_2n (2 pi)^(2n) / (2 (2n)!)
  return sign_power(n + 1) * bernoulli(2 * n) * pow2(2 * static_cast<long>(n) - 1) /
         Rational(factorial(2 * n));
}

EulerZetaValue euler_zeta_closed_form(unsigned long s) {
  require_positive(s, "euler_zeta_closed_form");
  return {s, closed_form_from(bernoulli(2 * s), s)};
}

std::vector<Rational> euler_zeta_coefficients(unsigned long s_max, Method method) {
  std::vector<Rational> c;
  c.reserve(s_max);
  if (method == Method::ClosedForm) {
    const auto b = bernoulli_table_recurrence(2 * s_max);
    for (unsigned long s = 1; s <= s_max; ++s) c.push_back(closed_form_from(b[2 * s], s));
    return c;
  }
  extend(c, s_max, method);
  return c;
}

EulerZetaValue euler_zeta(unsigned long s, Method method) {
  require_positive(s, "euler_zeta");
  if (method == Method::ClosedForm) return euler_zeta_closed_form(s);
  auto& cache = coefficient_cache();
  std::lock_guard lock(cache.mutex);
  auto& table = cache.tables[static_cast<std::size_t>(method)];
  if (table.size() < s) extend(table, s, method);
  return {s, table[s - 1]};
}

Rational leeryoo_constant(unsigned long s, LeeRyooVariant variant) {
  if (s < 2) throw std::invalid_argument("leeryoo_constant: s must be >= 2");
  const long sl = static_cast<long>(s);
  const Rational top = pow2(2 * sl + 1);
  const Rational numerator = top - q(12 * sl * sl - 3);
  const long last = variant == LeeRyooVariant::Printed ? 2 * sl + 3 : 2 * sl + 1;
  return numerator / (top * q((2 * sl - 1) * last));
}

Rational sum_identity_x0_lhs(unsigned long s) {
  require_positive(s, "sum_identity_x0_lhs");
  Rational sum;
  for (unsigned long k = 1; k <= s; ++k) {
    sum += sign_power(k) * Rational(falling_factorial(2 * s, 2 * k - 1)) * euler_zeta_closed_form(k).coeff;
  }
  return sum;
}

Rational sum_identity_x1_rhs(unsigned long s) {
  require_positive(s, "sum_identity_x1_rhs");
  const long sl = static_cast<long>(s);
  return (q(2 * sl + 1) - pow2(2 * sl)) / (q(2 * sl + 1) * pow2(2 * sl + 1));
}

Rational sum_identity_x1_lhs(unsigned long s) {
  require_positive(s, "sum_identity_x1_lhs");
  Rational sum;
  for (unsigned long k = 1; k <= s; ++k) {
    sum += sign_power(k) * Rational(falling_factorial(2 * s, 2 * k - 1)) *
           pow2(-2 * static_cast<long>(k)) * euler_zeta_closed_form(k).coeff;
  }
  return sum;
}

BigInt perm_diff(unsigned long s, unsigned long k) {
  if (k < 1 || k > s) throw std::invalid_argument("perm_diff: need 1 <= k <= s");
  return falling_factorial(2 * s, 2 * k - 1) - falling_factorial(2 * s - 2, 2 * k - 1);
}

DecimalApprox euler_zeta_series(unsigned long s, unsigned long terms) {
  require_positive(s, "euler_zeta_series");
  require_positive(terms, "euler_zeta_series terms");
  const unsigned long exponent = 2 * s;
  BigInt tail_den;
  mpz_ui_pow_ui(tail_den.get_mpz_t(), terms + 1, exponent);
  // Enough places that per-term rounding is far below the tail bound.
  const auto scale = static_cast<unsigned>(mpz_sizeinbase(tail_den.get_mpz_t(), 10) +
                                           std::to_string(terms).size() + 6);
  const BigInt unit = pow10(scale);

  BigInt sum = 0;
  BigInt rounding = 0;
  BigInt power, quotient, remainder;
  for (unsigned long n = 1; n <= terms; ++n) {
    mpz_ui_pow_ui(power.get_mpz_t(), n, exponent);
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), unit.get_mpz_t(), power.get_mpz_t());
    if (n % 2 == 1) {
      sum += quotient;
    } else {
      sum -= quotient;
    }
    if (remainder != 0) rounding += 1;
  }
  BigInt tail;
  mpz_cdiv_q(tail.get_mpz_t(), unit.get_mpz_t(), tail_den.get_mpz_t());
  return {sum, tail + rounding, scale};
}

}  // namespace ezeta
