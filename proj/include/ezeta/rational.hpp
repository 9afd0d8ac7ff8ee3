#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ezeta {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(int value) : value_(value) {}
  Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "n", "-n" or "n/d" with optional sign. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const { return value_.get_num(); }
  [[nodiscard]] BigInt den() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational reciprocal() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// "n/d", or "n" when the denominator is 1.
  [[nodiscard]] std::string str() const;
  /// Always "n/d", including "0/1".
  [[nodiscard]] std::string fraction_str() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

/// 2^e for any integer e, as an exact rational.
Rational pow2(long e);

/// base^e for a nonnegative exponent.
Rational pow(const Rational& base, unsigned long e);

/// Number of bits needed for |n|; 0 for n == 0.
std::size_t bit_length(const BigInt& n);

}  // namespace ezeta
