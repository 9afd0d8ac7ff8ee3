#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ezeta/rational.hpp"

namespace ezeta {

/// A finite decimal together with an absolute error bound, both expressed in
/// units of 10^-scale:
///
///   value = mantissa * 10^-scale,   bound = error_ulps * 10^-scale.
///
/// The quantity it approximates lies in [value - bound, value + bound].
class DecimalApprox {
public:
  DecimalApprox() = default;
  /// Throws std::invalid_argument if error_ulps is negative.
  DecimalApprox(BigInt mantissa, BigInt error_ulps, unsigned scale);

  /// Rounds an exact rational to `scale` places; the bound covers the rounding.
  static DecimalApprox from_rational(const Rational& q, unsigned scale);
  /// Encloses the real interval [x - err, x + err] of doubles at `scale` places.
  static DecimalApprox from_double(double x, double err, unsigned scale);

  [[nodiscard]] const BigInt& mantissa() const { return mantissa_; }
  [[nodiscard]] const BigInt& error_ulps() const { return error_ulps_; }
  [[nodiscard]] unsigned scale() const { return scale_; }

  [[nodiscard]] Rational value() const;
  [[nodiscard]] Rational bound() const;
  [[nodiscard]] Rational lower() const { return value() - bound(); }
  [[nodiscard]] Rational upper() const { return value() + bound(); }
  [[nodiscard]] double to_double() const { return value().to_double(); }

  [[nodiscard]] bool contains(const Rational& q) const;
  /// True when other's whole interval lies inside this one.
  [[nodiscard]] bool encloses(const DecimalApprox& other) const;

  /// Fixed-point rendering of the value with exactly scale() decimals.
  [[nodiscard]] std::string value_str() const;
  /// Fixed-point rendering of the bound with exactly scale() decimals.
  [[nodiscard]] std::string bound_str() const;
  /// "value +- bound"
  [[nodiscard]] std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const DecimalApprox& d);

private:
  BigInt mantissa_{0};
  BigInt error_ulps_{0};
  unsigned scale_ = 0;
};

/// Closed interval [lo, hi] * 10^-scale with integer endpoints. All arithmetic
/// rounds outward, so the exact result of an operation on any members of the
/// operands is a member of the result.
class FixedInterval {
public:
  FixedInterval() = default;
  FixedInterval(BigInt lo, BigInt hi, unsigned scale);

  static FixedInterval exact(const Rational& q, unsigned scale);

  [[nodiscard]] const BigInt& lo() const { return lo_; }
  [[nodiscard]] const BigInt& hi() const { return hi_; }
  [[nodiscard]] unsigned scale() const { return scale_; }
  [[nodiscard]] BigInt width() const { return hi_ - lo_; }

  /// Outward rounding to a coarser scale.
  [[nodiscard]] FixedInterval coarsen(unsigned scale) const;

  [[nodiscard]] FixedInterval operator+(const FixedInterval& o) const;
  [[nodiscard]] FixedInterval operator-(const FixedInterval& o) const;
  [[nodiscard]] FixedInterval operator-() const;
  [[nodiscard]] FixedInterval operator*(const FixedInterval& o) const;
  [[nodiscard]] FixedInterval scaled(const Rational& q) const;
  /// Requires 0 < lo.
  [[nodiscard]] FixedInterval reciprocal() const;
  [[nodiscard]] FixedInterval pow(unsigned long e) const;

  /// Rounds the midpoint to `digits` places. Returns an approximation whose
  /// bound is at most one unit in the last place, or nothing when the
  /// interval is too wide to guarantee that.
  [[nodiscard]] std::optional<DecimalApprox> to_decimal(unsigned digits) const;
  /// Same rounding, accepting whatever bound results.
  [[nodiscard]] DecimalApprox to_decimal_loose(unsigned digits) const;

private:
  BigInt lo_{0};
  BigInt hi_{0};
  unsigned scale_ = 0;
};

/// 10^e
BigInt pow10(unsigned e);

/// Interval containing pi at the given scale, by Machin's formula
/// pi = 16 atan(1/5) - 4 atan(1/239) with counted truncation errors.
/// The widest interval computed so far is cached and coarsened on demand.
FixedInterval pi_interval(unsigned scale);

/// pi to `digits` places with bound <= 10^-digits.
DecimalApprox pi_decimal(unsigned digits);

}  // namespace ezeta
