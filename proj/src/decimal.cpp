#include "ezeta/decimal.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>

namespace ezeta {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nearest integer to a/b, ties away from zero. b > 0.
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt twice = 2 * a;
  BigInt q = a >= 0 ? floor_div(twice + b, 2 * b) : -floor_div(-twice + b, 2 * b);
  return q;
}

std::string fixed_point(const BigInt& mantissa, unsigned scale) {
  std::string digits = BigInt(::abs(mantissa)).get_str();
  if (digits.size() <= scale) digits.insert(0, scale + 1 - digits.size(), '0');
  if (scale > 0) digits.insert(digits.size() - scale, 1, '.');
  if (mantissa < 0) digits.insert(0, 1, '-');
  return digits;
}

void require_same_scale(const FixedInterval& a, const FixedInterval& b) {
  if (a.scale() != b.scale()) throw std::logic_error("FixedInterval scale mismatch");
}

}  // namespace

BigInt pow10(unsigned e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

// ---------------------------------------------------------------------------
// DecimalApprox

DecimalApprox::DecimalApprox(BigInt mantissa, BigInt error_ulps, unsigned scale)
    : mantissa_(std::move(mantissa)), error_ulps_(std::move(error_ulps)), scale_(scale) {
  if (error_ulps_ < 0) throw std::invalid_argument("negative error bound");
}

DecimalApprox DecimalApprox::from_rational(const Rational& q, unsigned scale) {
  const BigInt scaled_num = q.num() * pow10(scale);
  const BigInt v = round_div(scaled_num, q.den());
  const BigInt err = v * q.den() == scaled_num ? BigInt(0) : BigInt(1);
  return {v, err, scale};
}

DecimalApprox DecimalApprox::from_double(double x, double err, unsigned scale) {
  if (!(err >= 0.0)) throw std::invalid_argument("error must be a nonnegative number");
  const mpq_class xq(x);
  const mpq_class eq(err);
  const BigInt unit = pow10(scale);
  const mpq_class xs = xq * mpq_class(unit);
  const BigInt v = round_div(xs.get_num(), xs.get_den());
  mpq_class total = ::abs(xs - mpq_class(v)) + eq * mpq_class(unit);
  return {v, ceil_div(total.get_num(), total.get_den()), scale};
}

Rational DecimalApprox::value() const { return Rational(mantissa_, pow10(scale_)); }

Rational DecimalApprox::bound() const { return Rational(error_ulps_, pow10(scale_)); }

bool DecimalApprox::contains(const Rational& q) const { return lower() <= q && q <= upper(); }

bool DecimalApprox::encloses(const DecimalApprox& other) const {
  return lower() <= other.lower() && other.upper() <= upper();
}

std::string DecimalApprox::value_str() const { return fixed_point(mantissa_, scale_); }

std::string DecimalApprox::bound_str() const { return fixed_point(error_ulps_, scale_); }

std::string DecimalApprox::str() const { return value_str() + " +- " + bound_str(); }

std::ostream& operator<<(std::ostream& os, const DecimalApprox& d) { return os << d.str(); }

// ---------------------------------------------------------------------------
// FixedInterval

FixedInterval::FixedInterval(BigInt lo, BigInt hi, unsigned scale)
    : lo_(std::move(lo)), hi_(std::move(hi)), scale_(scale) {
  if (lo_ > hi_) throw std::invalid_argument("FixedInterval with lo > hi");
}

FixedInterval FixedInterval::exact(const Rational& q, unsigned scale) {
  const BigInt n = q.num() * pow10(scale);
  return {floor_div(n, q.den()), ceil_div(n, q.den()), scale};
}

FixedInterval FixedInterval::coarsen(unsigned scale) const {
  if (scale >= scale_) {
    const BigInt f = pow10(scale - scale_);
    return {lo_ * f, hi_ * f, scale};
  }
  const BigInt f = pow10(scale_ - scale);
  return {floor_div(lo_, f), ceil_div(hi_, f), scale};
}

FixedInterval FixedInterval::operator+(const FixedInterval& o) const {
  require_same_scale(*this, o);
  return {lo_ + o.lo_, hi_ + o.hi_, scale_};
}

FixedInterval FixedInterval::operator-(const FixedInterval& o) const {
  require_same_scale(*this, o);
  return {lo_ - o.hi_, hi_ - o.lo_, scale_};
}

FixedInterval FixedInterval::operator-() const { return {-hi_, -lo_, scale_}; }

FixedInterval FixedInterval::operator*(const FixedInterval& o) const {
  require_same_scale(*this, o);
  const BigInt p[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
  BigInt mn = p[0], mx = p[0];
  for (const auto& v : p) {
    if (v < mn) mn = v;
    if (v > mx) mx = v;
  }
  const BigInt f = pow10(scale_);
  return {floor_div(mn, f), ceil_div(mx, f), scale_};
}

FixedInterval FixedInterval::scaled(const Rational& q) const {
  const BigInt a = q.num();
  const BigInt b = q.den();
  if (a >= 0) return {floor_div(a * lo_, b), ceil_div(a * hi_, b), scale_};
  return {floor_div(a * hi_, b), ceil_div(a * lo_, b), scale_};
}

FixedInterval FixedInterval::reciprocal() const {
  if (lo_ <= 0 && hi_ >= 0) throw std::domain_error("reciprocal of an interval containing 0");
  if (hi_ < 0) return -(-*this).reciprocal();
  const BigInt one = pow10(2 * scale_);
  return {floor_div(one, hi_), ceil_div(one, lo_), scale_};
}

FixedInterval FixedInterval::pow(unsigned long e) const {
  FixedInterval out = exact(Rational(1), scale_);
  FixedInterval base = *this;
  while (e > 0) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

DecimalApprox FixedInterval::to_decimal_loose(unsigned digits) const {
  if (digits > scale_) return coarsen(digits).to_decimal_loose(digits);
  const BigInt f = pow10(scale_ - digits);
  const BigInt mid2 = lo_ + hi_;
  const BigInt v = round_div(mid2, 2 * f);
  // Doubled to stay in integers: 2*halfwidth + 2*|mid - v f|.
  const BigInt total2 = (hi_ - lo_) + BigInt(::abs(mid2 - 2 * v * f));
  return {v, ceil_div(total2, 2 * f), digits};
}

std::optional<DecimalApprox> FixedInterval::to_decimal(unsigned digits) const {
  DecimalApprox d = to_decimal_loose(digits);
  if (d.error_ulps() > 1) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------
// pi

namespace {

struct AtanSum {
  BigInt sum;
  BigInt error_ulps;
};

// atan(1/x) * 10^scale by the alternating Gregory series. Every truncating
// division loses less than one unit; the running power 10^scale / x^(2j+1)
// stays within 2 units of exact, so each term is within 3 units and so is
// the first omitted term, which bounds the alternating tail.
AtanSum atan_inverse(unsigned long x, unsigned scale) {
  const unsigned long x2 = x * x;
  BigInt power = pow10(scale) / x;
  BigInt sum = 0;
  unsigned long terms = 0;
  for (unsigned long j = 0;; ++j) {
    BigInt term = power / (2 * j + 1);
    if (term == 0) break;
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    ++terms;
    power /= x2;
  }
  return {sum, BigInt(3) * (terms + 1)};
}

FixedInterval machin_pi(unsigned scale) {
  const AtanSum a5 = atan_inverse(5, scale);
  const AtanSum a239 = atan_inverse(239, scale);
  const BigInt centre = 16 * a5.sum - 4 * a239.sum;
  const BigInt err = 16 * a5.error_ulps + 4 * a239.error_ulps;
  return {centre - err, centre + err, scale};
}

constexpr unsigned kPiGuardDigits = 12;

struct PiCache {
  std::mutex mutex;
  FixedInterval value;
  bool valid = false;
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

}  // namespace

FixedInterval pi_interval(unsigned scale) {
  auto& cache = pi_cache();
  std::lock_guard lock(cache.mutex);
  if (!cache.valid || cache.value.scale() < scale + kPiGuardDigits) {
    unsigned working = scale + kPiGuardDigits;
    if (cache.valid && working < 2 * cache.value.scale()) working = 2 * cache.value.scale();
    cache.value = machin_pi(working);
    cache.valid = true;
  }
  return cache.value.coarsen(scale);
}

DecimalApprox pi_decimal(unsigned digits) {
  if (digits == 0) throw std::invalid_argument("pi_decimal: digits must be >= 1");
  for (unsigned extra = 4;; extra *= 2) {
    if (auto d = pi_interval(digits + extra).to_decimal(digits)) return *d;
  }
}

}  // namespace ezeta
