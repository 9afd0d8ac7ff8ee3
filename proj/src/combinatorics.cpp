#include "ezeta/combinatorics.hpp"

#include <mutex>

namespace ezeta {

BigInt falling_factorial(unsigned long n, unsigned long r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (unsigned long i = 0; i < r; ++i) out *= n - i;
  return out;
}

BigInt factorial(unsigned long n) { return falling_factorial(n, n); }

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  // Each partial product out * (n-i) / (i+1) is C(n, i+1), hence exact.
  for (unsigned long i = 0; i < k; ++i) {
    out *= n - i;
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), i + 1);
  }
  return out;
}

namespace {

void extend_recurrence(std::vector<Rational>& table, unsigned long n) {
  if (table.empty()) table.emplace_back(1);
  for (unsigned long m = table.size(); m <= n; ++m) {
    // (m+1) B_m = -sum_{k<m} C(m+1, k) B_k
    Rational acc;
    for (unsigned long k = 0; k < m; ++k) {
      if (table[k].is_zero()) continue;
      acc += Rational(binomial(m + 1, k)) * table[k];
    }
    table.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
}

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

std::vector<Rational> bernoulli_table_recurrence(unsigned long n) {
  std::vector<Rational> table;
  table.reserve(n + 1);
  extend_recurrence(table, n);
  return table;
}

Rational bernoulli(unsigned long n) {
  auto& cache = bernoulli_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.values.size() <= n) extend_recurrence(cache.values, n);
  return cache.values[n];
}

std::vector<Rational> bernoulli_table_akiyama_tanigawa(unsigned long n) {
  std::vector<Rational> row(n + 1);
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (unsigned long m = 0; m <= n; ++m) {
    row[m] = Rational(1L, static_cast<long>(m + 1));
    for (unsigned long j = m; j >= 1; --j) {
      row[j - 1] = Rational(static_cast<long>(j)) * (row[j - 1] - row[j]);
    }
    out.push_back(row[0]);
  }
  // The triangle produces B_1 = +1/2.
  if (n >= 1) out[1] = Rational(-1L, 2L);
  return out;
}

}  // namespace ezeta
