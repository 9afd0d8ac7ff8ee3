#pragma once

#include <vector>

#include "ezeta/rational.hpp"

namespace ezeta {

/// n!
BigInt factorial(unsigned long n);

/// n (n-1) ... (n-r+1), the product of r descending factors. Zero when r > n,
/// since the factor 0 is reached.
BigInt falling_factorial(unsigned long n, unsigned long r);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0. Memoized and
/// safe to call from several threads.
Rational bernoulli(unsigned long n);

/// B_0..B_n from the defining recurrence, computed from scratch.
std::vector<Rational> bernoulli_table_recurrence(unsigned long n);

/// B_0..B_n by the Akiyama-Tanigawa triangle, reported with B_1 = -1/2 so it
/// is directly comparable with bernoulli().
std::vector<Rational> bernoulli_table_akiyama_tanigawa(unsigned long n);

}  // namespace ezeta
