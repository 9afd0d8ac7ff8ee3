#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ezeta/rational.hpp"

namespace ezeta {

/// Which unknowns a relation speaks about: v_k = zeta_E(2k)/pi^(2k) for
/// EulerZeta, v_k = zeta(2k)/pi^(2k) for OrdinaryZeta.
enum class Family { EulerZeta, OrdinaryZeta };

std::string_view family_name(Family f);

/// sum_k q_k v_k = rhs, with unknowns v_1..v_m and q_m != 0.
struct LinearRelation {
  Family family = Family::EulerZeta;
  unsigned long m = 0;
  std::map<unsigned long, Rational> coefficients;
  Rational rhs;

  /// Substitutes values[k-1] for v_k and reports whether both sides agree.
  [[nodiscard]] bool balances(std::span<const Rational> values) const;
  /// e.g. "-4*v1 + 24*v2 = -1/10"
  [[nodiscard]] std::string str() const;
};

/// The relation obtained by evaluating the cosine series of x^(2m) on
/// (-2, 2) at x in {0, 1, 2}:
///
///   x = 0: sum (-1)^k P(2m,2k-1) v_k           = -1/(2(2m+1))
///   x = 1: sum (-1)^k P(2m,2k-1) 2^(-2k) v_k   = (2m+1-2^(2m)) / ((2m+1) 2^(2m+1))
///   x = 2: sum (-1)^(k+1) P(2m,2k-1) v_k       = m/(2m+1)
///
/// x = 2 uses convergence to the endpoint jump average 2^(2m) and yields
/// ordinary zeta values; the others yield Euler zeta values.
/// Throws std::invalid_argument for m == 0 or any other x.
LinearRelation relation_at(unsigned long m, int x);

class DegenerateSystem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Forward substitution through relations for m = 1..s. Throws
/// DegenerateSystem on mixed families, mis-ordering, a stray coefficient
/// beyond the relation's own m, or a zero pivot.
std::vector<Rational> solve_triangular(std::span<const LinearRelation> relations);

/// relation_at(1..s, x)
std::vector<LinearRelation> relations_at(unsigned long s, int x);

}  // namespace ezeta
