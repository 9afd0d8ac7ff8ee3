#include "ezeta/identities.hpp"

#include "ezeta/combinatorics.hpp"
#include "ezeta/zeta.hpp"

namespace ezeta {

std::string_view family_name(Family f) {
  return f == Family::EulerZeta ? "euler-zeta" : "ordinary-zeta";
}

bool LinearRelation::balances(std::span<const Rational> values) const {
  Rational lhs;
  for (const auto& [k, qk] : coefficients) {
    if (k == 0 || k > values.size()) return false;
    lhs += qk * values[k - 1];
  }
  return lhs == rhs;
}

std::string LinearRelation::str() const {
  std::string out;
  for (const auto& [k, qk] : coefficients) {
    if (!out.empty()) out += qk.sign() < 0 ? " - " : " + ";
    out += (out.empty() ? qk : qk.abs()).str() + "*v" + std::to_string(k);
  }
  return out + " = " + rhs.str();
}

LinearRelation relation_at(unsigned long m, int x) {
  if (m == 0) throw std::invalid_argument("relation_at: m must be >= 1");
  const long ml = static_cast<long>(m);
  LinearRelation rel;
  rel.m = m;
  for (unsigned long k = 1; k <= m; ++k) {
    const Rational perm(falling_factorial(2 * m, 2 * k - 1));
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    switch (x) {
      case 0: rel.coefficients[k] = sign * perm; break;
      case 1: rel.coefficients[k] = sign * perm * pow2(-2 * static_cast<long>(k)); break;
      case 2: rel.coefficients[k] = -sign * perm; break;
      default: throw std::invalid_argument("relation_at: x must be 0, 1 or 2");
    }
  }
  switch (x) {
    case 0:
      rel.rhs = Rational(-1L, 2 * (2 * ml + 1));
      break;
    case 1:
      rel.rhs = sum_identity_x1_rhs(m);
      break;
    default:
      rel.family = Family::OrdinaryZeta;
      rel.rhs = Rational(ml, 2 * ml + 1);
      break;
  }
  return rel;
}

std::vector<LinearRelation> relations_at(unsigned long s, int x) {
  std::vector<LinearRelation> out;
  out.reserve(s);
  for (unsigned long m = 1; m <= s; ++m) out.push_back(relation_at(m, x));
  return out;
}

std::vector<Rational> solve_triangular(std::span<const LinearRelation> relations) {
  std::vector<Rational> v;
  v.reserve(relations.size());
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const LinearRelation& rel = relations[i];
    const unsigned long row = i + 1;
    if (rel.family != relations.front().family) throw DegenerateSystem("relations mix families");
    if (rel.coefficients.empty() || rel.coefficients.rbegin()->first != row ||
        rel.coefficients.begin()->first == 0) {
      throw DegenerateSystem("relation " + std::to_string(row) + " is out of triangular order");
    }
    const Rational& pivot = rel.coefficients.rbegin()->second;
    if (pivot.is_zero()) throw DegenerateSystem("zero pivot in relation " + std::to_string(row));
    Rational acc = rel.rhs;
    for (const auto& [k, qk] : rel.coefficients) {
      if (k < row) acc -= qk * v[k - 1];
    }
    v.push_back(acc / pivot);
  }
  return v;
}

}  // namespace ezeta
