#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ezeta/combinatorics.hpp"
#include "ezeta/decimal.hpp"
#include "ezeta/fourier.hpp"
#include "ezeta/identities.hpp"
#include "ezeta/pi_polynomial.hpp"
#include "ezeta/verify.hpp"
#include "ezeta/zeta.hpp"

namespace py = pybind11;
using namespace ezeta;

namespace {

// Big integers and rationals cross the boundary as decimal strings; Python
// then rebuilds them as int and fractions.Fraction.
py::object to_py_int(const BigInt& n) { return py::int_(py::str(n.get_str(10))); }

py::object to_fraction(const Rational& q) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(q.num()), to_py_int(q.den()));
}

Rational from_py(const py::handle& obj) {
  // Accepts int, Fraction, or anything with numerator/denominator.
  if (py::isinstance<py::int_>(obj)) return Rational(BigInt(py::str(obj).cast<std::string>(), 10));
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return Rational(BigInt(py::str(obj.attr("numerator")).cast<std::string>(), 10),
                    BigInt(py::str(obj.attr("denominator")).cast<std::string>(), 10));
  }
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  throw py::type_error("expected int, Fraction, or a rational string");
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(to_fraction(q));
  return out;
}

Method method_from(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw py::value_error("unknown method: " + name);
  return *m;
}

LeeRyooVariant variant_from(const std::string& name) {
  if (name == "derived") return LeeRyooVariant::Derived;
  if (name == "printed") return LeeRyooVariant::Printed;
  throw py::value_error("variant must be 'derived' or 'printed'");
}

py::dict poly_dict(const PiPolynomial& p) {
  py::dict d;
  for (const auto& [k, c] : p.terms()) d[py::int_(k)] = to_fraction(c);
  return d;
}

PiPolynomial poly_from(const py::dict& d) {
  PiPolynomial p;
  for (const auto& [k, c] : d) p.add_term(k.cast<long>(), from_py(c));
  return p;
}

py::dict relation_dict(const LinearRelation& rel) {
  py::dict coeffs;
  for (const auto& [k, c] : rel.coefficients) coeffs[py::int_(k)] = to_fraction(c);
  py::dict d;
  d["family"] = std::string(family_name(rel.family));
  d["m"] = rel.m;
  d["coefficients"] = coeffs;
  d["rhs"] = to_fraction(rel.rhs);
  d["text"] = rel.str();
  return d;
}

LinearRelation relation_from(const py::dict& d) {
  LinearRelation rel;
  const auto fam = py::str(d["family"]).cast<std::string>();
  if (fam == family_name(Family::EulerZeta)) {
    rel.family = Family::EulerZeta;
  } else if (fam == family_name(Family::OrdinaryZeta)) {
    rel.family = Family::OrdinaryZeta;
  } else {
    throw py::value_error("unknown family: " + fam);
  }
  rel.m = d["m"].cast<unsigned long>();
  for (const auto& [k, c] : d["coefficients"].cast<py::dict>()) rel.coefficients[k.cast<unsigned long>()] = from_py(c);
  rel.rhs = from_py(d["rhs"]);
  return rel;
}

}  // namespace

PYBIND11_MODULE(_ezeta, m) {
  m.doc() = "Exact Euler zeta values at even arguments";

  py::register_exception<QuadratureDidNotConverge>(m, "QuadratureDidNotConverge", PyExc_RuntimeError);
  py::register_exception<DegenerateSystem>(m, "DegenerateSystem", PyExc_ValueError);

  py::class_<DecimalApprox>(m, "DecimalApprox")
      .def_property_readonly("value", [](const DecimalApprox& d) { return to_fraction(d.value()); })
      .def_property_readonly("bound", [](const DecimalApprox& d) { return to_fraction(d.bound()); })
      .def_property_readonly("scale", &DecimalApprox::scale)
      .def_property_readonly("value_str", &DecimalApprox::value_str)
      .def_property_readonly("bound_str", &DecimalApprox::bound_str)
      .def("contains", [](const DecimalApprox& d, const py::handle& q) { return d.contains(from_py(q)); })
      .def("__float__", &DecimalApprox::to_double)
      .def("__str__", &DecimalApprox::str)
      .def("__repr__", [](const DecimalApprox& d) { return "DecimalApprox(" + d.str() + ")"; });

  m.attr("METHODS") = [] {
    py::list names;
    for (Method meth : kAllMethods) names.append(std::string(method_name(meth)));
    return names;
  }();

  m.def(
      "euler_zeta",
      [](unsigned long s, const std::string& method) { return to_fraction(euler_zeta(s, method_from(method)).coeff); },
      py::arg("s"), py::arg("method") = "new-theorem",
      "Rational c with zeta_E(2s) = c * pi^(2s).");
  m.def(
      "euler_zeta_table",
      [](unsigned long s_max, const std::string& method) {
        return fractions(euler_zeta_coefficients(s_max, method_from(method)));
      },
      py::arg("s_max"), py::arg("method") = "new-theorem");
  m.def(
      "euler_zeta_closed_form", [](unsigned long s) { return to_fraction(euler_zeta_closed_form(s).coeff); },
      py::arg("s"));
  m.def(
      "zeta_even_closed_form", [](unsigned long n) { return to_fraction(zeta_even_closed_form(n)); }, py::arg("n"),
      "Rational c with zeta(2n) = c * pi^(2n).");
  m.def(
      "bernoulli", [](unsigned long n) { return to_fraction(bernoulli(n)); }, py::arg("n"));
  m.def(
      "leeryoo_constant",
      [](unsigned long s, const std::string& variant) { return to_fraction(leeryoo_constant(s, variant_from(variant))); },
      py::arg("s"), py::arg("variant") = "derived");
  m.def(
      "sum_identity_x0_lhs", [](unsigned long s) { return to_fraction(sum_identity_x0_lhs(s)); }, py::arg("s"));
  m.def(
      "sum_identity_x1_lhs", [](unsigned long s) { return to_fraction(sum_identity_x1_lhs(s)); }, py::arg("s"));
  m.def(
      "sum_identity_x1_rhs", [](unsigned long s) { return to_fraction(sum_identity_x1_rhs(s)); }, py::arg("s"));
  m.def(
      "perm_diff", [](unsigned long s, unsigned long k) { return to_py_int(perm_diff(s, k)); }, py::arg("s"),
      py::arg("k"));

  m.def(
      "fourier_coefficient", [](unsigned long mm, unsigned long n) { return poly_dict(fourier_coefficient(mm, n)); },
      py::arg("m"), py::arg("n"), "Cosine coefficient as {k: c_k} meaning sum c_k * pi^(2k).");
  m.def("fourier_coefficient_numeric", &fourier_coefficient_numeric, py::arg("m"), py::arg("n"),
        py::arg("tol") = 1e-9, py::arg("max_halvings") = kDefaultQuadratureHalvings);
  m.def(
      "partial_sum",
      [](unsigned long mm, const py::handle& x, unsigned long N, unsigned digits) {
        return partial_sum(mm, from_py(x), N, digits);
      },
      py::arg("m"), py::arg("x"), py::arg("N"), py::arg("digits") = 20);

  m.def("relation_at", [](unsigned long mm, int x) { return relation_dict(relation_at(mm, x)); }, py::arg("m"),
        py::arg("x"));
  m.def(
      "relations_at",
      [](unsigned long s, int x) {
        py::list out;
        for (const auto& rel : relations_at(s, x)) out.append(relation_dict(rel));
        return out;
      },
      py::arg("s"), py::arg("x"));
  m.def(
      "solve_triangular",
      [](const py::list& rels) {
        std::vector<LinearRelation> parsed;
        for (const auto& r : rels) parsed.push_back(relation_from(r.cast<py::dict>()));
        return fractions(solve_triangular(parsed));
      },
      py::arg("relations"));

  m.def("pi_decimal", &pi_decimal, py::arg("digits"));
  m.def(
      "eval_pi_polynomial", [](const py::dict& p, unsigned digits) { return eval_pi_polynomial(poly_from(p), digits); },
      py::arg("poly"), py::arg("digits"));
  m.def(
      "euler_zeta_decimal",
      [](unsigned long s, unsigned digits, const std::string& method) {
        return eval_pi_polynomial(euler_zeta(s, method_from(method)).as_pi_polynomial(), digits);
      },
      py::arg("s"), py::arg("digits") = 30, py::arg("method") = "new-theorem");
  m.def("euler_zeta_series", &euler_zeta_series, py::arg("s"), py::arg("terms"));

  m.def(
      "run_verification",
      [](unsigned long s_max) {
        py::list out;
        for (const auto& r : run_verification(s_max)) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      py::arg("s_max") = 64);
}
