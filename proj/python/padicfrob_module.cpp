#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "padicfrob/cli.hpp"
#include "padicfrob/errors.hpp"
#include "padicfrob/expansion.hpp"
#include "padicfrob/frobenius.hpp"
#include "padicfrob/mum.hpp"
#include "padicfrob/zeta_gamma.hpp"

namespace py = pybind11;
using namespace padicfrob;

namespace {

py::object to_py(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object to_py(const Rational& x) { return py::module_::import("fractions").attr("Fraction")(x.get_str()); }

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

// (rational lift, valuation, absolute precision); None for exact zero / exact values
py::tuple padic_tuple(const PadicNum& x) {
  py::object val = x.is_zero() ? py::object(py::none()) : py::object(py::int_(x.valuation()));
  py::object prec = x.is_exact() ? py::object(py::none()) : py::object(py::int_(x.abs_precision()));
  return py::make_tuple(to_py(x.lift()), val, prec);
}

std::vector<std::string> strings(const std::vector<ZetaPoly>& v) {
  std::vector<std::string> out;
  for (const auto& z : v) out.push_back(z.to_string());
  return out;
}

MumOperator family_operator(const std::string& family, int n) {
  if (family == "simplicial") return simplicial_operator(n);
  if (family == "hyperoctahedral") return hyperoctahedral_operator(n);
  throw std::invalid_argument("unknown family '" + family + "'");
}

RationalSeries series_from_list(const py::sequence& s) {
  std::vector<Rational> c;
  for (auto h : s) c.push_back(from_py(h));
  return rational_series(c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "p-adic Frobenius structures: zeta and Gamma values, MUM operators, integrality checks";

  // translators are tried newest first, so the base class goes first
  static py::exception<Error> base = py::register_exception<Error>(m, "Error");
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base.ptr());
  py::register_exception<PrecisionBudgetExceeded>(m, "PrecisionBudgetExceeded", base.ptr());
  py::register_exception<NoOperatorFound>(m, "NoOperatorFound", base.ptr());
  py::register_exception<AmbiguousNullspace>(m, "AmbiguousNullspace", base.ptr());
  py::register_exception<InsufficientOrder>(m, "InsufficientOrder", base.ptr());
  py::register_exception<LevelTooLarge>(m, "LevelTooLarge", base.ptr());
  py::register_exception<NonUnitWronskian>(m, "NonUnitWronskian", base.ptr());
  py::register_exception<BoxTooLarge>(m, "BoxTooLarge", base.ptr());
  py::register_exception<Inconsistent>(m, "Inconsistent", base.ptr());

  m.def("zetap", [](long mm, long p, int N) { return padic_tuple(zetap(mm, p, N)); }, py::arg("m"), py::arg("p"),
        py::arg("N") = 12, "zeta_p(m) as (lift, valuation, precision).");
  m.def("zetap_bernoulli", [](long mm, long p, long r) { return padic_tuple(zetap_bernoulli(mm, p, r)); },
        py::arg("m"), py::arg("p"), py::arg("r") = 2);
  m.def("zetap_from_gamma", [](long mm, long p, int N) { return padic_tuple(zetap_from_gamma(mm, p, N)); },
        py::arg("m"), py::arg("p"), py::arg("N") = 3);
  m.def("gammap_int", [](long z, long p, int N) { return padic_tuple(gammap_int(z, p, N)); }, py::arg("z"),
        py::arg("p"), py::arg("N") = 12);
  m.def("gamma_ratio_congruence_check", py::overload_cast<const std::vector<long>&, int, long, int>(&gamma_ratio_congruence_check),
        py::arg("V"), py::arg("s"), py::arg("p"), py::arg("n"));

  m.def("alpha_simplicial", [](int n) { return strings(alpha_simplicial(n)); }, py::arg("n"));
  m.def("alpha_hyperoctahedral", [](int J) { return strings(alpha_hyperoctahedral(J)); }, py::arg("J"));
  m.def(
      "alpha_values",
      [](const std::string& family, int n, long p, int N) {
        py::list out;
        for (const auto& a : closed_form_alpha(family, n, p, N)) out.append(padic_tuple(a));
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("p") = 7, py::arg("N") = 12);

  m.def(
      "period_series",
      [](const std::string& family, int n, std::size_t M) {
        RationalSeries f = family == "simplicial" ? period_series_simplicial(n, M) : period_series_hyperoctahedral(n, M);
        py::list out;
        for (std::size_t i = 0; i < f.order(); ++i) out.append(to_py(f[i]));
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("M"));
  m.def("operator_json", [](const std::string& family, int n) { return operator_to_json(family_operator(family, n)); },
        py::arg("family"), py::arg("n"));
  m.def("printed_operator_json", [](int n) { return operator_to_json(printed_hyperoctahedral_operator(n)); },
        py::arg("n"));
  m.def(
      "guess_operator_json",
      [](const py::sequence& coeffs, int n, std::optional<int> degree) {
        RationalSeries f = series_from_list(coeffs);
        return operator_to_json(degree ? guess_operator(f, n, *degree) : guess_operator_auto(f, n, 2 * n + 2));
      },
      py::arg("coeffs"), py::arg("n"), py::arg("degree") = py::none());
  m.def(
      "annihilates",
      [](const std::string& operator_json, const py::sequence& coeffs) {
        return apply_operator(operator_from_json(operator_json), series_from_list(coeffs)).is_zero();
      },
      py::arg("operator_json"), py::arg("coeffs"));

  m.def(
      "integrality_report_json",
      [](const std::string& family, int n, long p, std::size_t M, int N, std::optional<std::string> perturb) {
        py::gil_scoped_release release;
        auto alpha = closed_form_alpha(family, n, p, N);
        if (perturb) alpha = apply_perturbation(alpha, *perturb);
        FrobeniusDecomposition dec = solve_A_series(family_operator(family, n), p, M);
        return check_integrality(dec, alpha, p, M).to_json();
      },
      py::arg("family"), py::arg("n"), py::arg("p") = 7, py::arg("M") = 70, py::arg("N") = 12,
      py::arg("perturb") = py::none());
  m.def(
      "recover_alpha",
      [](const std::string& family, int n, long p, std::size_t M) {
        AffineCoset c;
        {
          py::gil_scoped_release release;
          c = recover_alpha(solve_A_series(family_operator(family, n), p, M), p, M);
        }
        py::list out;
        for (std::size_t i = 0; i < c.representative.size(); ++i) {
          BigInt mod = prime_power(p, c.exponent[i]);
          BigInt r = c.representative[i] % mod;
          if (r < 0) r += mod;
          out.append(py::make_tuple(to_py(r), c.exponent[i]));
        }
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("p") = 7, py::arg("M") = 70,
      "[(residue, exponent)] for alpha_1..alpha_{n-1}.");
  m.def(
      "nonuniqueness_witness",
      [](long p, const py::object& lam, std::size_t M) {
        return nonuniqueness_witness(simplicial_operator(2), p, from_py(lam), M);
      },
      py::arg("p"), py::arg("lam"), py::arg("M") = 40, "Order-2 check on the simplicial n=2 operator.");

  m.def("mu_at_zero", [](const std::vector<long>& u, int j, int n) { return to_py(mu_at_zero(u, j, n)); },
        py::arg("u"), py::arg("j"), py::arg("n"));
  m.def(
      "alternating_identity_check",
      [](const py::sequence& coeffs, int n) { return alternating_identity_check(series_from_list(coeffs), n); },
      py::arg("coeffs"), py::arg("n"));
  m.def(
      "simplicial_coeff_series",
      [](const std::vector<long>& U, const std::vector<long>& V, long N, std::size_t M) {
        RationalSeries s = simplicial_coeff_series(U, V, N, M);
        py::list out;
        for (std::size_t i = 0; i < s.order(); ++i) out.append(to_py(s[i]));
        return out;
      },
      py::arg("U"), py::arg("V"), py::arg("N"), py::arg("M"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        std::vector<std::string> full{"padicfrob"};
        full.insert(full.end(), args.begin(), args.end());
        int code = run_cli(full, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a CLI subcommand; returns (exit code, stdout, stderr).");
}
