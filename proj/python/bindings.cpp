#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monotri/brute.hpp"
#include "monotri/cli.hpp"
#include "monotri/closed_forms.hpp"
#include "monotri/errors.hpp"
#include "monotri/genfun.hpp"
#include "monotri/verify.hpp"

namespace py = pybind11;
using namespace monotri;

namespace {

py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(BigInt(r.get_num())), to_py(BigInt(r.get_den())));
}

// Accepts int, Fraction or anything with integral numerator/denominator.
Rational from_py(const py::handle& h) {
  const auto num = py::str(h.attr("numerator")).cast<std::string>();
  const auto den = py::str(h.attr("denominator")).cast<std::string>();
  return make_rational(BigInt(num), BigInt(den));
}

py::int_ count_hmt(int n, long x, const std::vector<long>& bottom, const std::string& method) {
  check_hmt_input(n, x, bottom);
  if (method == "brute") return to_py(count_hmt_brute(n, x, bottom));
  if (method == "recursion") return to_py(to_integer(gamma_recursive(n, x, bottom)));
  if (method == "theorem") return to_py(gamma_value(n, x, bottom));
  if (method == "beta") return to_py(to_integer(gamma_via_beta(n, x, bottom)));
  if (method == "gamma-bar") return to_py(to_integer(gamma_via_gamma_bar(n, x, bottom)));
  throw InvalidInput("unknown method '" + method + "'");
}

py::int_ count_vsasm(int n, const std::string& method) {
  if (method == "brute") return to_py(count_vsasm_brute(n, 2 * n + 1));
  if (method == "product") return to_py(vsasm_count(n));
  if (method == "hmt") {
    std::vector<long> b;
    for (long i = 1; i <= n; ++i) b.push_back(i);
    return to_py(count_hmt_brute(2 * n, n, b));
  }
  throw InvalidInput("unknown method '" + method + "'");
}

py::list verify(const std::string& suite, int max_rows, int max_x, std::uint64_t seed, int instances) {
  VerifyOptions o;
  o.suite = suite;
  o.max_rows = max_rows;
  o.max_x = max_x;
  o.seed = seed;
  o.instances = instances;
  py::list out;
  for (const auto& p : run_verify(o).properties) {
    py::dict d;
    d["name"] = p.name;
    d["instances"] = p.instances;
    d["failures"] = p.failures;
    d["passed"] = p.passed();
    d["counterexample"] = p.counterexample ? py::object(py::str(*p.counterexample)) : py::object(py::none());
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts and polynomials for halved monotone triangles and ASMs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ArithmeticError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("count_hmt", &count_hmt, py::arg("n"), py::arg("x"), py::arg("bottom"), py::arg("method") = "brute");
  m.def("count_weak_hmt", [](int n, long x, const std::vector<long>& b) { return to_py(count_weak_hmt_brute(n, x, b)); },
        py::arg("n"), py::arg("x"), py::arg("bottom"));
  m.def("count_mt", [](const std::vector<long>& b) { return to_py(count_mt_brute(b)); }, py::arg("bottom"));
  m.def("enumerate_asm", [](int n) { return to_py(enumerate_asm(n).count); }, py::arg("n"));
  m.def("count_vsasm", &count_vsasm, py::arg("n"), py::arg("method") = "product");

  m.def("gamma_recursive",
        [](int n, long x, const std::vector<long>& k, bool extended) { return to_py(gamma_recursive(n, x, k, extended)); },
        py::arg("n"), py::arg("x"), py::arg("k"), py::arg("extended") = false);
  m.def("extended_sum",
        [](const std::function<py::object(std::vector<long>)>& f, const std::vector<long>& k) {
          IntFunction g = [&](std::span<const long> l) { return from_py(f(std::vector<long>(l.begin(), l.end()))); };
          return to_py(extended_sum(g, k));
        },
        py::arg("f"), py::arg("k"));

  m.def("gamma_poly", [](int n) { return to_string(gamma_theorem1(n)); }, py::arg("n"));
  m.def("gamma_star", [](int n) { return to_string(gamma_star(n)); }, py::arg("n"));
  m.def("gamma_bar", [](int n) { return to_string(gamma_bar(n)); }, py::arg("n"));
  m.def("beta_poly", [](int n) { return to_string(beta_poly(n)); }, py::arg("n"));
  m.def("alpha_poly", [](int n) { return to_string(alpha_poly(n)); }, py::arg("n"));
  m.def("gamma_value", [](int n, long x, const std::vector<long>& k) { return to_py(gamma_value(n, x, k)); },
        py::arg("n"), py::arg("x"), py::arg("k"));
  m.def("beta", [](int n, long x, const std::vector<long>& k) { return to_py(beta(n, x, k)); }, py::arg("n"),
        py::arg("x"), py::arg("k"));
  m.def("alpha_value", [](const std::vector<long>& k) { return to_py(alpha_value(static_cast<int>(k.size()), k)); },
        py::arg("k"));
  m.def("asm_count", [](int n) { return to_py(asm_count(n)); }, py::arg("n"));
  m.def("vsasm_count", [](int n) { return to_py(vsasm_count(n)); }, py::arg("n"));
  m.def("leading_constant", [](int n) { return to_py(leading_constant(n)); }, py::arg("n"));

  m.def("mt_gf_coeff", [](const std::vector<long>& k) { return to_py(mt_gf_coeff(static_cast<int>(k.size()), k)); },
        py::arg("k"));
  m.def("asm_constant_term", [](int n) { return to_py(asm_constant_term(n)); }, py::arg("n"));
  m.def("hmt_gf_coeff",
        [](int n, long x, const std::vector<long>& k) {
          auto r = hmt_gf_coeff(n, x, k);
          return py::make_tuple(to_py(r.value), r.in_region, r.warnings);
        },
        py::arg("n"), py::arg("x"), py::arg("k"));

  m.def("verify", &verify, py::arg("suite") = "all", py::arg("max_rows") = 6, py::arg("max_x") = 6,
        py::arg("seed") = 0, py::arg("instances") = 100);
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
