#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qps/checks.hpp"
#include "qps/expr.hpp"
#include "qps/hopf.hpp"
#include "qps/symplectic.hpp"

namespace py = pybind11;
using namespace qps;

namespace {

const Presentation& named(const std::string& name) {
  const Presentation* p = SpaceCatalog::instance().by_name(name);
  if (!p) throw std::invalid_argument("unknown presentation '" + name + "'");
  return *p;
}

Element parse_in(const std::string& text, const Presentation& p) {
  return eval(parse(text), p);
}

std::string field_text(const VectorField& v) {
  const Presentation& Q = SpaceCatalog::instance().Q();
  const char* names[4] = {"Dx", "Dy", "Dpx", "Dpy"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (v.f[i].is_zero()) continue;
    std::string coeff = Q.print(v.f[i]);
    std::string part;
    if (coeff == "1")
      part = names[i];
    else if (coeff == "-1")
      part = std::string("-") + names[i];
    else if (v.f[i].size() > 1 || coeff.find(' ') != std::string::npos)
      part = "(" + coeff + ")*" + names[i];
    else
      part = coeff + "*" + names[i];
    if (out.empty())
      out = part;
    else if (part[0] == '-')
      out += " - " + part.substr(1);
    else
      out += " + " + part;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

PYBIND11_MODULE(pyqps, m) {
  m.doc() = "Exact symbolic computation on the quantum phase space at q^3 = 1";

  m.def(
      "normalize",
      [](const std::string& expr, const std::string& alg) {
        if (!alg.empty()) {
          const Presentation& p = named(alg);
          return p.print(parse_in(expr, p));
        }
        Expr e = parse(expr);
        const Presentation& p = infer_presentation(e);
        return p.print(eval(e, p));
      },
      py::arg("expr"), py::arg("alg") = "",
      "Canonical form of an expression in M, Q, OmegaM, OmegaQ, F, or MF");

  m.def(
      "d",
      [](const std::string& expr) {
        const Presentation& O = SpaceCatalog::instance().OmegaQ();
        return O.print(Calculus::instance().d(parse_in(expr, O)));
      },
      py::arg("expr"), "Exterior differential in OmegaQ");

  m.def(
      "partial",
      [](const std::string& var, const std::string& expr) {
        const Presentation& Q = SpaceCatalog::instance().Q();
        int i = Q.index_of(var);
        if (i < 0) throw std::invalid_argument("unknown variable '" + var + "'");
        return Q.print(Calculus::instance().partial(i, parse_in(expr, Q)));
      },
      py::arg("var"), py::arg("expr"), "Twisted partial derivative");

  m.def(
      "bracket",
      [](const std::string& f, const std::string& g) {
        const Presentation& Q = SpaceCatalog::instance().Q();
        return Q.print(Symplectic::instance().poisson(parse_in(f, Q), parse_in(g, Q)));
      },
      py::arg("f"), py::arg("g"), "Poisson bracket {f, g}");

  m.def(
      "evolve",
      [](const std::string& f, const std::string& h) {
        const Presentation& Q = SpaceCatalog::instance().Q();
        return Q.print(Symplectic::instance().time_derivative(parse_in(f, Q), parse_in(h, Q)));
      },
      py::arg("f"), py::arg("h"), "Time derivative of f under the Hamiltonian h");

  m.def(
      "xfield",
      [](const std::string& f) {
        const Presentation& Q = SpaceCatalog::instance().Q();
        return field_text(Symplectic::instance().hamiltonian_vf(parse_in(f, Q)));
      },
      py::arg("f"), "Hamiltonian vector field of f");

  m.def(
      "pair",
      [](const std::string& form, const std::string& field) {
        const SpaceCatalog& c = SpaceCatalog::instance();
        OneForm w = Calculus::instance().left_expand(parse_in(form, c.OmegaQ()));
        return c.Q().print(Calculus::instance().pair(w, eval_field(parse(field))));
      },
      py::arg("form"), py::arg("field"), "Pairing of a 1-form with a vector field");

  m.def(
      "act",
      [](const std::string& h, const std::string& target_expr) {
        const SpaceCatalog& c = SpaceCatalog::instance();
        Expr e = parse(target_expr);
        const Presentation& p = infer_presentation(e);
        return p.print(HopfStructure::instance().act(parse_in(h, c.F()), eval(e, p), p));
      },
      py::arg("h"), py::arg("m"), "Quantum-group action of h on m");

  m.def(
      "coact",
      [](const std::string& alg, const std::string& expr) {
        const Presentation& p = named(alg);
        Element e = parse_in(expr, p);
        TensorElement t = (&p == &SpaceCatalog::instance().MF())
                              ? HopfStructure::instance().smash_coaction(e)
                              : HopfStructure::instance().coact(e, p);
        return print_tensor(t);
      },
      py::arg("alg"), py::arg("expr"), "Coaction (right coaction when alg is MF)");

  m.def(
      "rform",
      [](const std::string& f, const std::string& h) {
        const Presentation& F = SpaceCatalog::instance().F();
        return HopfStructure::instance().rform(parse_in(f, F), parse_in(h, F)).str();
      },
      py::arg("f"), py::arg("h"), "Universal r-form on F");

  m.def(
      "dims",
      [](const std::string& alg) {
        const Presentation& p = named(alg);
        py::dict out;
        out["dimension"] = p.basis().size();
        py::dict grades;
        for (int g = 0; g <= 4; ++g) {
          size_t n = p.basis(g).size();
          if (n) grades[py::int_(g)] = n;
        }
        out["by_grade"] = grades;
        return out;
      },
      py::arg("alg"), "Dimension and grade dimensions of an algebra");

  m.def(
      "check",
      [](const std::string& suite) {
        std::vector<CheckReport> reports =
            suite == "all" ? run_all_checks() : run_check_suite(suite);
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["suite"] = r.name;
          d["checked"] = r.checked;
          d["failed"] = r.failed;
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", "Run a verification suite (or all of them)");

  m.def("suites", [] { return check_suite_names(); },
        "Names of the available check suites");
}
