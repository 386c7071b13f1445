#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ndiag/cli.hpp"
#include "ndiag/crmap.hpp"
#include "ndiag/dump.hpp"
#include "ndiag/errors.hpp"
#include "ndiag/faces2d.hpp"
#include "ndiag/oracle.hpp"
#include "ndiag/symmetric.hpp"
#include "ndiag/whitney.hpp"

namespace py = pybind11;
using namespace ndiag;

namespace {

std::vector<int> to_list(const ExponentVector& a) { return a.entries(); }

ExponentVector from_list(const std::vector<int>& v) { return ExponentVector(v); }

// Terms as {exponent tuple: "p/q"}; the Python side turns values into Fractions.
py::dict terms_dict(const Polynomial& p) {
  py::dict out;
  for (const auto& [alpha, c] : p.terms()) out[py::tuple(py::cast(to_list(alpha)))] = c.to_string();
  return out;
}

Polynomial from_terms(int dim, const std::map<std::vector<int>, std::string>& terms) {
  Polynomial::TermMap t;
  for (const auto& [alpha, c] : terms) {
    Rational r = Rational::parse(c);
    if (!r.is_zero()) t[from_list(alpha)] = r;
  }
  return Polynomial(dim, std::move(t));
}

std::string census_json(const BoundReport& r) {
  Json sizes = Json::array();
  for (const auto& [size, c] : r.by_size) {
    Json minimizers = Json::array();
    for (const auto& d : c.minimizer_diagrams) minimizers.push_back(diagram_json(d));
    sizes.push_back(Json{{"size", size},
                         {"valid", c.valid},
                         {"min_nodes", c.min_nodes},
                         {"bound", c.bound ? Json(*c.bound) : Json(nullptr)},
                         {"minimizers", c.minimizers},
                         {"one_point_per_degree", c.one_point_per_degree},
                         {"minimizer_diagrams", minimizers}});
  }
  return Json{{"n", r.n}, {"d", r.d}, {"points", r.points}, {"assignments", r.assignments},
              {"leaves", r.leaves}, {"by_size", sizes}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Newton diagrams of (p-1)/(s-1), degree bounds and exhaustive checks";

  static py::exception<TheoremContradiction> contradiction(m, "TheoremContradiction", PyExc_RuntimeError);
  static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TheoremContradiction& e) {
      PyErr_SetString(contradiction.ptr(), (std::string(e.what()) + "\n" + e.dump()).c_str());
    } catch (const BudgetExceeded& e) {
      PyErr_SetString(budget.ptr(), e.what());
    }
  });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, int dim) { return parse_polynomial(text, dim); }),
           py::arg("text"), py::arg("dim"))
      .def_static("from_terms", &from_terms, py::arg("dim"), py::arg("terms"))
      .def_property_readonly("dimension", &Polynomial::dimension)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("term_count", &Polynomial::term_count)
      .def("terms", &terms_dict)
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "', " + std::to_string(p.dimension()) + ")"; });

  m.def("divide_by_hyperplane", [](const Polynomial& p) {
    auto r = divide_by_hyperplane(p);
    return py::make_tuple(r.quotient, r.remainder);
  }, py::arg("p"), "(q, r) with p - 1 = (s - 1) q + r");
  m.def("hyperplane_quotient", &hyperplane_quotient, py::arg("p"));
  m.def("is_in_H", [](const Polynomial& p) { return is_in_H(p).member; }, py::arg("p"));

  m.def("diagram_json", [](const Polynomial& q) { return diagram_json(NewtonDiagram::from_quotient(q)).dump(); },
        py::arg("q"), "dump of the diagram of q");
  m.def("node_count", [](const Polynomial& q) { return node_count(NewtonDiagram::from_quotient(q)); },
        py::arg("q"));
  m.def("view_json", [](const Polynomial& q, int k, int m_) {
    return diagram_json(view(NewtonDiagram::from_quotient(q), k, m_)).dump();
  }, py::arg("q"), py::arg("k"), py::arg("m"), "V(D,k,m) with 0-based axes");
  m.def("hidden_nodes", [](const Polynomial& q, int k, int m_) {
    return count_hidden_nodes(NewtonDiagram::from_quotient(q), k, m_);
  }, py::arg("q"), py::arg("k"), py::arg("m"));
  m.def("has_overhang", [](const Polynomial& q) { return has_overhang(NewtonDiagram::from_quotient(q)); },
        py::arg("q"));
  m.def("render_ascii", [](const Polynomial& q) { return render_ascii(NewtonDiagram::from_quotient(q)); },
        py::arg("q"));

  m.def("whitney", [](int n, int d, const std::string& chooser) {
    return generate(n, d, WhitneyChooser::parse(chooser)).result;
  }, py::arg("n"), py::arg("d"), py::arg("chooser") = "lex");
  m.def("whitney_from_moves", [](int n, const std::vector<std::vector<int>>& moves) {
    std::vector<ExponentVector> mv;
    for (const auto& v : moves) mv.push_back(from_list(v));
    return generate_from_moves(n, mv).result;
  }, py::arg("n"), py::arg("moves"));
  m.def("is_sharp_whitney", &is_sharp_whitney, py::arg("p"));
  m.def("degree_bound", [](const Polynomial& p) {
    auto r = check_degree_bound(p);
    py::dict out;
    out["n"] = r.n;
    out["d"] = r.d;
    out["N"] = r.terms;
    out["bound"] = r.bound.to_string();
    out["tight"] = r.tight;
    return out;
  }, py::arg("p"));

  m.def("corollary_report", [](const std::string& text, int dim) {
    auto r = corollary_report(parse_monomial_map(text, dim));
    py::dict out;
    out["n"] = r.n;
    out["N"] = r.components;
    out["d"] = r.d;
    out["bound"] = r.bound.to_string();
    out["holds"] = r.holds;
    out["tight"] = r.tight;
    return out;
  }, py::arg("text"), py::arg("dim") = 0);

  m.def("verify_bound", [](int n, int d, unsigned workers) {
    BoundReport r;
    {
      py::gil_scoped_release release;
      r = verify_bound(n, d, {true, workers});
    }
    return census_json(r);
  }, py::arg("n"), py::arg("d"), py::arg("workers") = 1);
  m.def("lemma_check", [](int h, int w, std::uint64_t random, std::uint64_t seed) {
    auto r = lemma_check(h, w, random, seed);
    py::dict out;
    out["enumerated"] = r.enumerated;
    out["random"] = r.random;
    out["fill_steps"] = r.fill_steps;
    out["min_slack"] = r.min_slack;
    out["sign_change_shortfalls"] = r.sign_change_shortfalls;
    return out;
  }, py::arg("height") = 3, py::arg("width") = 3, py::arg("random") = 0, py::arg("seed") = 1);
  m.def("symmetric_dichotomy", [](int max_degree) {
    auto r = symmetric_dichotomy(max_degree);
    py::dict out;
    out["diagrams"] = r.diagrams;
    out["single_point"] = r.single_point;
    out["hidden_two"] = r.hidden_two;
    out["dehomogenized_mismatch"] = r.dehomogenized_mismatch;
    return out;
  }, py::arg("max_degree"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "(exit code, stdout, stderr) of the command line");
}
