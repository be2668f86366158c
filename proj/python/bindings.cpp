#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pa/io.hpp"

namespace py = pybind11;
using namespace pa;

namespace {

// Rationals travel as Python objects whose str() is "p" or "p/q" (int, str, Fraction).
Rat rat_of(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object fraction(const Rat& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

py::list vec_out(const Vec& v) {
  py::list l;
  for (const auto& x : v) l.append(fraction(x));
  return l;
}

py::list int_out(const IntVec& v) {
  py::list l;
  for (const auto& x : v) l.append(py::int_(py::str(x.get_str())));
  return l;
}

std::vector<Vec> points_of(const py::iterable& pts) {
  std::vector<Vec> out;
  for (auto p : pts) {
    Vec x;
    for (auto c : py::cast<py::iterable>(p)) x.push_back(rat_of(c));
    out.push_back(std::move(x));
  }
  return out;
}

Beta beta_of(const py::handle& chain, int n) {
  std::vector<Block> blocks;
  for (auto b : py::cast<py::iterable>(chain)) blocks.push_back(py::cast<Block>(b));
  return beta_from_chain(std::move(blocks), n);
}

py::list chain_out(const Beta& b) {
  py::list l;
  for (const auto& blk : b.chain()) l.append(py::cast(blk));
  return l;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact permutoassociahedron toolkit";

  py::class_<Polytope>(m, "Polytope")
      .def_property_readonly("ambient_dim", &Polytope::ambient_dim)
      .def_property_readonly("dim", &Polytope::dim)
      .def("vertices", [](const Polytope& p) {
        py::list l;
        for (const auto& v : p.vertices()) l.append(vec_out(v));
        return l;
      })
      .def("facets", [](const Polytope& p) {
        py::list l;
        for (const auto& f : p.facets()) l.append(py::make_tuple(int_out(f.normal), fraction(f.offset)));
        return l;
      })
      .def("equalities", [](const Polytope& p) {
        py::list l;
        for (const auto& e : p.equalities()) l.append(py::make_tuple(int_out(e.normal), fraction(e.offset)));
        return l;
      })
      .def("to_json", [](const Polytope& p) { return to_json(p).dump(); })
      .def("__eq__", [](const Polytope& a, const Polytope& b) { return a == b; })
      .def("__repr__", [](const Polytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + " vertices=" + std::to_string(p.vertices().size()) +
               " facets=" + std::to_string(p.facets().size()) + ">";
      });

  m.def("hull", [](const py::iterable& pts) { return hull(points_of(pts)); }, py::arg("points"));
  m.def("from_json", [](const std::string& s) { return polytope_from_json(Json::parse(s)); });
  m.def("minkowski_sum", &minkowski_sum);
  m.def("normally_equivalent", &normally_equivalent);
  m.def("is_simple", &is_simple);
  m.def("f_vector", [](const Polytope& p) { return f_vector(p).counts; });
  m.def("support_value", [](const Polytope& p, const py::iterable& d) {
    Vec v;
    for (auto c : d) v.push_back(rat_of(c));
    return fraction(support_value(p, v));
  });
  m.def("to_off", &to_off);
  m.def("to_ineq", &to_ineq);

  m.def("permutohedron", [](int n) { return permutohedron(n).poly; });
  m.def("enumerate_B1", [](int n) {
    py::list l;
    for (const auto& b : enumerate_B1(n)) l.append(chain_out(b));
    return l;
  });
  m.def("reference_kappa", [](int n, int k, int l) { return fraction(reference_kappa(n, k, l)); });
  m.def("reference_pa", [](int n) { return reference_pa(n).poly; });
  m.def("assemble_pa", [](int n, const py::object& c) { return assemble_pa(n, rat_of(c), false).result.poly; },
        py::arg("n"), py::arg("c") = 1);
  m.def("nestohedron", [](const py::handle& chain, int n) { return nestohedron(b_beta(beta_of(chain, n), n)); });
  m.def("f_beta_and_m", [](const py::handle& chain, int n) {
    auto fb = f_beta_and_m(beta_of(chain, n), n);
    py::list face;
    for (const auto& v : fb.face) face.append(vec_out(v));
    return py::make_tuple(fraction(fb.m), face);
  });
  m.def("n_beta", [](const py::handle& chain, int n) { return n_beta(beta_of(chain, n), n); });
  m.def("n_beta_c", [](const py::handle& chain, int n, const py::object& c) {
    return n_beta_c(beta_of(chain, n), n, rat_of(c));
  });
  m.def(
      "verify",
      [](int n, const py::object& c, bool against_reference) {
        VerifyOptions o;
        o.against_reference = against_reference;
        return to_json(verify_minkowski_realisation(n, rat_of(c), o)).dump();
      },
      py::arg("n"), py::arg("c") = 1, py::arg("against_reference") = false);
}
