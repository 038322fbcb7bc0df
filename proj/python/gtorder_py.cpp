#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gto/conjugation.hpp"
#include "gto/errors.hpp"
#include "gto/exponent.hpp"
#include "gto/gorenstein.hpp"
#include "gto/io.hpp"
#include "gto/tilting.hpp"

namespace py = pybind11;
using namespace gto;

namespace {

using Rows = std::vector<IntVector>;

ExponentMatrix order_of(const Rows& rows) { return ExponentMatrix::make(IntMatrix::from_rows(rows)); }

py::tuple rational(const Rational& q) { return py::make_tuple(q.num(), q.den()); }

py::dict gorenstein_dict(const GorensteinData& g) {
  py::dict d;
  d["nu"] = std::vector<std::size_t>(g.nu.images().begin(), g.nu.images().end());
  d["ell"] = g.ell;
  d["p"] = g.p;
  d["p_av"] = rational(g.p_av);
  return d;
}

py::tuple quiver_tuple(const Quiver& q) {
  const Quiver c = q.canonical();
  return py::make_tuple(c.vertices, c.arrows);
}

}  // namespace

PYBIND11_MODULE(gtorder, m) {
  m.doc() = "Graded Gorenstein tiled orders: parameters, normalization and tilting posets.";

  static py::exception<Error> error(m, "GtoError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.what(),
                                            IntVector(e.witness().begin(), e.witness().end()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("validate_order", [](const Rows& rows) {
    const OrderReport r = validate_order(IntMatrix::from_rows(rows));
    py::dict d;
    d["triangle_ok"] = r.triangle_ok;
    d["basic"] = r.basic;
    d["n_graded"] = r.n_graded;
    d["first_violation"] = r.first_violation;
    d["non_basic_pair"] = r.non_basic_pair;
    return d;
  }, py::arg("m"));

  m.def("cyclic_order", [](const IntVector& w) {
    const CyclicOrder c = cyclic_order(w);
    return py::make_tuple(c.m.matrix().rows(), gorenstein_dict(c.g));
  }, py::arg("weights"), "Exponent matrix and Gorenstein data of the cyclic order.");

  m.def("detect_gorenstein", [](const Rows& rows) { return gorenstein_dict(detect_gorenstein(order_of(rows))); },
        py::arg("m"));

  m.def("morita_shift", [](const Rows& rows, const IntVector& s) {
    return morita_shift(order_of(rows), s).matrix().rows();
  }, py::arg("m"), py::arg("s"));

  m.def("is_sigma_nonneg", [](const Rows& rows) { return is_sigma_nonneg(IntMatrix::from_rows(rows)); },
        py::arg("m"));
  m.def("nonneg_conjugate", [](const Rows& rows) { return nonneg_conjugate(IntMatrix::from_rows(rows)); },
        py::arg("m"));
  m.def("min_cycle", [](const Rows& rows) {
    const MinCycle mc = min_cycle(IntMatrix::from_rows(rows));
    return py::make_tuple(mc.cycle, mc.value);
  }, py::arg("m"));
  m.def("floor_profile", &floor_profile, py::arg("r"), py::arg("g"), py::arg("n"));

  m.def("normalize_mdata", [](const Rows& rows, const IntVector& a, const std::vector<std::size_t>& nu) {
    return normalize_mdata(validate_mdata(IntMatrix::from_rows(rows), a, Permutation(nu)));
  }, py::arg("m"), py::arg("a"), py::arg("nu"));

  m.def("normalize_order", [](const Rows& rows) {
    const NormalizedOrder r = normalize_order(order_of(rows));
    py::dict d;
    d["m"] = r.order.matrix().rows();
    d["shift"] = r.order_shift;
    d["gorenstein"] = gorenstein_dict(r.g);
    return d;
  }, py::arg("m"));

  m.def("tilting_summands", [](const Rows& rows) {
    const ExponentMatrix order = order_of(rows);
    py::list out;
    for (const Summand& s : tilting_summands(order, detect_gorenstein(order))) {
      py::list labels;
      for (const auto& l : s.labels) labels.append(py::make_tuple(l.i, l.j));
      out.append(py::make_tuple(s.v, labels));
    }
    return out;
  }, py::arg("m"));

  m.def("grothendieck_rank", [](const Rows& rows) {
    return grothendieck_rank(detect_gorenstein(order_of(rows)));
  }, py::arg("m"));

  m.def("hasse_quiver", [](const Rows& rows) {
    const ExponentMatrix order = order_of(rows);
    return quiver_tuple(hasse_quiver(build_VA(order, detect_gorenstein(order))));
  }, py::arg("m"), "Sorted vertices and (source, target) arrows, larger to smaller.");

  m.def("cyclic_hasse_oracle", [](const IntVector& w) {
    const CyclicHasse h = cyclic_hasse_oracle(w);
    return py::make_tuple(quiver_tuple(h.quiver), h.line_lengths);
  }, py::arg("weights"));

  m.def("to_dot", [](const Rows& rows) {
    const ExponentMatrix order = order_of(rows);
    return io::to_dot(hasse_quiver(build_VA(order, detect_gorenstein(order))));
  }, py::arg("m"));
}
