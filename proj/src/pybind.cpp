// Python bindings: a thin wrapper around the C++ core returning native
// Python containers. The Diagram is exposed as an opaque handle; everything
// combinatorial or numeric comes back as dicts, lists and tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbidim/boundary.hpp"
#include "orbidim/io.hpp"
#include "orbidim/labels.hpp"
#include "orbidim/modules.hpp"
#include "orbidim/orbifold.hpp"
#include "orbidim/skew.hpp"
#include "orbidim/verify.hpp"

namespace py = pybind11;
using namespace orbidim;

namespace {

Diagram load_checked(const std::string& text) {
  Diagram d = parse_osd(text);
  check_structure(d);
  return d;
}

py::dict report_dict(const ValidationReport& r) {
  py::dict out;
  out["euler"] = r.euler;
  out["ok"] = r.ok;
  out["alternation"] = r.alternation;
  py::list c4, c5;
  for (const auto& a : r.cond4) c4.append(py::make_tuple(a[0], a[1], a[2], a[3]));
  for (const auto& a : r.cond5) c5.append(py::make_tuple(a[0], a[1], a[2], a[3]));
  out["cond4"] = c4;
  out["cond5"] = c5;
  return out;
}

std::vector<Relation<QArrow>> rel_list(const QP& q) {
  std::vector<Relation<QArrow>> rels;
  for (const auto& [a, ts] : relations(q)) rels.push_back(ts);
  return rels;
}

}  // namespace

PYBIND11_MODULE(_orbidim, m) {
  m.doc() = "orbifold strand diagrams: invariants, labels, quivers with "
            "potential, boundary algebras and the realization certificate";

  py::class_<Diagram>(m, "Diagram")
      .def_property_readonly("kind", [](const Diagram& d) { return d.kind; })
      .def_property_readonly("n_points",
                             [](const Diagram& d) { return d.n_points; })
      .def_property_readonly("order", [](const Diagram& d) { return d.order; })
      .def_property_readonly("n_strands",
                             [](const Diagram& d) { return d.tau.size(); })
      .def_property_readonly("n_crossings",
                             [](const Diagram& d) { return d.crossings.size(); })
      .def("__repr__", [](const Diagram& d) {
        return "<Diagram " + d.kind + " n=" + std::to_string(d.n_points) +
               " order=" + std::to_string(d.order) + " crossings=" +
               std::to_string(d.crossings.size()) + ">";
      });

  py::register_exception<ParseError>(m, "OsdParseError");

  m.def("parse", &load_checked, py::arg("text"),
        "Parse .osd text and check structural invariants.");
  m.def("serialize", &serialize_osd, py::arg("diagram"),
        "Canonical .osd text of a diagram.");

  m.def("validate", [](const Diagram& d) {
    return report_dict(d.is_orbifold() ? validate_weak_orbifold(d)
                                       : validate_postnikov(d));
  });
  m.def("euler_check", [](const Diagram& d) {
    EulerReport r = euler_check(d);
    return py::make_tuple(r.ok, py::make_tuple(r.V, r.E, r.F));
  });

  m.def("S_value", &S_value, py::arg("diagram"), py::arg("strand"));
  m.def("L_value", &L_value, py::arg("diagram"), py::arg("s1"), py::arg("s2"));
  m.def("strand_winding", &strand_winding, py::arg("diagram"),
        py::arg("strand"));
  m.def("threshold", &orbifold_threshold, py::arg("diagram"));
  m.def("is_orbifold_diagram", [](const Diagram& d) {
    auto [ok, thr] = is_orbifold_diagram(d);
    return py::make_tuple(ok, thr);
  });
  m.def("grassmannian_type", [](const Diagram& d) -> py::object {
    auto gt = grassmannian_type(d);
    if (!gt) return py::none();
    return py::make_tuple((*gt)[0], (*gt)[1], (*gt)[2]);
  });

  m.def("sym_d", &sym_d, py::arg("diagram"), py::arg("d") = 0,
        "d-fold rotational symmetrization (default: the diagram's order).");
  m.def("quotient", &quotient, py::arg("diagram"), py::arg("d"));
  m.def("isomorphic", &isomorphic, py::arg("d1"), py::arg("d2"));
  m.def("reduce", [](const Diagram& d) {
    auto [red, moves] = reduce(d);
    py::list mv;
    for (const auto& mo : moves) {
      py::dict e;
      e["type"] = mo.type;
      e["removed"] = mo.removed;
      mv.append(e);
    }
    return py::make_tuple(red, mv);
  });

  m.def("postnikov_labels", [](const Diagram& d) {
    return postnikov_labels(d);
  });
  m.def("direct_labels", [](const Diagram& d) {
    DirectLabels dl = direct_labels(d);
    py::dict out;
    out["regions"] = dl.regions;
    out["missing"] = dl.missing;
    out["added"] = dl.added;
    return out;
  });
  m.def("cross_validate_labels", &cross_validate_labels);
  m.def("cover_label_classes", [](const Diagram& d) {
    return cover_label_classes(d);
  });

  m.def("qp_summary", [](const Diagram& d, int zeta) {
    QP q = build_qp(d, zeta);
    py::dict out;
    out["vertices"] = q.vertices.size();
    out["frozen"] = q.frozen.size();
    out["arrows"] = q.arrows.size();
    out["central_kind"] = q.central_kind;
    std::vector<std::string> coeffs;
    for (const auto& [cf, p] : q.terms) coeffs.push_back(coeff_str(cf));
    std::sort(coeffs.begin(), coeffs.end());
    out["coeff_multiset"] = coeffs;
    out["relation_count"] = relations(q).size();
    return out;
  }, py::arg("diagram"), py::arg("zeta") = 1);

  m.def("jacobian_dims", [](const Diagram& d, int maxdeg, int zeta) {
    QP q = build_qp(d, zeta);
    Field F(d.order);
    return filtered_dims(q.vertices, q.arrows, rel_list(q), maxdeg, F);
  }, py::arg("diagram"), py::arg("maxdeg") = 6, py::arg("zeta") = 1);

  m.def("skew_basic_dims", [](const Diagram& cover, int order, int maxdeg) {
    return skew_basic_dims(cover, order, maxdeg, Field(order));
  }, py::arg("cover"), py::arg("order"), py::arg("maxdeg") = 6);

  m.def("boundary_presentation", [](const Diagram& d, int m, int jmax) {
    if (m == 0) m = d.is_orbifold() ? 9 : 12;
    BoundaryPresentation bp = boundary_presentation(d, m, jmax);
    py::dict out;
    out["nverts"] = bp.nverts;
    out["k"] = bp.k;
    out["nk"] = bp.nk;
    out["structural_ok"] = bp.structural_ok;
    out["certified"] = bp.certified;
    out["dims"] = bp.dims;
    out["gen_lengths"] = bp.gen_lengths;
    out["note"] = bp.note;
    return out;
  }, py::arg("diagram"), py::arg("m") = 0, py::arg("jmax") = 8);

  m.def("verify", [](const Diagram& d, bool negate, int N, int jmax) {
    if (!d.is_orbifold())
      throw py::value_error("verify requires an orbifold diagram");
    VerifyResult r = run_verify(d, d.n_points, d.order, negate, N, jmax);
    py::dict out;
    out["relations_pass"] = r.relations_pass;
    out["gauge_trivial"] = r.gauge_trivial;
    out["generated_total"] = r.generated_total;
    out["dims_end_side"] = r.dims_end_side;
    out["dims_jacobian"] = r.dims_jacobian;
    out["dims_match"] = r.dims_match;
    return out;
  }, py::arg("diagram"), py::arg("negate") = false, py::arg("N") = 12,
     py::arg("jmax") = 6);

  m.def("r2_dims", [](const Diagram& d, int N) {
    if (!d.is_orbifold())
      throw py::value_error("r2_dims requires an orbifold diagram");
    auto [r2, endd] = r2_dims(d, d.n_points, d.order, N);
    return py::make_tuple(r2, endd);
  }, py::arg("diagram"), py::arg("N") = 12);

  m.def("render_svg", &render_svg, py::arg("diagram"));
  m.def("render_tikz", &render_tikz, py::arg("diagram"));
}
