// Python bindings for the core library. Exact rationals cross the boundary
// as fractions.Fraction in both directions, so no precision is lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "propa/covers.hpp"
#include "propa/dimension.hpp"
#include "propa/io.hpp"
#include "propa/l1vector.hpp"
#include "propa/rational.hpp"
#include "propa/spaces.hpp"
#include "propa/types.hpp"
#include "propa/witness.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// propa::Rational <-> fractions.Fraction. Conversion goes through the exact
// "p/q" string form, which both sides parse losslessly.
template <>
struct type_caster<propa::Rational> {
 public:
  PYBIND11_TYPE_CASTER(propa::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (src.is_none()) return false;
    object fraction_type = module_::import("fractions").attr("Fraction");
    if (!isinstance(src, fraction_type) && !PyLong_Check(src.ptr())) return false;
    try {
      value = propa::fraction_from_string(static_cast<std::string>(str(src)));
    } catch (const std::exception&) {
      return false;
    }
    return true;
  }

  static handle cast(const propa::Rational& src, return_value_policy, handle) {
    object fraction_type = module_::import("fractions").attr("Fraction");
    return fraction_type(propa::to_fraction_string(src)).release();
  }
};

}  // namespace detail
}  // namespace pybind11

using namespace propa;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Witness constructions for property A on finite metric spaces: exact "
      "averaged measures, cover statistics, Lebesgue oracles and dimension "
      "estimates.";
  m.attr("__version__") = "0.1.0";
  m.attr("BOUND_TOLERANCE") = kBoundTolerance;
  m.attr("UNBOUNDED_RADIUS") = kUnboundedRadius;

  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);

  // ---- spaces -------------------------------------------------------------

  py::enum_<SpaceKind>(m, "SpaceKind")
      .value("graph", SpaceKind::graph)
      .value("grid", SpaceKind::grid)
      .value("tree", SpaceKind::tree);

  py::class_<FiniteMetricSpace>(m, "FiniteMetricSpace",
                                "Connected graph with the shortest-path metric; immutable, "
                                "distances precomputed.")
      .def_property_readonly("size", [](const FiniteMetricSpace& s) { return s.size(); })
      .def_property_readonly("kind", &FiniteMetricSpace::kind)
      .def("dist", &FiniteMetricSpace::dist, py::arg("x"), py::arg("y"))
      .def_property_readonly("diameter", &FiniteMetricSpace::diameter)
      .def("eccentricity", &FiniteMetricSpace::eccentricity, py::arg("x"))
      .def("ball", &FiniteMetricSpace::ball, py::arg("center"), py::arg("radius"),
           "Closed ball: point ids within the radius, ascending.")
      .def("neighbors", &FiniteMetricSpace::neighbors, py::arg("x"))
      .def("edges", &FiniteMetricSpace::edges, "Canonical sorted edge list, each pair (a, b) with a < b.")
      .def("grid_dims", &FiniteMetricSpace::grid_dims)
      .def("grid_coords", &FiniteMetricSpace::grid_coords, py::arg("x"))
      .def("tree_arity", &FiniteMetricSpace::tree_arity)
      .def("tree_depth", &FiniteMetricSpace::tree_depth)
      .def("__len__", [](const FiniteMetricSpace& s) { return s.size(); })
      .def("__repr__", [](const FiniteMetricSpace& s) {
        const char* kind = s.kind() == SpaceKind::grid   ? "grid"
                           : s.kind() == SpaceKind::tree ? "tree"
                                                         : "graph";
        return "<FiniteMetricSpace kind=" + std::string(kind) +
               " size=" + std::to_string(s.size()) + ">";
      });

  m.def("from_graph", &from_graph, py::arg("vertex_count"), py::arg("edges"),
        py::arg("point_budget") = kDefaultPointBudget,
        "Space from an undirected edge list; must be connected.");
  m.def("grid_space", &grid_space, py::arg("dims"),
        py::arg("point_budget") = kDefaultPointBudget,
        "Axis-aligned unit-step grid carrying the l1 metric.");
  m.def("tree_space", &tree_space, py::arg("arity"), py::arg("depth"),
        py::arg("point_budget") = kDefaultPointBudget,
        "Complete rooted tree with the path metric.");
  m.def(
      "set_diameter",
      [](const FiniteMetricSpace& space, const std::vector<PointId>& pts) {
        return set_diameter(space, pts);
      },
      py::arg("space"), py::arg("points"), "Max pairwise distance within the point set.");
  m.def("tree_node_depth", &tree_node_depth, py::arg("arity"), py::arg("node"));

  // ---- covers ---------------------------------------------------------------

  py::class_<Cover>(m, "Cover", "Cover elements (sorted point lists) plus one basepoint each.")
      .def(py::init<>())
      .def(py::init([](std::vector<std::vector<PointId>> elements,
                       std::vector<PointId> basepoints) {
             Cover c;
             c.elements = std::move(elements);
             c.basepoints = std::move(basepoints);
             return c;
           }),
           py::arg("elements"), py::arg("basepoints"))
      .def_readwrite("elements", &Cover::elements)
      .def_readwrite("basepoints", &Cover::basepoints)
      .def("__repr__", [](const Cover& c) {
        return "<Cover elements=" + std::to_string(c.elements.size()) + ">";
      });

  m.def("validate_cover", &validate_cover, py::arg("space"), py::arg("cover"));
  m.def("multiplicity", &multiplicity, py::arg("space"), py::arg("cover"),
        "Largest number of elements sharing a common point.");
  m.def("mesh", &mesh, py::arg("space"), py::arg("cover"), "Largest element diameter.");
  m.def("containment_row", &containment_row, py::arg("space"), py::arg("cover"), py::arg("x"));
  m.def("containment_radii", &containment_radii, py::arg("space"), py::arg("cover"));

  py::class_<CoverStats>(m, "CoverStats")
      .def_readonly("multiplicity", &CoverStats::multiplicity)
      .def_readonly("mesh", &CoverStats::mesh)
      .def_readonly("ball_lebesgue_per_point", &CoverStats::ball_lebesgue_per_point)
      .def_readonly("ball_lebesgue_global", &CoverStats::ball_lebesgue_global)
      .def_readonly("min_location", &CoverStats::min_location);

  m.def("cover_stats", &cover_stats, py::arg("space"), py::arg("cover"));

  py::class_<LebesgueVerdict>(m, "LebesgueVerdict")
      .def_readonly("holds", &LebesgueVerdict::holds)
      .def_readonly("counterexample", &LebesgueVerdict::counterexample);

  m.def("threshold_cliques", &threshold_cliques, py::arg("space"), py::arg("lambda_"),
        py::arg("oracle_budget") = kDefaultCliqueOracleBudget,
        "Maximal cliques of the graph with edges where dist <= lambda.");
  m.def("exact_lebesgue_at_least", &exact_lebesgue_at_least, py::arg("space"), py::arg("cover"),
        py::arg("lambda_"), py::arg("oracle_budget") = kDefaultCliqueOracleBudget,
        "Exact decision: does every set of diameter <= lambda fit in one element?");

  m.def("interval_cover", &interval_cover, py::arg("space"), py::arg("ell"),
        "Staggered blocks of 4*ell per axis on a grid space.");
  m.def("tree_annuli_cover", &tree_annuli_cover, py::arg("space"), py::arg("ell"),
        "Depth bands of width 2*ell at offsets 0 and ell, split into components.");
  m.def("greedy_net_cover", &greedy_net_cover, py::arg("space"), py::arg("radius"),
        "Balls B(c, 2*radius) around a greedily chosen radius-separated net.");
  m.def("choose_basepoints", &choose_basepoints, py::arg("space"), py::arg("elements"),
        "In-element 1-centers, smallest id on ties.");

  // ---- l1 vectors -----------------------------------------------------------

  py::class_<L1Vector>(m, "L1Vector",
                       "Sparse nonnegative vector with exact rational entries, sorted by index.")
      .def_static(
          "from_entries",
          [](std::vector<L1Vector::Entry> raw) { return L1Vector::from_entries(std::move(raw)); },
          py::arg("entries"))
      .def_property_readonly("entries",
                             [](const L1Vector& v) { return v.entries(); })
      .def("mass", &L1Vector::mass)
      .def("at", &L1Vector::at, py::arg("index"))
      .def("__eq__", [](const L1Vector& a, const L1Vector& b) { return a == b; })
      .def("__repr__", [](const L1Vector& v) {
        return "<L1Vector entries=" + std::to_string(v.entries().size()) + ">";
      });

  m.def("l1_distance", &l1_distance, py::arg("u"), py::arg("v"));
  m.def(
      "xi_uniform",
      [](const std::vector<std::uint32_t>& support) { return xi_uniform(support); },
      py::arg("support"), "Uniform probability measure on the given indices.");

  // ---- witness ---------------------------------------------------------------

  py::class_<WitnessParams>(m, "WitnessParams")
      .def(py::init([](int n, int R) { return WitnessParams{n, R}; }), py::arg("n"),
           py::arg("R"))
      .def_readwrite("n", &WitnessParams::n)
      .def_readwrite("R", &WitnessParams::R);

  m.def("s_set", &s_set, py::arg("space"), py::arg("cover"), py::arg("x"), py::arg("k"),
        "Element ids whose element contains the whole ball B(x, k).");
  m.def("eta", &eta, py::arg("space"), py::arg("cover"), py::arg("n"), py::arg("x"),
        "Average of uniform measures on S_x(k) for k in [n+1, 2n].");
  m.def("zeta", &zeta, py::arg("space"), py::arg("cover"), py::arg("n"), py::arg("x"),
        "eta pushed to basepoints: an exact probability measure on points.");

  py::class_<NestingReport>(m, "NestingReport")
      .def_readonly("deep_inside_intersection", &NestingReport::deep_inside_intersection)
      .def_readonly("intersection_inside_union", &NestingReport::intersection_inside_union)
      .def_readonly("union_inside_wide", &NestingReport::union_inside_wide)
      .def("all_hold", &NestingReport::all_hold);

  m.def("nesting_check", &nesting_check, py::arg("space"), py::arg("cover"), py::arg("x"),
        py::arg("y"), py::arg("k"), py::arg("R"));

  py::class_<PairAudit>(m, "PairAudit")
      .def_readonly("x", &PairAudit::x)
      .def_readonly("y", &PairAudit::y)
      .def_readonly("eta_dist", &PairAudit::eta_dist)
      .def_readonly("zeta_dist", &PairAudit::zeta_dist)
      .def_readonly("rhs_chain", &PairAudit::rhs_chain)
      .def_readonly("rhs_final", &PairAudit::rhs_final)
      .def_readonly("nesting_ok", &PairAudit::nesting_ok);

  m.def("pair_audit", &pair_audit, py::arg("space"), py::arg("cover"), py::arg("params"),
        py::arg("x"), py::arg("y"));

  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("params", &WitnessReport::params)
      .def_readonly("multiplicity", &WitnessReport::multiplicity)
      .def_readonly("mesh", &WitnessReport::mesh)
      .def_readonly("ball_lebesgue_global", &WitnessReport::ball_lebesgue_global)
      .def_readonly("bound_audited", &WitnessReport::bound_audited)
      .def_readonly("measured_sup_eta", &WitnessReport::measured_sup_eta)
      .def_readonly("measured_sup_zeta", &WitnessReport::measured_sup_zeta)
      .def_readonly("bound_final", &WitnessReport::bound_final)
      .def_readonly("support_radius", &WitnessReport::support_radius)
      .def_readonly("worst_x", &WitnessReport::worst_x)
      .def_readonly("worst_y", &WitnessReport::worst_y)
      .def_readonly("worst_eta_dist", &WitnessReport::worst_eta_dist)
      .def_readonly("worst_zeta_dist", &WitnessReport::worst_zeta_dist)
      .def_readonly("worst_chain", &WitnessReport::worst_chain)
      .def_readonly("nesting_ok", &WitnessReport::nesting_ok)
      .def_readonly("integer_scaling_ok", &WitnessReport::integer_scaling_ok);

  m.def("witness_report", &witness_report, py::arg("space"), py::arg("cover"), py::arg("params"),
        py::arg("audit_bound") = true,
        "Runs the construction everywhere and audits every pair at distance <= R.");
  m.def("integer_scaling_check", &integer_scaling_check, py::arg("space"), py::arg("cover"),
        py::arg("n"), "True iff m! * n * zeta is integer-valued at every point.");
  m.def("theoretical_bound", &theoretical_bound, py::arg("multiplicity"), py::arg("R"),
        py::arg("n"), "2 * (1 - m^(-2R/n)).");

  // ---- dimension --------------------------------------------------------------

  py::class_<DimQuery>(m, "DimQuery")
      .def(py::init([](int lambda, int mesh_cap) { return DimQuery{lambda, mesh_cap}; }),
           py::arg("lambda_"), py::arg("mesh_cap"))
      .def_readwrite("lambda_", &DimQuery::lambda)
      .def_readwrite("mesh_cap", &DimQuery::mesh_cap);

  py::class_<DimEstimate>(m, "DimEstimate")
      .def_readonly("lambda_", &DimEstimate::lambda)
      .def_readonly("mesh_cap", &DimEstimate::mesh_cap)
      .def_readonly("upper", &DimEstimate::upper)
      .def_readonly("surrogate", &DimEstimate::surrogate)
      .def_readonly("exact", &DimEstimate::exact)
      .def_readonly("witness_cover", &DimEstimate::witness_cover);

  m.def("dim_upper", &dim_upper, py::arg("space"), py::arg("query"),
        "Best multiplicity - 1 over generated covers meeting the constraints.");
  m.def("dim_exact_tiny", &dim_exact_tiny, py::arg("space"), py::arg("query"),
        "Exact minimum of multiplicity - 1 on spaces of at most 10 points.");

  py::class_<BoundCurveRow>(m, "BoundCurveRow")
      .def_readonly("n", &BoundCurveRow::n)
      .def_readonly("m", &BoundCurveRow::m)
      .def_readonly("bound", &BoundCurveRow::bound)
      .def_readonly("measured_sup_eta", &BoundCurveRow::measured_sup_eta)
      .def_readonly("measured_sup_zeta", &BoundCurveRow::measured_sup_zeta)
      .def_readonly("sup_pair_x", &BoundCurveRow::sup_pair_x)
      .def_readonly("sup_pair_y", &BoundCurveRow::sup_pair_y);

  m.def("bound_curve", &bound_curve, py::arg("space"), py::arg("family"), py::arg("R"),
        "Audited witness run per (n, cover) entry, tabulated in order.");

  // ---- documents ---------------------------------------------------------------

  m.def("format_real", &format_real, py::arg("value"));
  m.def("space_doc", &space_doc, py::arg("space"));
  m.def("parse_space_doc", &parse_space_doc, py::arg("text"));
  m.def("cover_doc", &cover_doc, py::arg("space"), py::arg("cover"));
  m.def("parse_cover_doc", &parse_cover_doc, py::arg("text"));
  m.def("stats_doc", &stats_doc, py::arg("stats"));
  m.def("witness_doc", &witness_doc, py::arg("report"));
  m.def("dim_doc", &dim_doc, py::arg("estimate"));
  m.def("bound_curve_csv", &bound_curve_csv, py::arg("rows"));
  m.def("parse_graph_edge_list", &parse_graph_edge_list, py::arg("text"),
        py::arg("point_budget") = kDefaultPointBudget);
}
