#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "divlab/constructions.hpp"
#include "divlab/diversity.hpp"
#include "divlab/exactlp.hpp"
#include "divlab/fixedpoint.hpp"
#include "divlab/io.hpp"
#include "divlab/tightspan.hpp"

namespace py = pybind11;
using namespace divlab;

namespace {

Rat rat_from(py::handle h) {
  if (py::isinstance<Rat>(h)) return h.cast<Rat>();
  if (py::isinstance<py::int_>(h)) return Rat(h.cast<long>());
  auto r = Rat::parse(py::str(h).cast<std::string>());
  if (!r) throw py::value_error("not a rational: " + py::str(h).cast<std::string>());
  return *r;
}

}  // namespace

PYBIND11_MODULE(_divlab, m) {
  m.doc() = "finite diversities: exact axioms, tight spans, hyperconvexity, fixed points";

  py::class_<Rat>(m, "Rat")
      .def(py::init([](py::handle h) { return rat_from(h); }))
      .def("__str__", &Rat::str)
      .def("__repr__", [](const Rat& r) { return "Rat('" + r.str() + "')"; })
      .def("__eq__", [](const Rat& a, py::handle b) { return a == rat_from(b); })
      .def("__lt__", [](const Rat& a, py::handle b) { return a < rat_from(b); })
      .def("__le__", [](const Rat& a, py::handle b) { return a <= rat_from(b); })
      .def("__add__", [](const Rat& a, py::handle b) { return a + rat_from(b); })
      .def("__sub__", [](const Rat& a, py::handle b) { return a - rat_from(b); })
      .def("__mul__", [](const Rat& a, py::handle b) { return a * rat_from(b); })
      .def("__truediv__", [](const Rat& a, py::handle b) { return a / rat_from(b); })
      .def("__neg__", [](const Rat& a) { return -a; })
      .def("__hash__", [](const Rat& a) { return py::hash(py::str(a.str())); })
      .def_property_readonly("numerator", &Rat::num_str)
      .def_property_readonly("denominator", &Rat::den_str);
  py::implicitly_convertible<py::int_, Rat>();
  py::implicitly_convertible<py::str, Rat>();

  py::class_<GroundSet>(m, "GroundSet")
      .def(py::init<std::vector<std::string>>())
      .def("__len__", &GroundSet::size)
      .def("labels", &GroundSet::labels)
      .def("label", &GroundSet::label)
      .def("index", &GroundSet::index)
      .def("all", &GroundSet::all)
      .def("subset", &GroundSet::parse_subset, "mask of a literal like '{a,b}'")
      .def("format", &GroundSet::format_subset)
      .def(py::self == py::self);

  py::class_<SetFunction>(m, "SetFunction")
      .def(py::init<GroundSet>())
      .def("ground", &SetFunction::ground, py::return_value_policy::reference_internal)
      .def("value", &SetFunction::value)
      .def("set", [](SetFunction& f, Mask mask, py::handle v) { f.set(mask, rat_from(v)); })
      .def("is_monotone", &SetFunction::is_monotone)
      .def(py::self == py::self);

  py::class_<FiniteMetric>(m, "FiniteMetric")
      .def(py::init([](const GroundSet& g, const std::vector<std::vector<py::handle>>& rows) {
        std::vector<Rat> d;
        for (const auto& row : rows)
          for (const auto& cell : row) d.push_back(rat_from(cell));
        return FiniteMetric(g, std::move(d));
      }))
      .def("ground", &FiniteMetric::ground, py::return_value_policy::reference_internal)
      .def("__len__", &FiniteMetric::size)
      .def("dist", &FiniteMetric::dist);

  py::class_<FiniteDiversity>(m, "FiniteDiversity")
      .def_static("from_table", &FiniteDiversity::from_table)
      .def("ground", &FiniteDiversity::ground, py::return_value_policy::reference_internal)
      .def("__len__", &FiniteDiversity::size)
      .def("value", &FiniteDiversity::value)
      .def("to_table", &FiniteDiversity::to_table);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def("ok", &AxiomReport::ok)
      .def_readonly("sampled", &AxiomReport::sampled)
      .def_readonly("triples_checked", &AxiomReport::triples_checked)
      .def_property_readonly("violation_count", [](const AxiomReport& r) {
        return r.negative.size() + r.zero_breaks.size() + r.triangle.size() +
               r.monotonicity.size() + r.subadditivity.size();
      });

  py::enum_<ScanMode>(m, "ScanMode")
      .value("AUTO", ScanMode::Auto)
      .value("EXHAUSTIVE", ScanMode::Exhaustive)
      .value("SAMPLED", ScanMode::Sampled);

  m.def(
      "verify_diversity_axioms",
      [](const FiniteDiversity& d, ScanMode mode, std::uint64_t seed, std::uint64_t samples) {
        return verify_diversity_axioms(d, mode, seed, samples);
      },
      py::arg("diversity"), py::arg("mode") = ScanMode::Auto, py::arg("seed") = 0,
      py::arg("samples") = 100000);
  m.def("induced_metric", &induced_metric);
  m.def("chebyshev_radius", &chebyshev_radius);
  m.def("ball_hull", &ball_hull);
  m.def("is_admissible", &is_admissible);

  // constructions
  py::class_<MetricTree>(m, "MetricTree")
      .def(py::init([](std::vector<std::string> nodes,
                       const std::vector<std::tuple<int, int, py::handle>>& edges) {
        std::vector<MetricTree::Edge> es;
        for (const auto& [u, v, len] : edges) es.push_back({u, v, rat_from(len)});
        return MetricTree(std::move(nodes), std::move(es));
      }))
      .def("node_count", &MetricTree::node_count)
      .def("node_distance", &MetricTree::node_distance);

  py::class_<TreePoint>(m, "TreePoint")
      .def(py::init([](int edge, py::handle offset) { return TreePoint{edge, rat_from(offset)}; }))
      .def_readonly("edge", &TreePoint::edge)
      .def_readonly("offset", &TreePoint::offset);

  m.def("tree_point_distance", &tree_point_distance);
  m.def("diameter_diversity", &diameter_diversity);
  m.def("tree_diversity", &tree_diversity);
  m.def("glue_diversities", &glue_diversities);
  m.def("counting_diversity", &counting_diversity, py::arg("n"),
        py::arg("labels") = std::vector<std::string>{});
  m.def("restrict_diversity", &restrict);

  py::class_<HypconViolation>(m, "HypconViolation")
      .def_readonly("set", &HypconViolation::set)
      .def_readonly("lhs", &HypconViolation::lhs)
      .def_readonly("rhs", &HypconViolation::rhs);
  py::class_<HypconReport>(m, "HypconReport")
      .def("ok", &HypconReport::ok)
      .def_readonly("violations", &HypconReport::violations);
  m.def("hypcon_check", &hypcon_check);

  py::class_<StarSwapGadget>(m, "StarSwapGadget")
      .def_readonly("diversity", &StarSwapGadget::diversity)
      .def_readonly("swap", &StarSwapGadget::swap)
      .def_readonly("grid", &StarSwapGadget::grid);
  m.def("star_swap_gadget", &star_swap_gadget);

  // tight span
  py::class_<PxSystem>(m, "PxSystem")
      .def_readonly("families", &PxSystem::families)
      .def("family_count", [](const PxSystem& s) { return s.families.size(); });
  m.def("px_constraints", &px_constraints, py::arg("diversity"),
        py::arg("cap") = kDefaultTightSpanCap);
  m.def("in_px", &in_px);
  m.def("kappa", &kappa);
  m.def("coordinate_order_lex", &coordinate_order_lex);
  m.def("coordinate_order_by_card", &coordinate_order_by_card);
  py::class_<TightPoint>(m, "TightPoint")
      .def_readonly("f", &TightPoint::f)
      .def_readonly("coordinate_minima", &TightPoint::coordinate_minima);
  m.def("tighten", &tighten);
  m.def("is_tight_point", &is_tight_point);
  m.def("delta_T", &delta_T);

  py::enum_<HyperconvexAnswer>(m, "HyperconvexAnswer")
      .value("HYPERCONVEX", HyperconvexAnswer::Hyperconvex)
      .value("NOT_HYPERCONVEX", HyperconvexAnswer::NotHyperconvex)
      .value("WITHIN_TOLERANCE", HyperconvexAnswer::HyperconvexWithinTolerance);
  py::class_<DiversityHyperconvexityCertificate>(m, "DiversityHyperconvexityCertificate")
      .def_readonly("r", &DiversityHyperconvexityCertificate::r)
      .def_readonly("witnesses", &DiversityHyperconvexityCertificate::witnesses)
      .def_readonly("margins", &DiversityHyperconvexityCertificate::margins);
  py::class_<DiversityHyperconvexityVerdict>(m, "DiversityHyperconvexityVerdict")
      .def_readonly("answer", &DiversityHyperconvexityVerdict::answer)
      .def_readonly("certificate", &DiversityHyperconvexityVerdict::certificate);
  m.def("hyperconvexity_certificate", &hyperconvexity_certificate, py::arg("diversity"),
        py::arg("cap") = 4);
  py::class_<MetricHyperconvexityCertificate>(m, "MetricHyperconvexityCertificate")
      .def_readonly("r", &MetricHyperconvexityCertificate::r)
      .def_readonly("witnesses", &MetricHyperconvexityCertificate::witnesses)
      .def_readonly("margins", &MetricHyperconvexityCertificate::margins);
  py::class_<MetricHyperconvexityVerdict>(m, "MetricHyperconvexityVerdict")
      .def_readonly("answer", &MetricHyperconvexityVerdict::answer)
      .def_readonly("tolerance", &MetricHyperconvexityVerdict::tolerance)
      .def_readonly("certificate", &MetricHyperconvexityVerdict::certificate);
  m.def(
      "metric_hyperconvexity_certificate",
      [](const FiniteMetric& metric, py::handle tolerance) {
        return metric_hyperconvexity_certificate(metric, rat_from(tolerance));
      },
      py::arg("metric"), py::arg("tolerance") = 0);
  m.def("isbell_extremal_check",
        [](const FiniteMetric& metric, const std::vector<py::handle>& values) {
          std::vector<Rat> f;
          for (auto h : values) f.push_back(rat_from(h));
          return isbell_extremal_check(metric, f);
        });

  // fixed points
  py::class_<SelfMap>(m, "SelfMap")
      .def(py::init<GroundSet, std::vector<int>>())
      .def_readonly("ground", &SelfMap::ground)
      .def_readonly("image", &SelfMap::image)
      .def("apply", &SelfMap::apply);
  m.def("map_image", &map_image);
  py::class_<MetricNonexpansiveReport>(m, "MetricNonexpansiveReport")
      .def_readonly("ok", &MetricNonexpansiveReport::ok);
  m.def("is_nonexpansive_metric", &is_nonexpansive_metric);
  py::class_<DiversityExpansionWitness>(m, "DiversityExpansionWitness")
      .def_readonly("set", &DiversityExpansionWitness::set)
      .def_readonly("before", &DiversityExpansionWitness::before)
      .def_readonly("after", &DiversityExpansionWitness::after);
  py::class_<DiversityNonexpansiveReport>(m, "DiversityNonexpansiveReport")
      .def_readonly("ok", &DiversityNonexpansiveReport::ok)
      .def_readonly("witness", &DiversityNonexpansiveReport::witness);
  m.def("is_nonexpansive_diversity", &is_nonexpansive_diversity);
  m.def("diversity_fixed_set_search", &diversity_fixed_set_search);
  m.def("extend_r", &extend_r);
  m.def("center_set", &center_set);
  py::class_<NormalStructure>(m, "NormalStructure")
      .def_readonly("d", &NormalStructure::d)
      .def_readonly("cardinality", &NormalStructure::cardinality)
      .def_readonly("attaining", &NormalStructure::attaining);
  m.def("normal_structure_d", &normal_structure_d);
  py::class_<DescentStep>(m, "DescentStep")
      .def_readonly("stabilized", &DescentStep::stabilized)
      .def_readonly("d_value", &DescentStep::d_value)
      .def_readonly("shrunk", &DescentStep::shrunk);
  py::class_<DescentOutcome> descent(m, "DescentOutcome");
  py::enum_<DescentOutcome::Kind>(descent, "Kind")
      .value("FIXED_POINT", DescentOutcome::Kind::FixedPoint)
      .value("EPSILON_FIXED_POINT", DescentOutcome::Kind::EpsilonFixedPoint)
      .value("STUCK_MINIMAL_SET", DescentOutcome::Kind::StuckMinimalSet);
  descent.def_readonly("kind", &DescentOutcome::kind)
      .def_readonly("point", &DescentOutcome::point)
      .def_readonly("displacement", &DescentOutcome::displacement)
      .def_readonly("terminal", &DescentOutcome::terminal)
      .def_readonly("trace", &DescentOutcome::trace);
  m.def(
      "minimal_invariant_descent",
      [](const FiniteDiversity& div, const SelfMap& map, Mask start, py::handle epsilon) {
        return minimal_invariant_descent(div, map, start, rat_from(epsilon));
      },
      py::arg("diversity"), py::arg("map"), py::arg("start"), py::arg("epsilon") = 0);
  m.def("brute_force_fixed_points", &brute_force_fixed_points);

  // io
  m.def("parse_diversity", &parse_diversity);
  m.def("serialize_explicit", &serialize_explicit);
  m.def("parse_map", &parse_map);

  py::register_exception<ParseError>(m, "ParseError");
}
