#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylcones/estimators.hpp"
#include "weylcones/io.hpp"
#include "weylcones/sphere_export.hpp"

namespace py = pybind11;
using namespace weylcones;

namespace {

py::object py_int(const Integer& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object py_fraction(const Rational& value) {
    return py::module_::import("fractions").attr("Fraction")(rational_to_string(value));
}

py::object json_loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

std::string json_dumps(const py::object& obj) {
    return py::module_::import("json").attr("dumps")(obj).cast<std::string>();
}

Family family_arg(const std::string& s) { return family_from_string(s); }

StirlingKind stirling_kind(const std::string& s) {
    if (s == "firstA" || s == "FirstA") return StirlingKind::FirstA;
    if (s == "firstB" || s == "FirstB") return StirlingKind::FirstB;
    if (s == "secondA" || s == "SecondA") return StirlingKind::SecondA;
    if (s == "secondB" || s == "SecondB") return StirlingKind::SecondB;
    throw std::invalid_argument("unknown stirling kind '" + s + "'");
}

PointConfig config_arg(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_point_config(obj.cast<std::string>());
    return parse_point_config(json_dumps(obj));
}

py::dict estimate_dict(const Estimate& est) {
    py::dict out;
    out["mean"] = est.mean;
    out["stderr"] = est.std_error;
    out["trials"] = est.trials;
    out["resamples"] = est.resamples;
    if (est.has_target) {
        out["target"] = py_fraction(est.target);
        out["z"] = est.z_score();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact enumeration and Monte Carlo estimation for conical tessellations "
              "generated by Weyl-type hyperplane arrangements";

    m.def("stirling",
          [](const std::string& kind, int n, long k) { return py_int(stirling(stirling_kind(kind), n, k)); },
          py::arg("kind"), py::arg("n"), py::arg("k"),
          "Stirling numbers: kind is one of firstA, firstB, secondA, secondB");

    m.def("region_count",
          [](const std::string& family, int n, int d) { return py_int(region_count(family_arg(family), n, d)); },
          py::arg("family"), py::arg("n"), py::arg("d"));

    m.def("total_face_count",
          [](const std::string& family, int n, int d, int k) {
              return py_int(total_face_count(family_arg(family), n, d, k));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("k"));

    m.def("incidence_count",
          [](const std::string& family, int n, int d, int k) {
              return py_int(incidence_count(family_arg(family), n, d, k));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("k"));

    m.def("chamber_face_intersection_count",
          [](const std::string& family, int n, int k, int d) {
              return py_int(chamber_face_intersection_count(family_arg(family), n, k, d));
          },
          py::arg("family"), py::arg("n"), py::arg("k"), py::arg("d"));

    m.def("expected_face_count",
          [](const std::string& family, int n, int d, int k) {
              return py_fraction(expected_face_count(family_arg(family), n, d, k));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("k"));

    m.def("expected_size_functional",
          [](const std::string& family, int n, int d, int k, int j) {
              return py_fraction(expected_size_functional(family_arg(family), n, d, k, j));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("k"), py::arg("j"));

    m.def("expected_quermass",
          [](const std::string& family, int n, int d, int j) {
              return py_fraction(expected_quermass(family_arg(family), n, d, j));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("j"));

    m.def("expected_intrinsic_volume",
          [](const std::string& family, int n, int d, int j) {
              return py_fraction(expected_intrinsic_volume(family_arg(family), n, d, j));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("j"));

    m.def("expected_angle_sum",
          [](const std::string& family, int n, int d, int k) {
              return py_fraction(expected_angle_sum(family_arg(family), n, d, k));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("k"));

    m.def("expected_dual_face_count",
          [](const std::string& family, int n, int d, int k) {
              return py_fraction(expected_dual_face_count(family_arg(family), n, d, k));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("k"));

    m.def("expected_dual_quermass",
          [](const std::string& family, int n, int d, int j) {
              return py_fraction(expected_dual_quermass(family_arg(family), n, d, j));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("j"));

    m.def("expected_dual_intrinsic_volume",
          [](const std::string& family, int n, int d, int j) {
              return py_fraction(expected_dual_intrinsic_volume(family_arg(family), n, d, j));
          },
          py::arg("family"), py::arg("n"), py::arg("d"), py::arg("j"));

    m.def("acceptance_probability",
          [](const std::string& family, int n, int d) {
              return py_fraction(acceptance_probability(family_arg(family), n, d));
          },
          py::arg("family"), py::arg("n"), py::arg("d"));

    m.def("sample_config",
          [](const std::string& dist, const std::string& family, int n, int d,
             std::uint64_t seed, std::uint64_t stream) {
              PointConfig cfg = sample_config(distribution_from_string(dist), family_arg(family),
                                              n, d, {seed, stream});
              return json_loads(point_config_to_json(cfg));
          },
          py::arg("dist"), py::arg("family"), py::arg("n"), py::arg("d"), py::arg("seed"),
          py::arg("stream") = 0,
          "Draw an exact-rational point configuration in general position");

    m.def("check_gp_chainwise",
          [](const py::object& config) { return check_gp_chainwise(config_arg(config)); },
          py::arg("config"));

    m.def("check_gp_lattice",
          [](const py::object& config) { return check_gp_lattice(config_arg(config)); },
          py::arg("config"));

    m.def("cone_count",
          [](const py::object& config) {
              return static_cast<long long>(enumerate_cones(config_arg(config)).size());
          },
          py::arg("config"), "Number of cones of the tessellation, by exact enumeration");

    m.def("face_count",
          [](const py::object& config, int k) {
              PointConfig cfg = config_arg(config);
              return static_cast<long long>(enumerate_faces(cfg, k).size());
          },
          py::arg("config"), py::arg("k"));

    m.def("incidence_sums",
          [](const py::object& config, int k) {
              PointConfig cfg = config_arg(config);
              Tessellation tess(cfg);
              return py::make_tuple(py_int(tess.incidence_via_faces(k)),
                                    py_int(tess.incidence_via_cones(k)));
          },
          py::arg("config"), py::arg("k"),
          "Incidence totals computed by face multiplicities and by per-cone counting");

    m.def("enumerate_cones",
          [](const py::object& config) {
              PointConfig cfg = config_arg(config);
              py::list out;
              for (const SignedOrdering& ordering : enumerate_cones(cfg)) {
                  py::dict cone;
                  py::list perm, signs;
                  for (int p : ordering.perm) perm.append(p + 1);
                  for (auto s : ordering.signs) signs.append(static_cast<int>(s));
                  cone["permutation"] = perm;
                  if (cfg.family == Family::B) cone["signs"] = signs;
                  out.append(cone);
              }
              return out;
          },
          py::arg("config"));

    m.def("lattice_subspace_counts",
          [](const std::string& family, int n) {
              py::list out;
              for (const Integer& c : lattice_subspace_counts(family_arg(family), n))
                  out.append(py_int(c));
              return out;
          },
          py::arg("family"), py::arg("n"));

    m.def("run_experiment",
          [](const py::object& spec_obj) {
              std::string text = py::isinstance<py::str>(spec_obj)
                                     ? spec_obj.cast<std::string>()
                                     : json_dumps(spec_obj);
              Report report = run_experiment(experiment_spec_from_json(text));
              return json_loads(report_to_json(report));
          },
          py::arg("spec"),
          "Run a seeded experiment; spec is a dict or JSON string with quantity, family, n, d, "
          "k, j, dist, trials, cones, seed");

    m.def("estimate",
          [](const py::object& spec_obj) {
              std::string text = py::isinstance<py::str>(spec_obj)
                                     ? spec_obj.cast<std::string>()
                                     : json_dumps(spec_obj);
              Report report = run_experiment(experiment_spec_from_json(text));
              return estimate_dict(report.estimate);
          },
          py::arg("spec"), "Like run_experiment, but returns just the estimate fields");

    m.def("export_sphere",
          [](const py::object& config) { return json_loads(export_sphere_json(config_arg(config))); },
          py::arg("config"), "Great circles and cone polygons for a d=3 configuration");

    m.def("set_thread_count", &set_thread_count, py::arg("threads"));

    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<DegenerateConfigError>(m, "DegenerateConfigError");
}
