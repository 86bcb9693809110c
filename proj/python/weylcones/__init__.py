"""Exact enumeration and Monte Carlo estimation for conical tessellations
generated by Weyl-type hyperplane arrangements (types A and B)."""

import importlib

try:  # installed layout: the extension lives inside the package
    _core = importlib.import_module("._core", __name__)
except ImportError:  # in-tree builds put _core on sys.path directly
    _core = importlib.import_module("_core")

__all__ = [
    "BudgetError",
    "DegenerateConfigError",
    "acceptance_probability",
    "chamber_face_intersection_count",
    "check_gp_chainwise",
    "check_gp_lattice",
    "cone_count",
    "enumerate_cones",
    "estimate",
    "expected_angle_sum",
    "expected_dual_face_count",
    "expected_dual_intrinsic_volume",
    "expected_dual_quermass",
    "expected_face_count",
    "expected_intrinsic_volume",
    "expected_quermass",
    "expected_size_functional",
    "export_sphere",
    "face_count",
    "incidence_count",
    "incidence_sums",
    "lattice_subspace_counts",
    "region_count",
    "run_experiment",
    "sample_config",
    "set_thread_count",
    "stirling",
    "total_face_count",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name, importlib
