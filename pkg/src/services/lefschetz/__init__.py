from ...common import global_config
from .model import (
    FixedComponent,
    FixedPointData,
    LinearModelSpec,
    VAssignment,
    linear_model,
    isolated_component,
    tangent_model,
)
from .weights import (
    star_value,
    star_invariant,
    jacobi_index_IY,
    build_bound_V,
    vanishing_assignment,
    twist_index_constancy,
    petrie_bound_report,
)
from .local_terms import LocalTerm, local_term, lefschetz_sum, vanishing_report
from .generator import (
    Fixture,
    fixture_from_dict,
    fixture_to_dict,
    load_fixture,
    dump_fixture,
    linear_family,
    synthetic_star,
    petrie_edge,
    generate_fixtures,
)
from .core import LefschetzService, StarService, PetrieService

lefschetz_service = LefschetzService(global_config.get_algebra_config())
star_service = StarService(global_config.get_algebra_config())
petrie_service = PetrieService(global_config.get_algebra_config())

__all__ = [
    "FixedComponent",
    "FixedPointData",
    "LinearModelSpec",
    "VAssignment",
    "linear_model",
    "isolated_component",
    "tangent_model",
    "star_value",
    "star_invariant",
    "jacobi_index_IY",
    "build_bound_V",
    "vanishing_assignment",
    "twist_index_constancy",
    "petrie_bound_report",
    "LocalTerm",
    "local_term",
    "lefschetz_sum",
    "vanishing_report",
    "Fixture",
    "fixture_from_dict",
    "fixture_to_dict",
    "load_fixture",
    "dump_fixture",
    "linear_family",
    "synthetic_star",
    "petrie_edge",
    "generate_fixtures",
    "LefschetzService",
    "StarService",
    "PetrieService",
    "lefschetz_service",
    "star_service",
    "petrie_service",
]
