from ...common import global_config
from .spinc import SpincData, PontrjaginCandidate
from .indices import (
    standard_aroof,
    aroof_of,
    index_integrand,
    index_twisted,
    index_series,
)
from .mod24 import mod24_check, mod24_index, gamma_minus_one_power
from .rigidity import (
    relation_kernels,
    rigidity_relations,
    rigidity_check,
    perturbation_check,
    upper_bound_relation,
)
from .pontrjagin import reconstruct_pontrjagin
from .core import Mod24Service, RigidityService, ReconstructService

mod24_service = Mod24Service(global_config.get_algebra_config())
rigidity_service = RigidityService(global_config.get_algebra_config())
reconstruct_service = ReconstructService(global_config.get_algebra_config())

__all__ = [
    "SpincData",
    "PontrjaginCandidate",
    "standard_aroof",
    "aroof_of",
    "index_integrand",
    "index_twisted",
    "index_series",
    "mod24_check",
    "mod24_index",
    "gamma_minus_one_power",
    "relation_kernels",
    "rigidity_relations",
    "rigidity_check",
    "perturbation_check",
    "upper_bound_relation",
    "reconstruct_pontrjagin",
    "Mod24Service",
    "RigidityService",
    "ReconstructService",
    "mod24_service",
    "rigidity_service",
    "reconstruct_service",
]
