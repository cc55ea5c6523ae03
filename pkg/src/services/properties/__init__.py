from ...common import global_config
from .suite import (
    PROPERTY_SUITE,
    run_properties,
    random_fraction,
    random_truncpoly,
    random_laurent,
)
from .core import PropertyService

property_service = PropertyService(global_config.get_algebra_config())

__all__ = [
    "PROPERTY_SUITE",
    "run_properties",
    "random_fraction",
    "random_truncpoly",
    "random_laurent",
    "PropertyService",
    "property_service",
]
