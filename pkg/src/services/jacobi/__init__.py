from ...common import global_config
from .phi import ModularPoint, NumericPolicy, phi_eval, phi_with_bound, phi_grid
from .laws import (
    S_MATRIX,
    T_MATRIX,
    TS_MATRIX,
    residual,
    lattice_shift_check,
    modular_check,
    oddness_check,
    FY_eval,
    FY_index,
    index_law_check,
    index_modular_check,
    phi_cross_check,
    aggregate,
)
from .scan import nu_numeric, nu_grid, scan_grid, refine_grid, real_line_pole_scan, write_scan_csv
from .core import JacobiService, random_points

jacobi_service = JacobiService(global_config.get_numeric_config())

__all__ = [
    "ModularPoint",
    "NumericPolicy",
    "phi_eval",
    "phi_with_bound",
    "phi_grid",
    "S_MATRIX",
    "T_MATRIX",
    "TS_MATRIX",
    "residual",
    "lattice_shift_check",
    "modular_check",
    "oddness_check",
    "FY_eval",
    "FY_index",
    "index_law_check",
    "index_modular_check",
    "phi_cross_check",
    "aggregate",
    "nu_numeric",
    "nu_grid",
    "scan_grid",
    "refine_grid",
    "real_line_pole_scan",
    "write_scan_csv",
    "JacobiService",
    "random_points",
    "jacobi_service",
]
