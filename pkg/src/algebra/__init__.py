"""
精确代数层：有理数、截断多项式、λ 的 Laurent 多项式/有理函数、截断 q 级数
"""

from .laurent import LaurentPoly, LaurentRational, rf_reduce, rf_eval
from .truncpoly import (
    TruncPoly,
    exp_nilpotent,
    log_unipotent,
    apply_series,
    pair_fundamental,
)
from .qseries import QSeries, series_invert, pair_product
from .ring import to_fraction

__all__ = [
    "LaurentPoly",
    "LaurentRational",
    "rf_reduce",
    "rf_eval",
    "TruncPoly",
    "exp_nilpotent",
    "log_unipotent",
    "apply_series",
    "pair_fundamental",
    "QSeries",
    "series_invert",
    "pair_product",
    "to_fraction",
]
