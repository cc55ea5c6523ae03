"""
示性类演算：由形式根计算 Â/L 乘性序列、Chern 特征、Euler 类、旋量特征与扭曲级数
"""

from .bundles import (
    LineSummand,
    RootBundle,
    cp_tangent_bundle,
    gamma_bundle,
    spin_gamma_bundle,
)
from .genus import (
    genus_coefficients,
    multiplicative_class,
    genus_from_pontrjagin,
    pontrjagin_from_genus,
    standard_pontrjagin,
    pontrjagin_from_components,
    pontrjagin_components,
    signature,
    aroof_genus,
)
from .classes import chern_character, euler_class, spinor_character, exp_root
from .twist import twist_UV, twist_UVW, phi_series, u_plus_inverse
from .weights import jacobi_index_from_weights, spinc_twist_index

__all__ = [
    "LineSummand",
    "RootBundle",
    "cp_tangent_bundle",
    "gamma_bundle",
    "spin_gamma_bundle",
    "genus_coefficients",
    "multiplicative_class",
    "genus_from_pontrjagin",
    "pontrjagin_from_genus",
    "standard_pontrjagin",
    "pontrjagin_from_components",
    "pontrjagin_components",
    "signature",
    "aroof_genus",
    "chern_character",
    "euler_class",
    "spinor_character",
    "exp_root",
    "twist_UV",
    "twist_UVW",
    "phi_series",
    "u_plus_inverse",
    "jacobi_index_from_weights",
    "spinc_twist_index",
]
