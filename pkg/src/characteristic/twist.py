# src/characteristic/twist.py
"""
扭曲级数 𝒰_V 与 𝒰_{V,W} 的 Chern 特征，以及 φ 的精确 q 级数

对一对根 ±y（u = e^y·λ^ω），记 P(u) = ∏ (1−q^n u)(1−q^n u^{-1})/(1−q^n)^2：
  S_{q^n}(T̃M⊗C) 每对贡献 1/P，Λ_{−q^n}(Ṽ⊗C) 每个线丛贡献 P，
  Λ_{q^n}(W̃⊗C) 每对贡献把符号换成 + 的同型乘积
"""

from ..algebra import LaurentPoly, QSeries, TruncPoly, pair_product
from ..common.exceptions import OddHalfWeight
from .bundles import LineSummand, RootBundle
from .classes import equivariant_exp, exp_root, spinor_character


def _u(m: int, summand: LineSummand, equivariant: bool, sign: int = 1) -> TruncPoly:
    if equivariant:
        return equivariant_exp(m, summand, sign)
    return exp_root(m, sign * summand.root)


def u_plus_inverse(m: int, summand: LineSummand, equivariant: bool = False) -> TruncPoly:
    """u + u^{-1}"""
    return _u(m, summand, equivariant) + _u(m, summand, equivariant, -1)


def exterior_minus_one_dual(v: RootBundle, m: int, equivariant: bool = False) -> TruncPoly:
    """ch Λ_{−1}(V*) = ∏ (1 − e^{−v}λ^{−s})^{mult}"""
    result = TruncPoly.one(m)
    for summand in v.summands:
        result = result * (1 - _u(m, summand, equivariant, -1)) ** summand.multiplicity
    return result


def twist_UV(
    tm: RootBundle, v: RootBundle, m: int, order: int, equivariant: bool = False
) -> QSeries:
    """
    ch(⊗ S_{q^n}(T̃M⊗C) ⊗ Λ_{−1}(V*) ⊗ ⊗ Λ_{−q^n}(Ṽ⊗C))，截断到 q^order
    """
    series = QSeries.constant(exterior_minus_one_dual(v, m, equivariant), order)
    for summand in v.summands:
        factor = pair_product(u_plus_inverse(m, summand, equivariant), order, -1)
        series = series * factor**summand.multiplicity
    for summand in tm.positive_roots():
        if summand.root == 0 and summand.weight == 0:
            continue
        factor = pair_product(u_plus_inverse(m, summand, equivariant), order, -1)
        series = series * factor ** (-summand.multiplicity)
    return series


def twist_UVW(
    tm: RootBundle,
    v: RootBundle,
    w: RootBundle,
    m: int,
    order: int,
    equivariant: bool = False,
) -> QSeries:
    """𝒰_V ⊗ Δ(W) ⊗ ⊗ Λ_{q^n}(W̃⊗C)"""
    series = twist_UV(tm, v, m, order, equivariant)
    if w.is_empty():
        return series
    series = series * spinor_character(w, m, equivariant)
    for summand in w.positive_roots():
        factor = pair_product(u_plus_inverse(m, summand, equivariant), order, 1)
        series = series * factor**summand.multiplicity
    return series


def phi_series(weight: int, order: int) -> QSeries:
    """
    φ(q, λ^w) = (λ^{w/2} − λ^{−w/2})·P(λ^w) 的精确 q 级数，w 为加倍后的偶数权重
    """
    if weight % 2:
        raise OddHalfWeight(f"φ 的权重必须为偶数: {weight}")
    s = LaurentPoly.monomial(weight) + LaurentPoly.monomial(-weight)
    return pair_product(s, order, -1) * LaurentPoly.half_difference(weight)
