# src/characteristic/genus.py
"""
乘性序列 Â 与 L
系数由定义幂级数精确展开（sympy），不使用硬编码表
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

import sympy

from ..algebra import (
    TruncPoly,
    apply_series,
    exp_nilpotent,
    log_unipotent,
    pair_fundamental,
    to_fraction,
)
from ..common.exceptions import UnpairedRoots
from ..common.states import SeriesId
from .bundles import RootBundle

_Y = sympy.Symbol("y")


def _genus_expression(series_id: SeriesId):
    if series_id is SeriesId.AROOF:
        return (_Y / 2) / sympy.sinh(_Y / 2)
    if series_id is SeriesId.L:
        return _Y / sympy.tanh(_Y)
    raise ValueError(f"未知的乘性序列: {series_id}")


def _taylor(expr, degree: int) -> Tuple[Fraction, ...]:
    poly = sympy.series(expr, _Y, 0, degree + 1).removeO()
    return tuple(to_fraction(poly.coeff(_Y, k)) for k in range(degree + 1))


@lru_cache(maxsize=None)
def genus_coefficients(series_id: SeriesId, degree: int) -> Tuple[Fraction, ...]:
    """g(y) 的 Taylor 系数，Â: y/(e^{y/2}−e^{−y/2})，L: y/tanh(y)"""
    return _taylor(_genus_expression(series_id), degree)


@lru_cache(maxsize=None)
def log_genus_coefficients(series_id: SeriesId, degree: int) -> Tuple[Fraction, ...]:
    """log g(y) 的 Taylor 系数（只有偶次项）"""
    return _taylor(sympy.log(_genus_expression(series_id)), degree)


def multiplicative_class(series_id: SeriesId, bundle: RootBundle, m: int) -> TruncPoly:
    """
    ∏_{正根 c·x} g(c·x)，在 Q[x]/(x^{m+1}) 中展开

    Raises:
        UnpairedRoots: 丛不是成对类型
    """
    if not bundle.kind.is_paired:
        raise UnpairedRoots(f"{series_id.value} 类要求成对丛，实际为 {bundle.kind.value}")
    coeffs = genus_coefficients(series_id, m)
    result = TruncPoly.one(m)
    for summand in bundle.positive_roots():
        if summand.root == 0:
            continue
        factor = apply_series(coeffs, TruncPoly.variable(m, summand.root))
        result = result * factor**summand.multiplicity
    return result


def _check_even(series: TruncPoly, label: str) -> None:
    for k in range(1, series.m + 1, 2):
        if series.coeffs[k] != 0:
            raise ValueError(f"{label} 含奇数次项 x^{k}")


def genus_from_pontrjagin(series_id: SeriesId, pontrjagin: TruncPoly) -> TruncPoly:
    """
    由总 Pontrjagin 类 1 + Σ p_j x^{2j} 得到乘性类
    经由 log p 给出平方根的幂和，再乘以 log g 的系数后取指数
    """
    _check_even(pontrjagin, "Pontrjagin 类")
    m = pontrjagin.m
    log_p = log_unipotent(pontrjagin)
    ell = log_genus_coefficients(series_id, m)
    log_genus = [Fraction(0)] * (m + 1)
    for k in range(1, m // 2 + 1):
        power_sum = (-1) ** (k + 1) * k * log_p.coeffs[2 * k]
        log_genus[2 * k] = ell[2 * k] * power_sum
    return exp_nilpotent(TruncPoly(m, log_genus))


def pontrjagin_from_genus(series_id: SeriesId, genus: TruncPoly) -> TruncPoly:
    """genus_from_pontrjagin 的逆（三角可逆）"""
    _check_even(genus, "乘性类")
    m = genus.m
    log_g = log_unipotent(genus)
    ell = log_genus_coefficients(series_id, m)
    log_p = [Fraction(0)] * (m + 1)
    for k in range(1, m // 2 + 1):
        if ell[2 * k] == 0:
            raise ValueError(f"log 系数在 y^{2 * k} 处为零，无法反解")
        power_sum = log_g.coeffs[2 * k] / ell[2 * k]
        log_p[2 * k] = Fraction((-1) ** (k + 1), k) * power_sum
    return exp_nilpotent(TruncPoly(m, log_p))


def standard_pontrjagin(m: int) -> TruncPoly:
    """CP^m 的标准总 Pontrjagin 类 (1+x^2)^{m+1}"""
    return (TruncPoly.one(m) + TruncPoly.monomial(m, 2)) ** (m + 1)


def pontrjagin_from_components(m: int, components: Sequence[Fraction]) -> TruncPoly:
    """components[j-1] 为 p_j"""
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[0] = Fraction(1)
    for j, value in enumerate(components, start=1):
        if 2 * j <= m:
            coeffs[2 * j] = Fraction(value)
    return TruncPoly(m, coeffs)


def pontrjagin_components(p: TruncPoly) -> Tuple[Fraction, ...]:
    return tuple(p.coeffs[2 * j] for j in range(1, p.m // 2 + 1))


def signature(pontrjagin: TruncPoly) -> Fraction:
    """符号差定理：⟨L(p), μ⟩"""
    return pair_fundamental(genus_from_pontrjagin(SeriesId.L, pontrjagin))


def aroof_genus(pontrjagin: TruncPoly) -> Fraction:
    return pair_fundamental(genus_from_pontrjagin(SeriesId.AROOF, pontrjagin))
