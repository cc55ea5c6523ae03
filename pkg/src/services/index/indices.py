# src/services/index/indices.py
"""
非等变 Atiyah–Singer 指标：ind(∂_c ⊗ V) = ⟨e^{c/2}·Â(M)·ch(V), μ_M⟩
"""

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from ...algebra import QSeries, TruncPoly, exp_nilpotent, pair_fundamental
from ...characteristic import (
    RootBundle,
    chern_character,
    cp_tangent_bundle,
    genus_from_pontrjagin,
    multiplicative_class,
)
from ...common.states import SeriesId
from .spinc import PontrjaginCandidate, SpincData


@lru_cache(maxsize=None)
def standard_aroof(m: int) -> TruncPoly:
    """由切丛模型得到的 Â(CP^m)"""
    return multiplicative_class(SeriesId.AROOF, cp_tangent_bundle(m), m)


def aroof_of(candidate: PontrjaginCandidate) -> TruncPoly:
    return genus_from_pontrjagin(SeriesId.AROOF, candidate.total_class())


def index_integrand(spinc: SpincData, aroof: Optional[TruncPoly] = None) -> TruncPoly:
    """e^{c/2}·Â"""
    if aroof is None:
        aroof = standard_aroof(spinc.m)
    return exp_nilpotent(spinc.chern_class() * Fraction(1, 2)) * aroof


def index_twisted(
    spinc: SpincData, v: RootBundle, aroof: Optional[TruncPoly] = None
) -> Fraction:
    """精确有理数；整性由调用方另行判断"""
    return pair_fundamental(
        index_integrand(spinc, aroof) * chern_character(v, spinc.m)
    )


def index_series(
    spinc: SpincData, twist: QSeries, aroof: Optional[TruncPoly] = None
) -> QSeries:
    """对扭曲级数的每个 q 系数应用指标积分"""
    integrand = index_integrand(spinc, aroof)
    return twist.map(lambda coeff: pair_fundamental(integrand * coeff))
