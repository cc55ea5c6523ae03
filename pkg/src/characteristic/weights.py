# src/characteristic/weights.py
"""
不动点分支上由权重决定的指标
输入一律是加倍后的权重，结果换算回未加倍的约定
"""

from fractions import Fraction
from typing import Iterable, Tuple

from ..common.exceptions import NonIntegralIndex

WeightWithMultiplicity = Tuple[int, int]


def _weighted_square_sum(weights: Iterable[WeightWithMultiplicity]) -> int:
    return sum(mult * w * w for w, mult in weights)


def jacobi_index_from_weights(
    v_weights: Iterable[WeightWithMultiplicity], normal_weights: Iterable[int]
) -> int:
    """
    I = ½(Σ ŝ² − Σ m̂²)，ŝ、m̂ 为未加倍权重

    Raises:
        NonIntegralIndex: Σ ŝ² − Σ m̂² 为奇数
    """
    total = _weighted_square_sum(v_weights) - sum(w * w for w in normal_weights)
    if total % 4:
        raise NonIntegralIndex(f"权重平方和 {total} 不是 4 的倍数，权重没有加倍？")
    raw = total // 4
    if raw % 2:
        raise NonIntegralIndex(f"Σŝ² − Σm̂² = {raw} 为奇数")
    return raw // 2


def spinc_twist_index(
    v_weights: Iterable[WeightWithMultiplicity],
    w_weights: Iterable[WeightWithMultiplicity],
    normal_weights: Iterable[int],
) -> Fraction:
    """𝒰_{V,W} 的指标 ½(Σ ŝ² + Σ t̂² − Σ m̂²)，W 的每对根计一次"""
    total = (
        _weighted_square_sum(v_weights)
        + _weighted_square_sum(w_weights)
        - sum(w * w for w in normal_weights)
    )
    return Fraction(total, 8)
