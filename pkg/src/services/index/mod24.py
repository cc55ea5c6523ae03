# src/services/index/mod24.py
"""
p1 模 24 的上同调不变性
取 c = (m+1)·x, V = (γ−1)^{m−2}，指标 = Q − b/24，Q 与 b 及高阶 Pontrjagin 类无关
"""

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List

from ...characteristic import RootBundle, gamma_bundle
from ...common import CheckStatus, VerificationReport
from ...common.exceptions import DimensionTooSmall
from .indices import aroof_of, index_twisted
from .spinc import PontrjaginCandidate, SpincData


def gamma_minus_one_power(power: int) -> RootBundle:
    """(γ−1)^power 按二项式展开为虚线丛之和"""
    return gamma_bundle(
        [(k, 0, comb(power, k) * (-1) ** (power - k)) for k in range(power + 1)]
    )


def mod24_index(m: int, b: int, higher_shift: int = 0) -> Fraction:
    """
    假设 p1 = b·x^2 时的指标
    higher_shift 给 p_2, p_3, … 加上同一个整数，用于检验 Q 与高阶类无关
    """
    candidate = PontrjaginCandidate.standard(m, p1=b)
    if higher_shift:
        shifted = (candidate.p[0],) + tuple(v + higher_shift for v in candidate.p[1:])
        candidate = PontrjaginCandidate(m, shifted)
    return index_twisted(
        SpincData.standard(m), gamma_minus_one_power(m - 2), aroof_of(candidate)
    )


def mod24_check(m: int, b_values: Iterable[int]) -> VerificationReport:
    """
    校验 “指标为整数 ⇔ b ≡ m+1 mod 24”

    Raises:
        DimensionTooSmall: m < 3
    """
    if m < 3:
        raise DimensionTooSmall(f"mod 24 校验要求 m ≥ 3，实际 m={m}")
    b_values = sorted(set(int(b) for b in b_values))

    q_value = mod24_index(m, 0)
    independence: Dict[str, bool] = {
        "higher_classes": all(
            mod24_index(m, 0, shift) == q_value for shift in (1, -2)
        )
        if m >= 4
        else True,
    }

    integral_b: List[int] = []
    witness = {}
    affine = True
    for b in b_values:
        value = mod24_index(m, b)
        if value != q_value - Fraction(b, 24):
            affine = False
            witness.setdefault("non_affine_b", b)
            witness.setdefault("non_affine_value", value)
        is_integral = value.denominator == 1
        expected = (b - (m + 1)) % 24 == 0
        if is_integral:
            integral_b.append(b)
        if is_integral != expected and "b" not in witness:
            witness.update({"b": b, "index": value, "expected_integral": expected})
    independence["affine_in_b"] = affine

    passed = not witness and all(independence.values())
    if not passed and not witness:
        witness = {"independence": independence}
    return VerificationReport(
        check=f"mod24[m={m}]",
        status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        params={"m": m, "b_min": b_values[0] if b_values else None,
                "b_max": b_values[-1] if b_values else None, "c1": m + 1},
        witness=witness if not passed else {},
        value={
            "Q": q_value,
            "integral_b": integral_b,
            "residues": sorted({b % 24 for b in integral_b}),
            "independence": independence,
        },
    )
