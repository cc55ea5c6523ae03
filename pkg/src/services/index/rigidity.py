# src/services/index/rigidity.py
"""
刚性关系与 p1 上界

对 k = 0..⌊(m−3)/2⌋：
  ⟨Â·(e^x − e^{−x})·(e^{x/2} − e^{−x/2})^{m−3−2k}·(e^{x/2} + e^{−x/2})^{2k}, μ⟩ = 0
这些核恰好是 c = (m−1−2k)·x, V_k = γ² + (m−3−2k)·γ, W_k = 2k·γ 时
ind(∂_c ⊗ 𝒰_{V_k,W_k}) 的 q^0 积分核
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from ...algebra import TruncPoly, pair_fundamental
from ...characteristic import (
    RootBundle,
    cp_tangent_bundle,
    exp_root,
    gamma_bundle,
    spin_gamma_bundle,
    spinc_twist_index,
    twist_UVW,
)
from ...common import CheckStatus, VerificationReport
from ...common.exceptions import DimensionTooSmall, InfeasibleParams
from .indices import aroof_of, index_series
from .spinc import PontrjaginCandidate, SpincData


def relation_count(m: int) -> int:
    return max(0, (m - 1) // 2)


@lru_cache(maxsize=None)
def relation_kernels(m: int) -> Tuple[TruncPoly, ...]:
    """B_0, …, B_K；m < 3 时没有关系"""
    if m < 3:
        return ()
    half = exp_root(m, Fraction(1, 2))
    half_inv = exp_root(m, Fraction(-1, 2))
    odd = half - half_inv
    even = half + half_inv
    head = exp_root(m, 1) - exp_root(m, -1)
    return tuple(
        head * odd ** (m - 3 - 2 * k) * even ** (2 * k) for k in range(relation_count(m))
    )


def relation_bundles(m: int, k: int) -> Tuple[SpincData, RootBundle, RootBundle]:
    """第 k 个关系对应的 (Spin^c 结构, V_k, W_k)"""
    spinc = SpincData(m, m - 1 - 2 * k)
    v = gamma_bundle([(2, 0, 1), (1, 0, m - 3 - 2 * k)] if m - 3 - 2 * k else [(2, 0, 1)])
    return spinc, v, spin_gamma_bundle(2 * k)


def rigidity_relations(m: int, aroof: TruncPoly) -> List[Fraction]:
    """
    各关系的配对值，精确

    Raises:
        DimensionTooSmall: m < 3
    """
    if m < 3:
        raise DimensionTooSmall(f"刚性关系要求 m ≥ 3，实际 m={m}")
    if aroof.m != m:
        raise ValueError(f"Â 的截断次数 {aroof.m} 与 m={m} 不一致")
    return [pair_fundamental(aroof * kernel) for kernel in relation_kernels(m)]


def twist_constant_terms(m: int, aroof: TruncPoly, order: int = 0) -> List[Fraction]:
    """经由 𝒰_{V_k,W_k} 重新计算每个关系，取 q^0 系数"""
    values = []
    tangent = cp_tangent_bundle(m)
    for k in range(relation_count(m)):
        spinc, v, w = relation_bundles(m, k)
        series = index_series(spinc, twist_UVW(tangent, v, w, m, order), aroof)
        values.append(series[0])
    return values


def rigidity_check(
    m: int, aroof: Optional[TruncPoly] = None, label: str = "standard"
) -> VerificationReport:
    """标准 Â 上所有关系为零，并与扭曲级数的 q^0 系数一致"""
    if aroof is None:
        aroof = aroof_of(PontrjaginCandidate.standard(m))
    values = rigidity_relations(m, aroof)
    via_twist = twist_constant_terms(m, aroof)
    witness: Dict[str, Any] = {}
    for k, (value, twisted) in enumerate(zip(values, via_twist)):
        if value != 0:
            witness.setdefault("k", k)
            witness.setdefault("value", value)
        if value != twisted:
            witness.setdefault("twist_mismatch_k", k)
            witness.setdefault("twist_value", twisted)
    return VerificationReport(
        check=f"rigidity[m={m},{label}]",
        status=CheckStatus.FAIL if witness else CheckStatus.PASS,
        params={"m": m, "aroof": label},
        witness=witness,
        value={"relations": values},
    )


def perturbation_check(m: int, epsilon: int = 1) -> VerificationReport:
    """Â 在 x^2 处加 ε 后至少有一个关系不为零"""
    aroof = aroof_of(PontrjaginCandidate.standard(m)) + TruncPoly.monomial(m, 2, epsilon)
    values = rigidity_relations(m, aroof)
    detected = any(v != 0 for v in values)
    return VerificationReport(
        check=f"rigidity[m={m},perturbed]",
        status=CheckStatus.PASS if detected else CheckStatus.FAIL,
        params={"m": m, "epsilon": epsilon},
        witness={} if detected else {"relations": values},
        value={"relations": values},
    )


def upper_bound_relation(
    m: int, b: int, order: int, tangent_weights: Optional[List[int]] = None
) -> VerificationReport:
    """
    p1 = b·x² 时取 V = (m−1)·γ + γ²，W = (b−m−3)·γ，c = c1(V) = (m+1)·x
    在 Pin(2) 不动点 V、W 的权重为零，指标 I 为负；
    非等变级数 ind(∂_c ⊗ 𝒰_{V,W}) 不为零，二者矛盾说明 b ≤ m+1

    tangent_weights 是不动点处加倍后的切权重，默认取线性模型 (0,1,…,m) 在 p_0 处的值

    Raises:
        InfeasibleParams: b < m+3 或 b 与 m+1 奇偶性不同
    """
    if b < m + 3 or (b - m - 1) % 2:
        raise InfeasibleParams(f"上界关系要求 b ≥ m+3 且 b ≡ m+1 mod 2: m={m}, b={b}")
    v = gamma_bundle([(1, 0, m - 1), (2, 0, 1)] if m > 1 else [(2, 0, 1)])
    w = spin_gamma_bundle(b - m - 3)

    # p1 按根的平方和计：V 贡献 (m−1) + 4，W 贡献 b−m−3
    p1_twist = sum(s.multiplicity * s.root**2 for s in v.summands) + (b - m - 3)

    if tangent_weights is None:
        tangent_weights = [2 * j for j in range(1, m + 1)]
    index_i = spinc_twist_index(
        [(0, s.multiplicity) for s in v.summands], [(0, b - m - 3)], tangent_weights
    )

    aroof = aroof_of(PontrjaginCandidate.standard(m, p1=b))
    series = index_series(
        SpincData.standard(m), twist_UVW(cp_tangent_bundle(m), v, w, m, order), aroof
    )
    first = series.first_nonzero()
    passed = p1_twist == b and index_i < 0 and first is not None
    witness: Dict[str, Any] = {}
    if not passed:
        witness = {"p1_twist": p1_twist, "index_I": index_i, "series": series}
    return VerificationReport(
        check=f"upper-bound[m={m},b={b}]",
        status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        params={"m": m, "b": b, "q_order": order},
        witness=witness,
        value={
            "index_I": index_i,
            "first_nonzero_order": first,
            "first_nonzero": series[first] if first is not None else None,
        },
    )
