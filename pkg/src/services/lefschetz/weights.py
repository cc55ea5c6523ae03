# src/services/lefschetz/weights.py
"""
权重层面的障碍：(∗) 恒等式、Jacobi 指标 I_Y、n < m 界所用的 V 与证明链
存储权重均已加倍，平方和因而是未加倍值的 4 倍
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from ...characteristic import (
    LineSummand,
    gamma_bundle,
    jacobi_index_from_weights,
    spinc_twist_index,
)
from ...common import CheckStatus, VerificationReport
from ...common.exceptions import InvalidFixedPointData
from .model import FixedComponent, FixedPointData, VAssignment


def star_value(component: FixedComponent, n: int) -> int:
    """C_Y = Σ m_{Y,i}² + n·a_Y²（加倍后的权重）"""
    return sum(w * w for w in component.normal_weights) + n * component.gamma_weight**2


def star_invariant(data: FixedPointData, label: str = "") -> VerificationReport:
    """(∗)：C_Y 与分支无关"""
    values = [star_value(c, data.n) for c in data.components]
    witness: Dict[str, Any] = {}
    for index, value in enumerate(values):
        if value != values[0]:
            witness = {
                "component": index,
                "value": value,
                "reference": values[0],
                "gamma_weight": data.components[index].gamma_weight // 2,
            }
            break
    return VerificationReport(
        check=f"star[{label or f'm={data.m}'}]",
        status=CheckStatus.FAIL if witness else CheckStatus.PASS,
        params={"m": data.m, "n": data.n, "gamma_weights": [a // 2 for a in data.gamma_weights]},
        witness=witness,
        value={"C": values[0] if not witness else values, "C_raw": Fraction(values[0], 4)},
    )


def jacobi_index_IY(component: FixedComponent, v_roots: Sequence[LineSummand] = ()) -> int:
    """
    I_Y = ½(Σ ŝ² − Σ m̂²)，ŝ、m̂ 为未加倍的权重

    Raises:
        NonIntegralIndex: 权重约定有误
    """
    return jacobi_index_from_weights(
        [(s.weight, s.multiplicity) for s in v_roots], component.normal_weights
    )


def build_bound_V(data: FixedPointData) -> VAssignment:
    """
    V = d(Y_0)·γ + Σ_{i≥1} (d(Y_i)+1)·γ⊗λ^{−a_{Y_i}}
    构造后检查 n(V|Y_0) = d(Y_0)，n(V|Y_i) = d(Y_i)+1

    Raises:
        MissingNormalization: a_{Y_0} ≠ 0
    """
    data.require_normalized()
    first = data.components[0]
    terms = [(1, 0, first.d)] if first.d else []
    terms += [(1, -c.gamma_weight, c.d + 1) for c in data.components[1:]]
    v = VAssignment(gamma_bundle(terms))

    ranks = [v.fixed_rank(c) for c in data.components]
    expected = [first.d] + [c.d + 1 for c in data.components[1:]]
    if ranks != expected:
        raise InvalidFixedPointData(f"V 的不动子丛维数 {ranks} 与预期 {expected} 不符")
    return v


def vanishing_assignment(data: FixedPointData) -> VAssignment:
    """V = Σ_Y (d(Y)+1)·γ⊗λ^{−a_Y}：每个分支上 n(V|Y) > d(Y)"""
    return VAssignment(
        gamma_bundle([(1, -c.gamma_weight, c.d + 1) for c in data.components])
    )


def twist_index_constancy(
    data: FixedPointData, v: VAssignment, w: VAssignment, label: str = ""
) -> VerificationReport:
    """𝒰_{V,W} 的指标 ½(Σŝ² + Σt̂² − Σm̂²) 在各分支上是否相同"""
    values: List[Fraction] = []
    for component in data.components:
        values.append(
            spinc_twist_index(
                [(s.weight, s.multiplicity) for s in v.restrict(component)],
                [(s.weight, s.multiplicity) for s in w.restrict(component)],
                component.normal_weights,
            )
        )
    witness: Dict[str, Any] = {}
    if len(set(values)) > 1:
        index = next(i for i, value in enumerate(values) if value != values[0])
        witness = {"component": index, "value": values[index], "reference": values[0]}
    return VerificationReport(
        check=f"twist-index[{label or f'm={data.m}'}]",
        status=CheckStatus.FAIL if witness else CheckStatus.PASS,
        params={"m": data.m, "V": v, "W": w},
        witness=witness,
        value={"indices": values},
    )


def _petrie_target(data: FixedPointData) -> int:
    """a_Z² 最大的分支下标（并列时取第一个）"""
    squares = [c.gamma_weight**2 for c in data.components]
    return squares.index(max(squares))


def petrie_bound_report(data: FixedPointData, label: str = "") -> VerificationReport:
    """
    n < m 的证明链：
      Σ m_Z² + n·a_Z² ≤ Σ_{i≥1}(d_i+1)·a_i² ≤ a_Z²·Σ_{i≥1}(d_i+1) ≤ m·a_Z²
    第一个不等号来自 I_{Y_0} ≥ 0 与 (∗)
    """
    data.require_normalized()
    y0 = data.components[0]
    others = data.components[1:]
    v = build_bound_V(data)

    # 合成数据不保证整性，这里按有理数计算
    index_y0 = spinc_twist_index(
        [(s.weight, s.multiplicity) for s in v.restrict(y0)], [], y0.normal_weights
    )

    z_index = _petrie_target(data)
    z = data.components[z_index]
    a_z2 = z.gamma_weight**2
    sum_mz = sum(w * w for w in z.normal_weights)
    lhs = sum_mz + data.n * a_z2
    rhs = sum((c.d + 1) * c.gamma_weight**2 for c in others)
    rank_others = sum(c.d + 1 for c in others)
    bound_rank = a_z2 * rank_others
    bound_m = data.m * a_z2

    star_consistent = lhs == sum(w * w for w in y0.normal_weights)
    chain = {
        "lhs_le_rhs": lhs <= rhs,
        "rhs_le_rank_bound": rhs <= bound_rank,
        "rank_bound_le_m_bound": bound_rank <= bound_m,
    }
    implied_n_max: Optional[Fraction] = None
    if a_z2:
        implied_n_max = Fraction(rhs - sum_mz, a_z2)

    nonnegative_index = index_y0 >= 0
    consistent = star_consistent and chain["rhs_le_rank_bound"] and chain["rank_bound_le_m_bound"]
    if nonnegative_index:
        consistent = consistent and chain["lhs_le_rhs"]
    passed = consistent and (not nonnegative_index or data.n < data.m)

    witness: Dict[str, Any] = {}
    if not passed:
        witness = {
            "star_consistent": star_consistent,
            "chain": chain,
            "index_Y0": index_y0,
            "n": data.n,
        }
    return VerificationReport(
        check=f"petrie-bound[{label or f'm={data.m},n={data.n}'}]",
        status=CheckStatus.PASS if passed else CheckStatus.FAIL,
        params={"m": data.m, "n": data.n, "gamma_weights": [a // 2 for a in data.gamma_weights]},
        witness=witness,
        value={
            "index_Y0": index_y0,
            "Z": z_index,
            "lhs": Fraction(lhs, 4),
            "rhs": Fraction(rhs, 4),
            "rank_bound": Fraction(bound_rank, 4),
            "m_bound": Fraction(bound_m, 4),
            "chain": chain,
            "star_consistent": star_consistent,
            "implied_n_max": implied_n_max,
            "hypothesis_n_nonnegative": data.n >= 0,
        },
    )
