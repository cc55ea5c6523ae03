# src/services/jacobi/laws.py
"""
Φ 与 F_Y 的变换律数值校验

每个校验返回单点的 VerificationReport，残差为 |a − b| / max(|a|, |b|)
通过阈值为 tolerance 加上参与求值的各 Φ 的尾部误差界之和
"""

from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ...algebra import pair_product
from ...characteristic import jacobi_index_from_weights, phi_series
from ...common import CheckStatus, VerificationReport
from ...common.exceptions import MatrixNotUnimodular, PoleProximity
from .phi import ModularPoint, NumericPolicy, phi_with_bound

Matrix = Tuple[int, int, int, int]

S_MATRIX: Matrix = (0, -1, 1, 0)
T_MATRIX: Matrix = (1, 1, 0, 1)
TS_MATRIX: Matrix = (1, -1, 1, 0)


def residual(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0:
        return 0.0
    return abs(a - b) / scale


def _numeric_report(
    check: str, res: float, threshold: float, params: Dict[str, Any], value: Dict[str, Any]
) -> VerificationReport:
    passed = res <= threshold
    return VerificationReport(
        check=check,
        status=CheckStatus.NUMERIC_PASS if passed else CheckStatus.FAIL,
        params=params,
        witness={} if passed else {"residual": res, "threshold": threshold, **value},
        value={"residual": res, "threshold": threshold},
    )


def _point_params(point: ModularPoint) -> Dict[str, Any]:
    return {"tau": complex(point.tau), "z": complex(point.z)}


def lattice_shift_check(
    point: ModularPoint, shift: Tuple[int, int], policy: NumericPolicy
) -> VerificationReport:
    """Φ(τ, z+ατ+β) = Φ(τ,z)·e^{−πi(α²τ+2αz)}·(−1)^{α+β}"""
    alpha, beta = shift
    tau, z = point.tau, point.z
    lhs, _, bound_l = phi_with_bound(point.with_z(z + alpha * tau + beta), policy)
    base, _, bound_r = phi_with_bound(point, policy)
    rhs = base * np.exp(-1j * np.pi * (alpha * alpha * tau + 2 * alpha * z)) * (-1) ** ((alpha + beta) % 2)
    return _numeric_report(
        f"jacobi[lattice:{alpha},{beta}]",
        residual(lhs, complex(rhs)),
        policy.tolerance + bound_l + bound_r,
        {**_point_params(point), "alpha": alpha, "beta": beta},
        {"lhs": lhs, "rhs": complex(rhs)},
    )


def _require_unimodular(matrix: Matrix) -> None:
    a, b, c, d = matrix
    if a * d - b * c != 1:
        raise MatrixNotUnimodular(f"det{matrix} = {a * d - b * c} ≠ 1")


def modular_check(
    point: ModularPoint, matrix: Matrix, policy: NumericPolicy
) -> VerificationReport:
    """
    Φ((aτ+b)/(cτ+d), z/(cτ+d)) = Φ(τ,z)·(cτ+d)^{−1}·e^{πi·cz²/(cτ+d)}

    Raises:
        MatrixNotUnimodular: det ≠ 1
    """
    _require_unimodular(matrix)
    a, b, c, d = matrix
    tau, z = point.tau, point.z
    j = c * tau + d
    image = ModularPoint((a * tau + b) / j, z / j)
    lhs, _, bound_l = phi_with_bound(image, policy)
    base, _, bound_r = phi_with_bound(point, policy)
    rhs = complex(base / j * np.exp(1j * np.pi * c * z * z / j))
    return _numeric_report(
        f"jacobi[modular:{a},{b},{c},{d}]",
        residual(lhs, rhs),
        policy.tolerance + bound_l + bound_r,
        {**_point_params(point), "matrix": list(matrix)},
        {"lhs": lhs, "rhs": rhs},
    )


def oddness_check(point: ModularPoint, policy: NumericPolicy) -> VerificationReport:
    """Φ(τ, −z) = −Φ(τ, z)"""
    plus, _, bound_p = phi_with_bound(point, policy)
    minus, _, bound_m = phi_with_bound(point.with_z(-point.z), policy)
    return _numeric_report(
        "jacobi[oddness]",
        residual(minus, -plus),
        policy.tolerance + bound_p + bound_m,
        _point_params(point),
        {"phi": plus, "phi_negated": minus},
    )


def _lattice_distance(w: complex, tau: complex) -> float:
    """w 到格 Zτ + Z 的近似距离"""
    alpha = round(w.imag / tau.imag)
    r = w - alpha * tau
    return abs(r - round(r.real))


def FY_with_bound(
    tangent_weights: Sequence[int],
    v_weights: Sequence[int],
    point: ModularPoint,
    policy: NumericPolicy,
) -> Tuple[complex, float]:
    """
    F_Y(τ,z) = ∏_{s≠0} Φ(τ, s·z) / ∏ Φ(τ, m·z)，权重为原始（未加倍）值

    Raises:
        ValueError: 分母权重中有 0
        PoleProximity: 某个 m·z 离格点太近
    """
    if any(m == 0 for m in tangent_weights):
        raise ValueError(f"切向权重不能为 0: {list(tangent_weights)}")
    tau = complex(point.tau)
    value = 1 + 0j
    bound = 0.0
    for m in tangent_weights:
        w = m * complex(point.z)
        distance = _lattice_distance(w, tau)
        if distance < policy.pole_threshold:
            raise PoleProximity(f"{m}·z = {w} 离格点距离 {distance:.3e}")
        phi, _, b = phi_with_bound(point.with_z(w), policy)
        value /= phi
        bound += b
    for s in v_weights:
        if s == 0:
            continue
        phi, _, b = phi_with_bound(point.with_z(s * complex(point.z)), policy)
        value *= phi
        bound += b
    return value, bound


def FY_eval(
    tangent_weights: Sequence[int],
    v_weights: Sequence[int],
    point: ModularPoint,
    policy: NumericPolicy,
) -> complex:
    value, _ = FY_with_bound(tangent_weights, v_weights, point, policy)
    return value


def FY_index(tangent_weights: Sequence[int], v_weights: Sequence[int]) -> int:
    """F_Y 的指标 ½(Σs² − Σm²)，与 jacobi_index_IY 同一约定"""
    return jacobi_index_from_weights(
        [(2 * s, 1) for s in v_weights if s != 0], [2 * m for m in tangent_weights]
    )


def index_law_check(
    tangent_weights: Sequence[int],
    v_weights: Sequence[int],
    point: ModularPoint,
    shift: Tuple[int, int],
    policy: NumericPolicy,
) -> VerificationReport:
    """
    F(τ, z+ατ+β) = F(τ,z)·e^{−2πi·I(α²τ+2αz)}·(−1)^{(Σs−Σm)(α+β)}

    Raises:
        NonIntegralIndex: ½(Σs² − Σm²) 不是整数
    """
    alpha, beta = shift
    index = FY_index(tangent_weights, v_weights)
    tau, z = point.tau, point.z
    lhs, bound_l = FY_with_bound(
        tangent_weights, v_weights, point.with_z(z + alpha * tau + beta), policy
    )
    base, bound_r = FY_with_bound(tangent_weights, v_weights, point, policy)
    linear = sum(v_weights) - sum(tangent_weights)
    rhs = complex(
        base
        * np.exp(-2j * np.pi * index * (alpha * alpha * tau + 2 * alpha * z))
        * (-1) ** ((linear * (alpha + beta)) % 2)
    )
    return _numeric_report(
        f"jacobi[F-index:{alpha},{beta}]",
        residual(lhs, rhs),
        policy.tolerance + bound_l + bound_r,
        {
            **_point_params(point),
            "tangent_weights": list(tangent_weights),
            "v_weights": list(v_weights),
            "index": index,
            "alpha": alpha,
            "beta": beta,
        },
        {"lhs": lhs, "rhs": rhs},
    )


def index_modular_check(
    tangent_weights: Sequence[int],
    v_weights: Sequence[int],
    point: ModularPoint,
    matrix: Matrix,
    policy: NumericPolicy,
) -> VerificationReport:
    """F(τ', z') = F(τ,z)·(cτ+d)^{−k}·e^{2πi·I·cz²/(cτ+d)}，k = #{s≠0} − #{m}"""
    _require_unimodular(matrix)
    a, b, c, d = matrix
    index = FY_index(tangent_weights, v_weights)
    weight = sum(1 for s in v_weights if s != 0) - len(tangent_weights)
    tau, z = point.tau, point.z
    j = c * tau + d
    lhs, bound_l = FY_with_bound(
        tangent_weights, v_weights, ModularPoint((a * tau + b) / j, z / j), policy
    )
    base, bound_r = FY_with_bound(tangent_weights, v_weights, point, policy)
    rhs = complex(base * j ** (-weight) * np.exp(2j * np.pi * index * c * z * z / j))
    return _numeric_report(
        f"jacobi[F-modular:{a},{b},{c},{d}]",
        residual(lhs, rhs),
        policy.tolerance + bound_l + bound_r,
        {
            **_point_params(point),
            "tangent_weights": list(tangent_weights),
            "v_weights": list(v_weights),
            "index": index,
            "matrix": list(matrix),
        },
        {"lhs": lhs, "rhs": rhs},
    )


def _majorant_tail(abs_q: float, order: int, extra: int = 64) -> float:
    """|u| = 1 时 P(u) 的系数被 ∏(1+q^n)²/(1−q^n)² 的系数控制"""
    majorant = pair_product(Fraction(-2), order + extra, -1)
    tail = 0.0
    for n in range(order + 1, order + extra + 1):
        tail += float(majorant[n]) * abs_q**n
    # 截断后剩余部分按几何级数放大
    return tail * 2


def _evaluate(coeff: Any, point: complex) -> complex:
    if hasattr(coeff, "evaluate"):
        return complex(coeff.evaluate(point))
    return complex(coeff)


def phi_cross_check(point: ModularPoint, order: int, policy: NumericPolicy) -> VerificationReport:
    """
    精确 q 级数 φ(q, λ) 在 λ = e^{2πiz} 处截断到 q^order 的值与 phi_eval 比较
    z 必须为实数
    """
    z = complex(point.z)
    if abs(z.imag) > 0:
        raise ValueError(f"交叉校验要求实数 z: {z}")
    q = point.q
    mu = complex(np.exp(1j * np.pi * z.real))
    exact_series = phi_series(2, order)
    exact = sum((_evaluate(exact_series[n], mu) * q**n for n in range(order + 1)), 0j)
    numeric, _, bound = phi_with_bound(point, policy)
    tail = abs(mu - 1 / mu) * _majorant_tail(abs(q), order)
    threshold = tail + bound * abs(numeric) + policy.tolerance
    difference = abs(exact - numeric)
    passed = difference <= threshold
    return VerificationReport(
        check="jacobi[phi-cross-check]",
        status=CheckStatus.NUMERIC_PASS if passed else CheckStatus.FAIL,
        params={**_point_params(point), "q_order": order},
        witness={} if passed else {"exact": exact, "numeric": numeric, "difference": difference},
        value={"difference": difference, "threshold": threshold, "exact_tail": tail},
    )


def aggregate(name: str, reports: List[VerificationReport]) -> VerificationReport:
    """把同类单点校验合并成一份报告：记录最大残差与第一个失败点"""
    worst = 0.0
    failures = [r for r in reports if not r.passed]
    for r in reports:
        value = r.value or {}
        worst = max(worst, float(value.get("residual", value.get("difference", 0.0))))
    witness: Dict[str, Any] = {}
    if failures:
        witness = {"failures": len(failures), "first": failures[0].to_dict()}
    return VerificationReport(
        check=name,
        status=CheckStatus.FAIL if failures else CheckStatus.NUMERIC_PASS,
        params={"samples": len(reports)},
        witness=witness,
        value={"max_residual": worst},
    )
