# src/services/jacobi/scan.py
"""
孤立不动点局部数据 ν_Y(τ, z) 的数值求值与实轴极点扫描

ν_Y = ε_Y · e^{πi(l_Y − Σs)z} · ∏ Φ(τ, s·z) / ∏ Φ(τ, m·z)，权重为加倍后的存储值
单项在 z = j/m 处有极点，求和后应当抵消
"""

import os
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ...characteristic import LineSummand
from ...common import CheckStatus, VerificationReport
from ...common.exceptions import CancellationFailure
from ...utils import debug, warning
from ..lefschetz import FixedComponent, FixedPointData, VAssignment, lefschetz_sum
from .phi import ModularPoint, NumericPolicy, phi_grid

GOLDEN_OFFSET = 0.6180339887
REFINEMENT_POINTS = 9
MAX_EXACT_ORDER = 8


def nu_grid(
    component: FixedComponent,
    v_roots: Sequence[LineSummand],
    tau: complex,
    zs: np.ndarray,
    policy: NumericPolicy,
) -> np.ndarray:
    """在一组 z 上求孤立分支的 ν_Y"""
    if not component.is_isolated:
        raise ValueError("数值局部数据只对孤立不动点定义")
    zs = np.asarray(zs, dtype=complex)
    exponent = component.spinc_weight - sum(s.multiplicity * s.weight for s in v_roots)
    values = component.orientation * np.exp(1j * np.pi * exponent * zs)
    for s in v_roots:
        values = values * phi_grid(tau, s.weight * zs, policy) ** s.multiplicity
    for s in component.normal:
        values = values / phi_grid(tau, s.weight * zs, policy) ** s.multiplicity
    return values


def nu_numeric(
    component: FixedComponent,
    v_roots: Sequence[LineSummand],
    point: ModularPoint,
    policy: NumericPolicy,
) -> complex:
    return complex(nu_grid(component, v_roots, point.tau, np.array([point.z]), policy)[0])


def scan_grid(points: int) -> np.ndarray:
    """z_k = (k + 0.618…)/points，避开分母较小的有理点"""
    return (np.arange(points) + GOLDEN_OFFSET) / points


def refine_grid(grid: np.ndarray, points: int) -> np.ndarray:
    """每对相邻采样点之间插入 9 个点"""
    step = 1.0 / points / (REFINEMENT_POINTS + 1)
    offsets = step * np.arange(REFINEMENT_POINTS + 1)
    return np.sort((grid[:, None] + offsets[None, :]).ravel())


def exact_order(tau: complex, policy: NumericPolicy) -> int:
    """精确 q 级数的截断阶：|q|^{N+1} 低于交叉校验容差的百分之一"""
    abs_q = abs(np.exp(2j * np.pi * tau))
    n = 0
    while n < MAX_EXACT_ORDER and abs_q ** (n + 1) > policy.cross_check_tolerance * 1e-2:
        n += 1
    return n


def _sum_chunk(
    data: FixedPointData, v: VAssignment, tau: complex, zs: np.ndarray, policy: NumericPolicy
) -> Tuple[np.ndarray, float]:
    total = np.zeros(len(zs), dtype=complex)
    worst_term = 0.0
    for component in data.components:
        term = nu_grid(component, v.restrict(component), tau, zs, policy)
        worst_term = max(worst_term, float(np.max(np.abs(term))))
        total = total + term
    return total, worst_term


def _evaluate_exact(polynomials: List[Any], tau: complex, zs: np.ndarray) -> np.ndarray:
    q = complex(np.exp(2j * np.pi * tau))
    lam = np.exp(2j * np.pi * np.asarray(zs, dtype=complex))
    values = np.zeros(len(lam), dtype=complex)
    for n, poly in enumerate(polynomials):
        for exponent, coeff in poly:
            values = values + float(coeff) * lam**exponent * q**n
    return values


def real_line_pole_scan(
    data: FixedPointData,
    tau: complex,
    points: int,
    policy: NumericPolicy,
    v: Optional[VAssignment] = None,
    strict: bool = False,
    mapper: Optional[Callable] = None,
    chunks: int = 1,
    label: str = "",
) -> Tuple[VerificationReport, np.ndarray]:
    """
    实轴扫描：粗网格与加密网格上 Σ_Y ν_Y 的最大模长应当稳定，
    并与精确 Lefschetz 和在 λ = e^{2πiz} 处的取值一致

    返回 (报告, 加密网格上的 [z, re, im, abs] 行)

    Raises:
        CancellationFailure: strict=True 且加密后最大模长增长超过阈值
    """
    if v is None:
        v = VAssignment()
    if mapper is None:
        mapper = lambda fn, items: [fn(item) for item in items]  # noqa: E731
    if complex(tau).imag <= 0:
        raise ValueError(f"τ 必须在上半平面: {tau}")
    if not data.is_linear_isolated:
        raise ValueError("实轴扫描只支持全部为孤立不动点的数据")

    coarse = scan_grid(points)
    fine = refine_grid(coarse, points)

    def evaluate(zs: np.ndarray) -> Tuple[np.ndarray, float]:
        parts = mapper(
            lambda chunk: _sum_chunk(data, v, tau, chunk, policy),
            np.array_split(zs, max(1, chunks)),
        )
        values = np.concatenate([p[0] for p in parts])
        return values, max(p[1] for p in parts)

    coarse_values, coarse_term = evaluate(coarse)
    fine_values, fine_term = evaluate(fine)
    coarse_max = float(np.max(np.abs(coarse_values)))
    fine_max = float(np.max(np.abs(fine_values)))
    growth_limit = coarse_max * (1 + policy.refinement_growth) + policy.tolerance
    stable = fine_max <= growth_limit

    order = exact_order(tau, policy)
    _, exact_report = lefschetz_sum(data, v=v, order=order, label=label)
    polynomials = exact_report.value["coefficients"]
    witness: Dict[str, Any] = {}
    deviation = None
    if len(polynomials) == order + 1:
        exact_values = _evaluate_exact(polynomials, tau, fine)
        scale = np.maximum(1.0, np.abs(exact_values))
        deviation = float(np.max(np.abs(fine_values - exact_values) / scale))
        if deviation > policy.cross_check_tolerance:
            worst = int(np.argmax(np.abs(fine_values - exact_values) / scale))
            witness = {
                "z": float(fine[worst]),
                "numeric": complex(fine_values[worst]),
                "exact": complex(exact_values[worst]),
                "deviation": deviation,
            }
    else:
        witness = {"exact": "精确局部项之和未约化为 Laurent 多项式", "report": exact_report.to_dict()}

    if not stable:
        message = f"加密后最大模长 {fine_max:.6e} 超过 {growth_limit:.6e}"
        if strict:
            raise CancellationFailure(message)
        warning(f"⚠️ {message}")
        worst = int(np.argmax(np.abs(fine_values)))
        witness = {**witness, "z": float(fine[worst]), "fine_max": fine_max, "coarse_max": coarse_max}

    debug(f"实轴扫描完成: {len(fine)} 个点, 最大模长 {fine_max:.6e}")
    rows = np.column_stack(
        [fine, fine_values.real, fine_values.imag, np.abs(fine_values)]
    )
    report = VerificationReport(
        check=f"pole-scan[{label or f'm={data.m}'}]",
        status=CheckStatus.FAIL if witness else CheckStatus.NUMERIC_PASS,
        params={"m": data.m, "tau": complex(tau), "points": points, "q_order": order, "V": v},
        witness=witness,
        value={
            "coarse_max": coarse_max,
            "fine_max": fine_max,
            "max_single_term": max(coarse_term, fine_term),
            "exact_deviation": deviation,
        },
    )
    return report, rows


def write_scan_csv(rows: np.ndarray, path: str) -> str:
    """列为 z, re, im, abs"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    np.savetxt(path, rows, delimiter=",", header="z,re,im,abs", comments="", fmt="%.17g")
    return path
