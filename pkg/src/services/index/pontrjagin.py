# src/services/index/pontrjagin.py
"""
由刚性关系与符号差定理反解 Pontrjagin 类

未知量是 Â 的齐次分量 A_1..A_{⌊m/2⌋}（A_j 乘 x^{2j}），
第 k 个关系只涉及 j ≤ k+1，方程组是三角的；
m 为偶数时剩下 A_{m/2} 一个自由度，由 ⟨L, μ⟩ = 1 确定
"""

from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

import sympy

from ...algebra import TruncPoly, to_fraction
from ...algebra.ring import to_sympy
from ...characteristic import pontrjagin_from_genus, signature
from ...common.exceptions import NoSolution, UnderdeterminedSystem
from ...common.states import SeriesId
from ...utils import debug
from .rigidity import relation_count, relation_kernels
from .spinc import PontrjaginCandidate

_T = sympy.Symbol("t")


def expected_signature(m: int) -> int:
    return 1 if m % 2 == 0 else 0


def relation_system(m: int) -> Tuple[sympy.Matrix, sympy.Matrix]:
    """系数矩阵与右端项：Σ_j A_j·[x^{m−2j}]B_k = −[x^m]B_k"""
    unknowns = m // 2
    rows, rhs = [], []
    for kernel in relation_kernels(m):
        rows.append(
            [to_sympy(kernel.coeffs[m - 2 * j]) for j in range(1, unknowns + 1)]
        )
        rhs.append([-to_sympy(kernel.coeffs[m])])
    return sympy.Matrix(len(rows), unknowns, sum(rows, [])), sympy.Matrix(len(rhs), 1, sum(rhs, []))


def _genus_from_components(m: int, components: Sequence[Fraction]) -> TruncPoly:
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[0] = Fraction(1)
    for j, value in enumerate(components, start=1):
        coeffs[2 * j] = value
    return TruncPoly(m, coeffs)


def _candidate(m: int, components: Sequence[Fraction]) -> PontrjaginCandidate:
    genus = _genus_from_components(m, components)
    return PontrjaginCandidate.from_total_class(pontrjagin_from_genus(SeriesId.AROOF, genus))


def _solve_relations(m: int) -> Tuple[sympy.Matrix, List[sympy.Symbol], int]:
    unknowns = m // 2
    if unknowns == 0:
        return sympy.zeros(0, 1), [], 0
    matrix, rhs = relation_system(m)
    if matrix.rows == 0:
        params = list(sympy.symbols(f"tau0:{unknowns}"))
        return sympy.Matrix(params), params, 0
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError as e:
        raise NoSolution(f"m={m} 的刚性关系无解") from e
    return solution, list(params), matrix.rank()


def reconstruct_pontrjagin(m: int) -> Tuple[PontrjaginCandidate, Dict[str, Any]]:
    """
    返回 (候选 Pontrjagin 类, 各阶段的秩报告)

    Raises:
        UnderdeterminedSystem: 施加符号差约束后仍有自由度
        NoSolution: 关系或符号差约束无解
    """
    unknowns = m // 2
    solution, params, rank = _solve_relations(m)
    stages: Dict[str, Any] = {
        "unknowns": unknowns,
        "relations": relation_count(m),
        "rank": rank,
        "after_relations": len(params),
        "signature_target": expected_signature(m),
    }
    debug(f"m={m} 刚性关系求解: 秩 {rank}, 剩余自由度 {len(params)}")

    if not params:
        components = [to_fraction(v) for v in solution]
        candidate = _candidate(m, components)
        sig = signature(candidate.total_class())
        stages["after_signature"] = 0
        stages["signature"] = sig
        if sig != expected_signature(m):
            raise NoSolution(f"m={m} 的唯一解不满足符号差 {expected_signature(m)}: {sig}")
        return candidate, stages

    if len(params) > 1 or m % 2:
        stages["after_signature"] = len(params) if m % 2 else len(params) - 1
        raise UnderdeterminedSystem(f"m={m} 剩余自由度过多: {stages}")

    (param,) = params

    def components_at(value: sympy.Rational) -> List[Fraction]:
        return [to_fraction(v.subs(param, value)) for v in solution]

    # 符号差是自由参数的多项式；多取样点插值后求有理根
    samples = [
        (sympy.Integer(t), to_sympy(signature(_candidate(m, components_at(t)).total_class())))
        for t in range(3)
    ]
    polynomial = sympy.Poly(sympy.interpolate(samples, _T) - expected_signature(m), _T)
    if polynomial.is_zero:
        stages["after_signature"] = 1
        raise UnderdeterminedSystem(f"m={m} 符号差与自由参数无关")
    roots = polynomial.ground_roots()
    if not roots:
        raise NoSolution(f"m={m} 的符号差约束无有理解")
    if len(roots) > 1:
        stages["after_signature"] = 1
        raise UnderdeterminedSystem(f"m={m} 符号差约束有多个解: {list(roots)}")
    (root,) = roots
    candidate = _candidate(m, components_at(root))
    stages["after_signature"] = 0
    stages["signature"] = signature(candidate.total_class())
    return candidate, stages
