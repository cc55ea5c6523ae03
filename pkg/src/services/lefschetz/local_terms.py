# src/services/lefschetz/local_terms.py
"""
Lefschetz 局部项 ν̃_Y(q, λ) = ⟨A(q, λ), μ_Y⟩

A = e^{(c − Σv_j)/2}·λ^{(l_Y − Σs_j)/2}
    · ∏_{TY} x_i/φ(q, e^{x_i}) · ∏_{N(Y)} 1/φ(q, e^{x_i}λ^{m_i}) · ∏_V φ(q, e^{v_j}λ^{s_j})

φ(q, u) = (u^{1/2} − u^{−1/2})·P(u) 拆成前因子 K（含 q^0 部分，系数为有理函数）
与 q 部分 S = ∏ P^{±1}（系数为 Laurent 多项式）
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ...algebra import (
    LaurentPoly,
    LaurentRational,
    QSeries,
    TruncPoly,
    pair_fundamental,
    pair_product,
    rf_eval,
)
from ...characteristic import (
    LineSummand,
    cp_tangent_bundle,
    exp_root,
    multiplicative_class,
    twist_UV,
)
from ...characteristic.classes import equivariant_exp
from ...common import CheckStatus, VerificationReport
from ...common.exceptions import OddHalfWeight, PoleSurvivesReduction
from ...common.states import SeriesId
from ...utils import debug, warning
from ..index import SpincData, index_series
from .model import FixedComponent, FixedPointData, VAssignment


@dataclass(frozen=True)
class LocalTerm:
    """integrand: A 的各 q 系数；paired: 与 μ_Y 的配对"""

    integrand: QSeries
    paired: QSeries


@lru_cache(maxsize=None)
def _pair_factor(root: int, weight: int, d: int, order: int) -> QSeries:
    """P(e^{r·x}λ^w)，系数在 Q[λ^{±1}][x]/(x^{d+1})"""
    summand = LineSummand(root, weight)
    s = equivariant_exp(d, summand) + equivariant_exp(d, summand, -1)
    return pair_product(s, order, -1)


def _half_difference(d: int, summand: LineSummand) -> TruncPoly:
    """u^{1/2} − u^{−1/2}，u = e^{r·x}λ^w"""
    if summand.weight % 2:
        raise OddHalfWeight(f"权重 {summand.weight} 的一半不是整数")
    half = summand.weight // 2
    r = Fraction(summand.root, 2)
    return exp_root(d, r) * LaurentPoly.monomial(half) - exp_root(d, -r) * LaurentPoly.monomial(-half)


def _to_rational(a: TruncPoly) -> TruncPoly:
    return a.map(LaurentRational.from_poly)


def q_part(component: FixedComponent, v_roots: Sequence[LineSummand], order: int) -> QSeries:
    """S = ∏_V P^{mult} · ∏_{TY ∪ N(Y)} P^{−mult}"""
    d = component.d
    series = QSeries.constant(TruncPoly.one(d), order)
    for s in v_roots:
        series = series * _pair_factor(s.root, s.weight, d, order) ** s.multiplicity
    for s in component.tangent.positive_roots():
        if s.root == 0 and s.weight == 0:
            continue
        series = series * _pair_factor(s.root, s.weight, d, order) ** (-s.multiplicity)
    for s in component.normal:
        series = series * _pair_factor(s.root, s.weight, d, order) ** (-s.multiplicity)
    return series


def prefactor(
    component: FixedComponent, spinc: SpincData, v_roots: Sequence[LineSummand]
) -> TruncPoly:
    """K：定向、λ 与 e^{x} 前因子、Â 因子及各 φ 的 q^0 部分"""
    d = component.d
    lam_exp = component.spinc_weight - sum(s.multiplicity * s.weight for s in v_roots)
    if lam_exp % 2:
        raise OddHalfWeight(f"λ 前因子指数 {lam_exp}/2 不是整数")
    x_coeff = Fraction(spinc.c1 - sum(s.multiplicity * s.root for s in v_roots), 2)

    base = exp_root(d, x_coeff) * LaurentPoly.monomial(lam_exp // 2, component.orientation)
    base = base * multiplicative_class(SeriesId.AROOF, component.tangent, d)

    numerator = TruncPoly.one(d)
    for s in v_roots:
        factor = _half_difference(d, s)
        if s.multiplicity > 0:
            numerator = numerator * factor**s.multiplicity
    if numerator.is_zero():
        return _to_rational(TruncPoly.zero(d))

    result = _to_rational(base * numerator)
    for s in v_roots:
        if s.multiplicity < 0:
            result = result * _to_rational(_half_difference(d, s)).inverse() ** (-s.multiplicity)
    for s in component.normal:
        result = result * _to_rational(_half_difference(d, s)).inverse() ** s.multiplicity
    return result


def local_term(
    component: FixedComponent,
    spinc: SpincData,
    order: int,
    v_roots: Sequence[LineSummand] = (),
) -> LocalTerm:
    """
    单个分支的局部项，逐 q 阶精确

    Raises:
        ZeroNormalWeight: 构造分支时已检查
    """
    if component.d > spinc.m:
        raise ValueError(f"分支维数 {component.d} 超过 m={spinc.m}")
    k = prefactor(component, spinc, v_roots)
    if k.is_zero():
        zero = LaurentRational.from_poly(LaurentPoly.zero())
        zero_poly = _to_rational(TruncPoly.zero(component.d))
        return LocalTerm(QSeries.constant(zero_poly, order), QSeries.constant(zero, order))
    s = q_part(component, v_roots, order)
    integrand = s.map(lambda coeff: coeff * k)
    return LocalTerm(integrand, integrand.map(pair_fundamental))


def _equivariant_sum(
    data: FixedPointData,
    spinc: SpincData,
    v: VAssignment,
    order: int,
    mapper,
) -> QSeries:
    terms = mapper(
        lambda component: local_term(component, spinc, order, v.restrict(component)).paired,
        data.components,
    )
    # 确定性的顺序归约
    total = QSeries.constant(LaurentRational.from_poly(LaurentPoly.zero()), order)
    for term in terms:
        total = total + term
    return total


def lefschetz_sum(
    data: FixedPointData,
    spinc: Optional[SpincData] = None,
    v: Optional[VAssignment] = None,
    order: int = 4,
    strict: bool = False,
    mapper=None,
    label: str = "",
) -> Tuple[QSeries, VerificationReport]:
    """
    Σ_Y ν̃_Y，并校验：
      (a) 每个 q 系数约化后分母为 1
      (b) λ=1 处的值与非等变 index_series 逐项相等

    Raises:
        PoleSurvivesReduction: strict=True 且某个系数仍有极点
    """
    if spinc is None:
        spinc = SpincData(data.m, data.spinc_c1)
    if v is None:
        v = VAssignment()
    if mapper is None:
        mapper = lambda fn, items: [fn(item) for item in items]  # noqa: E731

    total = _equivariant_sum(data, spinc, v, order, mapper)

    witness: Dict[str, Any] = {}
    polynomials: List[Any] = []
    for n, coeff in enumerate(total.coeffs):
        if not coeff.is_polynomial():
            message = f"q^{n} 系数约化后仍有极点: {coeff}"
            if strict:
                raise PoleSurvivesReduction(message)
            warning(f"⚠️ {message}")
            witness = {"order": n, "coefficient": coeff}
            break
        polynomials.append(coeff.as_polynomial())

    expected = index_series(spinc, twist_UV(cp_tangent_bundle(data.m), v.bundle, data.m, order))
    at_one: List[Fraction] = []
    if not witness:
        for n, coeff in enumerate(total.coeffs):
            value = rf_eval(coeff, 1)
            at_one.append(value)
            if value != expected[n]:
                witness = {"order": n, "at_lambda_1": value, "index_series": expected[n]}
                break
    debug(f"Lefschetz 求和完成: m={data.m}, 阶数 {order}, 分支数 {len(data.components)}")

    report = VerificationReport(
        check=f"lefschetz[{label or f'm={data.m}'}]",
        status=CheckStatus.FAIL if witness else CheckStatus.PASS,
        params={
            "m": data.m,
            "c1": spinc.c1,
            "q_order": order,
            "gamma_weights": [a // 2 for a in data.gamma_weights],
            "V": v,
        },
        witness=witness,
        value={"coefficients": polynomials, "at_lambda_1": at_one, "index_series": expected},
    )
    return total, report


def vanishing_report(
    data: FixedPointData, spinc: SpincData, v: VAssignment, order: int, label: str = ""
) -> VerificationReport:
    """n(V|Y) > d(Y) 的分支，其配对局部项在每个 q 阶都恒为 0"""
    witness: Dict[str, Any] = {}
    checked = 0
    for index, component in enumerate(data.components):
        if v.fixed_rank(component) <= component.d:
            continue
        checked += 1
        term = local_term(component, spinc, order, v.restrict(component)).paired
        first = term.first_nonzero()
        if first is not None:
            witness = {"component": index, "order": first, "coefficient": term[first]}
            break
    return VerificationReport(
        check=f"vanishing[{label or f'm={data.m}'}]",
        status=CheckStatus.FAIL if witness else CheckStatus.PASS,
        params={"m": data.m, "q_order": order, "V": v},
        witness=witness,
        value={"components_checked": checked},
    )
