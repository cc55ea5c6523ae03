# src/services/properties/suite.py
"""
带种子的随机性质测试：精确代数的环公理、级数求逆、有理函数约化与配对，
示性类的乘性与可加性、扭曲级数系数的整性，
以及指标可加性与逐项展开对照、刚性关系的线性叠加与 p → Â → p 往返
所有比较都是精确相等
"""

from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ...algebra import (
    LaurentPoly,
    LaurentRational,
    QSeries,
    TruncPoly,
    pair_fundamental,
    rf_eval,
    rf_reduce,
    series_invert,
)
from ...characteristic import (
    RootBundle,
    chern_character,
    cp_tangent_bundle,
    gamma_bundle,
    genus_from_pontrjagin,
    multiplicative_class,
    pontrjagin_from_components,
    pontrjagin_from_genus,
    standard_pontrjagin,
    twist_UV,
)
from ...common import CheckStatus, VerificationReport
from ...common.states import SeriesId
from ..index import SpincData, index_twisted, rigidity_relations, standard_aroof


def random_fraction(rng: np.random.Generator, bound: int = 5) -> Fraction:
    return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound)))


def random_truncpoly(rng: np.random.Generator, m: int, unit: bool = False) -> TruncPoly:
    coeffs = [random_fraction(rng) for _ in range(m + 1)]
    if unit:
        coeffs[0] = Fraction(int(rng.integers(1, 4)) * (1 if rng.integers(0, 2) else -1))
    return TruncPoly(m, coeffs)


def random_laurent(rng: np.random.Generator, span: int = 3) -> LaurentPoly:
    return LaurentPoly(
        {e: random_fraction(rng) for e in range(-span, span + 1) if rng.integers(0, 2)}
    )


def random_nonzero_laurent(rng: np.random.Generator, span: int = 3) -> LaurentPoly:
    while True:
        value = random_laurent(rng, span)
        if not value.is_zero():
            return value


def _report(
    name: str, trials: int, seed: int, witness: Optional[Dict[str, Any]], value: Any = None
) -> VerificationReport:
    return VerificationReport(
        check=f"properties[{name}]",
        status=CheckStatus.FAIL if witness else CheckStatus.PASS,
        params={"seed": seed, "trials": trials},
        witness=witness or {},
        value=value,
    )


def _first_failure(
    trials: int, draw: Callable[[], Tuple[bool, Dict[str, Any]]]
) -> Optional[Dict[str, Any]]:
    for trial in range(trials):
        ok, details = draw()
        if not ok:
            return {"trial": trial, **details}
    return None


def _ring_axioms(a: Any, b: Any, c: Any) -> Tuple[bool, Dict[str, Any]]:
    checks = {
        "add_commutative": a + b == b + a,
        "mul_commutative": a * b == b * a,
        "add_associative": (a + b) + c == a + (b + c),
        "mul_associative": (a * b) * c == a * (b * c),
        "distributive": a * (b + c) == a * b + a * c,
        "additive_inverse": (a - a).is_zero(),
    }
    failed = [name for name, ok in checks.items() if not ok]
    return not failed, {"failed": failed, "a": a, "b": b, "c": c}


def truncpoly_ring_axioms(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    def draw():
        m = int(rng.integers(0, 7))
        return _ring_axioms(*(random_truncpoly(rng, m) for _ in range(3)))

    return _report("truncpoly-ring", trials, seed, _first_failure(trials, draw))


def laurent_ring_axioms(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    def draw():
        return _ring_axioms(*(random_laurent(rng) for _ in range(3)))

    return _report("laurent-ring", trials, seed, _first_failure(trials, draw))


def truncpoly_inverse(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    def draw():
        m = int(rng.integers(0, 7))
        a = random_truncpoly(rng, m, unit=True)
        product = a * a.inverse()
        return product == TruncPoly.one(m), {"a": a, "product": product}

    return _report("truncpoly-inverse", trials, seed, _first_failure(trials, draw))


def series_invert_roundtrip(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    def draw():
        order = int(rng.integers(0, 9))
        coeffs = [random_fraction(rng) for _ in range(order + 1)]
        coeffs[0] = Fraction(int(rng.integers(1, 5)))
        a = QSeries(coeffs, order)
        product = a * series_invert(a)
        return product == QSeries.constant(Fraction(1), order), {"a": a, "product": product}

    return _report("series-invert", trials, seed, _first_failure(trials, draw))


def _sample_points(
    rng: np.random.Generator, count: int, avoid: Callable[[Fraction], bool]
) -> List[Fraction]:
    points: List[Fraction] = []
    while len(points) < count:
        point = random_fraction(rng, 7)
        if point != 0 and point not in points and not avoid(point):
            points.append(point)
    return points


def rf_reduce_canonical(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """约化结果再约化不变，且在 10 个非极点有理点上值不变"""

    def draw():
        common = random_nonzero_laurent(rng)
        num = random_laurent(rng) * common
        den = random_nonzero_laurent(rng) * common
        once = rf_reduce(LaurentRational(num, den))
        twice = rf_reduce(LaurentRational(once.num, once.den))
        if once.num != twice.num or once.den != twice.den:
            return False, {"num": num, "den": den, "once": once, "twice": twice}
        for point in _sample_points(rng, 10, lambda p: den.evaluate(p) == 0):
            expected = num.evaluate(point) / den.evaluate(point)
            actual = rf_eval(once, point)
            if actual != expected:
                return False, {
                    "num": num, "den": den, "point": point, "expected": expected, "actual": actual
                }
        return True, {}

    return _report("rf-reduce", trials, seed, _first_failure(trials, draw))


def pair_fundamental_linear(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """配对线性，且在次数 < m 的单项上为零"""

    def draw():
        m = int(rng.integers(1, 9))
        a, b = random_truncpoly(rng, m), random_truncpoly(rng, m)
        r, s = random_fraction(rng), random_fraction(rng)
        combined = pair_fundamental(a * r + b * s)
        linear = combined == r * pair_fundamental(a) + s * pair_fundamental(b)
        low = [k for k in range(m) if pair_fundamental(TruncPoly.monomial(m, k, r)) != 0]
        return linear and not low, {"m": m, "a": a, "b": b, "r": r, "s": s, "nonzero_low": low}

    return _report("pair-fundamental", trials, seed, _first_failure(trials, draw))


def index_additivity(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """ind(V ⊕ W) = ind(V) + ind(W)"""

    def draw():
        m = int(rng.integers(1, 8))
        spinc = SpincData(m, m + 1 - 2 * int(rng.integers(-2, 3)))
        terms_v = [(int(rng.integers(-3, 4)), 0, int(rng.integers(1, 4)))]
        terms_w = [(int(rng.integers(-3, 4)), 0, int(rng.integers(1, 4)))]
        v, w = gamma_bundle(terms_v), gamma_bundle(terms_w)
        total = index_twisted(spinc, gamma_bundle(terms_v + terms_w))
        parts = index_twisted(spinc, v) + index_twisted(spinc, w)
        return total == parts, {"m": m, "c1": spinc.c1, "V": terms_v, "W": terms_w}

    return _report("index-additivity", trials, seed, _first_failure(trials, draw))


def _exp_series(m: int, root: Fraction) -> TruncPoly:
    return TruncPoly(m, [root**k / factorial(k) for k in range(m + 1)])


def index_expansion_oracle(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """与逐项展开对照：e^{c/2}、Â(由 (1+x²)^{m+1})、ch(V) 三个因子直接相乘取 x^m"""

    def draw():
        m = int(rng.integers(1, 8))
        spinc = SpincData(m, m + 1 - 2 * int(rng.integers(-2, 3)))
        terms = [
            (int(rng.integers(-3, 4)), 0, int(rng.choice([-2, -1, 1, 2, 3])))
            for _ in range(int(rng.integers(1, 4)))
        ]
        ch = TruncPoly.zero(m)
        for root, _, mult in terms:
            ch = ch + _exp_series(m, Fraction(root)) * mult
        aroof = genus_from_pontrjagin(SeriesId.AROOF, standard_pontrjagin(m))
        expected = pair_fundamental(_exp_series(m, Fraction(spinc.c1, 2)) * aroof * ch)
        actual = index_twisted(spinc, gamma_bundle(terms))
        return actual == expected, {
            "m": m, "c1": spinc.c1, "V": terms, "expected": expected, "actual": actual
        }

    return _report("index-oracle", trials, seed, _first_failure(trials, draw))


def _random_pairs(rng: np.random.Generator) -> RootBundle:
    return RootBundle.paired(
        [
            (int(rng.integers(-3, 4)), 0, int(rng.integers(1, 4)))
            for _ in range(int(rng.integers(1, 4)))
        ]
    )


def multiplicative_class_sum(
    rng: np.random.Generator, seed: int, trials: int
) -> VerificationReport:
    """class(A ⊕ B) = class(A)·class(B)，Â 与 L 两种级数"""

    def draw():
        m = int(rng.integers(1, 9))
        a, b = _random_pairs(rng), _random_pairs(rng)
        failed = [
            series_id.value
            for series_id in (SeriesId.AROOF, SeriesId.L)
            if multiplicative_class(series_id, a.direct_sum(b), m)
            != multiplicative_class(series_id, a, m) * multiplicative_class(series_id, b, m)
        ]
        return not failed, {"m": m, "A": a.to_json(), "B": b.to_json(), "failed": failed}

    return _report("multiplicative-class", trials, seed, _first_failure(trials, draw))


def chern_character_laws(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """ch 对 ⊕ 可加，对线丛的 ⊗ 可乘（含等变权重）"""

    def draw():
        m = int(rng.integers(1, 8))
        equivariant = bool(rng.integers(0, 2))
        (r1, w1), (r2, w2) = [
            (int(rng.integers(-3, 4)), 2 * int(rng.integers(-2, 3))) for _ in range(2)
        ]
        first, second = gamma_bundle([(r1, w1, 1)]), gamma_bundle([(r2, w2, 1)])
        additive = chern_character(first.direct_sum(second), m, equivariant) == (
            chern_character(first, m, equivariant) + chern_character(second, m, equivariant)
        )
        multiplicative = chern_character(gamma_bundle([(r1 + r2, w1 + w2, 1)]), m, equivariant) == (
            chern_character(first, m, equivariant) * chern_character(second, m, equivariant)
        )
        return additive and multiplicative, {
            "m": m,
            "equivariant": equivariant,
            "summands": [(r1, w1), (r2, w2)],
            "additive": additive,
            "multiplicative": multiplicative,
        }

    return _report("chern-character", trials, seed, _first_failure(trials, draw))


def twist_integrality(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """𝒰_V 每个 q 系数乘以 k! 后 x^k 系数为整数"""

    def draw():
        m = int(rng.integers(1, 6))
        order = int(rng.integers(0, 4))
        terms = [
            (int(rng.integers(-2, 3)), 0, int(rng.integers(1, 3)))
            for _ in range(int(rng.integers(0, 3)))
        ]
        series = twist_UV(cp_tangent_bundle(m), gamma_bundle(terms), m, order)
        for n, coeff in enumerate(series.coeffs):
            for k, value in enumerate(coeff.coeffs):
                if (value * factorial(k)).denominator != 1:
                    return False, {"m": m, "V": terms, "q_order": n, "degree": k, "value": value}
        return True, {}

    return _report("twist-integrality", trials, seed, _first_failure(trials, draw))


def _even_truncpoly(rng: np.random.Generator, m: int) -> TruncPoly:
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[0] = Fraction(1)
    for k in range(2, m + 1, 2):
        coeffs[k] = random_fraction(rng)
    return TruncPoly(m, coeffs)


def rigidity_superposition(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """关系对 Â 线性：R(a·A + b·B) = a·R(A) + b·R(B)"""

    def draw():
        m = int(rng.integers(3, 10))
        a, b = random_fraction(rng), random_fraction(rng)
        first = standard_aroof(m)
        second = _even_truncpoly(rng, m)
        combined = rigidity_relations(m, first * a + second * b)
        split = [
            a * x + b * y
            for x, y in zip(rigidity_relations(m, first), rigidity_relations(m, second))
        ]
        return combined == split, {"m": m, "a": a, "b": b, "combined": combined, "split": split}

    return _report("rigidity-superposition", trials, seed, _first_failure(trials, draw))


def pontrjagin_roundtrip(rng: np.random.Generator, seed: int, trials: int) -> VerificationReport:
    """p → Â → p 与 p → L → p"""

    def draw():
        m = int(rng.integers(2, 11))
        components = [random_fraction(rng, 9) for _ in range(m // 2)]
        p = pontrjagin_from_components(m, components)
        failed = [
            series_id.value
            for series_id in (SeriesId.AROOF, SeriesId.L)
            if pontrjagin_from_genus(series_id, genus_from_pontrjagin(series_id, p)) != p
        ]
        return not failed, {"m": m, "p": components, "failed": failed}

    return _report("pontrjagin-roundtrip", trials, seed, _first_failure(trials, draw))


PROPERTY_SUITE: Tuple[Tuple[str, Callable[..., VerificationReport]], ...] = (
    ("truncpoly-ring", truncpoly_ring_axioms),
    ("laurent-ring", laurent_ring_axioms),
    ("truncpoly-inverse", truncpoly_inverse),
    ("series-invert", series_invert_roundtrip),
    ("rf-reduce", rf_reduce_canonical),
    ("pair-fundamental", pair_fundamental_linear),
    ("index-additivity", index_additivity),
    ("index-oracle", index_expansion_oracle),
    ("multiplicative-class", multiplicative_class_sum),
    ("chern-character", chern_character_laws),
    ("twist-integrality", twist_integrality),
    ("rigidity-superposition", rigidity_superposition),
    ("pontrjagin-roundtrip", pontrjagin_roundtrip),
)


def run_properties(seed: int, trials: int = 20) -> List[VerificationReport]:
    """每个性质用独立派生的生成器，互不影响抽样序列"""
    children = np.random.SeedSequence(seed).spawn(len(PROPERTY_SUITE))
    return [
        check(np.random.default_rng(child), seed, trials)
        for (_, check), child in zip(PROPERTY_SUITE, children)
    ]
