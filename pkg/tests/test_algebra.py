from fractions import Fraction

import pytest

from src.algebra import (
    LaurentPoly,
    LaurentRational,
    QSeries,
    TruncPoly,
    apply_series,
    exp_nilpotent,
    log_unipotent,
    pair_fundamental,
    pair_product,
    rf_eval,
    rf_reduce,
    series_invert,
)
from src.common.exceptions import (
    NonNilpotentInput,
    NonUnitConstantTerm,
    PoleAtEvaluationPoint,
    ZeroDenominator,
)

F = Fraction


# ---------- 截断多项式 ----------
def test_truncpoly_product_truncates():
    x = TruncPoly.variable(3)
    assert (x**2) * (x**2) == TruncPoly.zero(3)
    assert pair_fundamental(x * x**2) == 1


def test_truncpoly_scale_variable():
    p = TruncPoly(2, [1, 2, 3]).scale_variable(2)
    assert p == TruncPoly(2, [1, 4, 12])
    assert p.constant_term() == 1
    assert p.top() == 12


def test_truncpoly_inverse_geometric():
    """(1 + x)^{-1} = 1 − x + x² − x³"""
    one_plus_x = TruncPoly(3, [1, 1])
    assert one_plus_x.inverse() == TruncPoly(3, [1, -1, 1, -1])
    assert one_plus_x ** -1 * one_plus_x == TruncPoly.one(3)


def test_truncpoly_inverse_scaled_constant():
    a = TruncPoly(2, [2, 1, 0])
    assert a * a.inverse() == TruncPoly.one(2)
    assert a.inverse().coeffs[0] == F(1, 2)


def test_truncpoly_inverse_requires_unit():
    with pytest.raises(NonUnitConstantTerm):
        TruncPoly.variable(2).inverse()


def test_exp_and_log():
    x = TruncPoly.variable(3)
    assert exp_nilpotent(x) == TruncPoly(3, [1, 1, F(1, 2), F(1, 6)])
    assert log_unipotent(exp_nilpotent(x * 3)) == x * 3


def test_exp_rejects_unit():
    with pytest.raises(NonNilpotentInput):
        exp_nilpotent(TruncPoly.one(2))
    with pytest.raises(NonNilpotentInput):
        log_unipotent(TruncPoly(2, [2, 1]))


def test_apply_series_geometric():
    x = TruncPoly.variable(2)
    assert apply_series([1, 1, 1, 1, 1], x) == TruncPoly(2, [1, 1, 1])


def test_mismatched_truncation():
    with pytest.raises(ValueError):
        TruncPoly.one(2) + TruncPoly.one(3)


# ---------- Laurent 多项式 ----------
def test_laurent_arithmetic():
    lam = LaurentPoly.monomial(1)
    assert (lam - 1) * (lam + 1) == LaurentPoly({2: 1, 0: -1})
    assert lam.inverse() == LaurentPoly.monomial(-1)
    assert (lam * 2).inverse() == LaurentPoly.monomial(-1, F(1, 2))
    assert (lam + 1).evaluate(3) == 4


def test_laurent_substitution():
    p = LaurentPoly({2: 1, -1: 3})
    assert p.substitute_power(2) == LaurentPoly({4: 1, -2: 3})
    assert p.substitute_power(0) == LaurentPoly.constant(4)
    assert p.substitute_power(0).is_constant()
    assert not p.is_constant()


def test_laurent_half_difference():
    assert LaurentPoly.half_difference(4) == LaurentPoly({2: 1, -2: -1})
    assert LaurentPoly.half_difference(0).is_zero()
    with pytest.raises(ValueError):
        LaurentPoly.half_difference(3)


def test_laurent_non_monomial_not_invertible():
    with pytest.raises(NonUnitConstantTerm):
        (LaurentPoly.monomial(1) + 1).inverse()


def test_laurent_pole_at_zero():
    with pytest.raises(PoleAtEvaluationPoint):
        LaurentPoly.monomial(-1).evaluate(0)


# ---------- 有理函数 ----------
def test_rf_reduce_cancels_common_factor():
    lam = LaurentPoly.monomial(1)
    reduced = rf_reduce(LaurentRational(lam * lam - 1, lam - 1))
    assert reduced.den == 1
    assert reduced.num == lam + 1
    assert rf_eval(LaurentRational(lam * lam - 1, lam - 1), 1) == 2


def test_rf_reduce_moves_powers_to_numerator():
    """λ/(2λ³) = ½λ^{-2}"""
    reduced = rf_reduce(LaurentRational(LaurentPoly.monomial(1), LaurentPoly.monomial(3, 2)))
    assert reduced.den == 1
    assert reduced.num == LaurentPoly.monomial(-2, F(1, 2))


def test_rf_reduce_normal_form_is_monic():
    lam = LaurentPoly.monomial(1)
    reduced = rf_reduce(LaurentRational(LaurentPoly.one(), lam * 3 + 6))
    assert reduced.den.leading_coefficient() == 1
    assert reduced.den.min_exp() == 0
    assert reduced.num == LaurentPoly.constant(F(1, 3))


def test_rf_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rf_reduce(LaurentRational(LaurentPoly.one(), LaurentPoly.zero()))


def test_rf_pole():
    lam = LaurentPoly.monomial(1)
    a = LaurentRational(LaurentPoly.one(), lam - 1)
    assert not a.is_polynomial()
    with pytest.raises(PoleAtEvaluationPoint):
        rf_eval(a, 1)


def test_rf_field_operations():
    lam = LaurentPoly.monomial(1)
    a = LaurentRational(LaurentPoly.one(), lam - 1)
    b = LaurentRational(lam, lam - 1)
    assert (b - a).is_polynomial()
    assert b - a == 1
    assert a * (lam - 1) == 1
    assert (a / a) == 1


# ---------- q 级数 ----------
def test_series_invert_geometric():
    assert series_invert(QSeries([1, -1], 4)) == QSeries([1, 1, 1, 1, 1], 4)


def test_series_invert_requires_unit():
    with pytest.raises(NonUnitConstantTerm):
        series_invert(QSeries([0, 1], 3))


def test_series_truncation():
    q = QSeries([0, 1], 3)
    assert q**4 == QSeries.constant(F(0), 3)
    assert (q**2)[2] == 1
    shorter = QSeries([1, 2, 3, 4]).truncate(1)
    assert shorter.order == 1
    assert shorter == QSeries([1, 2], 1)


def test_pair_product_trivial_root():
    """u = 1 时每个因子都是 1"""
    assert pair_product(F(2), 5, -1) == QSeries.constant(F(1), 5)


def test_pair_product_minus_one_root():
    """u = −1：∏(1+q^n)²/(1−q^n)² = 1 + 4q + 12q² + …"""
    series = pair_product(F(-2), 3, -1)
    assert series[0] == 1
    assert series[1] == 4
    assert series[2] == 12


def test_pair_product_rejects_sign():
    with pytest.raises(ValueError):
        pair_product(F(2), 3, 0)
