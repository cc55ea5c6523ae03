"""
系数环的公共小工具
Fraction、LaurentPoly、LaurentRational、TruncPoly 都按鸭子类型参与运算
"""

from fractions import Fraction
from typing import Any, Union

import sympy

from ..common.exceptions import NonUnitConstantTerm, ZeroDenominator

Scalar = Union[int, Fraction]


def as_scalar(value: Any) -> Any:
    """整数统一提升为 Fraction，其余类型原样返回"""
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    return value


def is_zero(value: Any) -> bool:
    return value == 0


def zero_like(value: Any) -> Any:
    return value * 0


def one_like(value: Any) -> Any:
    return value * 0 + 1


def invert(value: Any) -> Any:
    """
    求系数环元素的逆

    Raises:
        NonUnitConstantTerm: 元素不可逆
    """
    if isinstance(value, (int, Fraction)):
        if value == 0:
            raise NonUnitConstantTerm("常数项为 0，不可逆")
        return Fraction(1) / Fraction(value)
    try:
        return value.inverse()
    except ZeroDenominator as e:
        raise NonUnitConstantTerm(str(e)) from e


def to_fraction(value: Any) -> Fraction:
    """sympy 有理数 → Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def to_sympy(value: Scalar) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def rational_json(value: Scalar) -> dict:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}
