# src/algebra/laurent.py
"""
圆周变量 λ 的 Laurent 多项式与有理函数
系数一律为 Fraction；约化时借助 sympy 在 QQ 上求多项式 gcd
"""

from fractions import Fraction
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple, Union

import sympy
from sympy import Poly, QQ

from ..common.exceptions import (
    NonUnitConstantTerm,
    PoleAtEvaluationPoint,
    ZeroDenominator,
)
from .ring import Scalar, rational_json, to_fraction, to_sympy

LAMBDA = sympy.Symbol("lam")


class LaurentPoly:
    """
    R(S^1) ⊗ Q 的元素：整数指数 → 有理系数
    不存储零系数，构造后视为不可变
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None):
        clean: Dict[int, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[int(exponent)] = coeff
        self._terms = clean

    # ---------- 构造 ----------
    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, coeff: Scalar) -> "LaurentPoly":
        return cls({0: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def half_difference(cls, weight: int) -> "LaurentPoly":
        """λ^{w/2} − λ^{−w/2}，w 必须为偶数"""
        if weight % 2:
            raise ValueError(f"权重必须为偶数: {weight}")
        half = weight // 2
        if half == 0:
            return cls()
        return cls({half: 1, -half: -1})

    # ---------- 查询 ----------
    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return tuple(sorted(self._terms.items()))

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.terms())

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("零多项式没有最低次数")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("零多项式没有最高次数")
        return max(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.max_exp()]

    # ---------- 运算 ----------
    @staticmethod
    def _coerce(other: Any) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """只有单项式在 Laurent 多项式环中可逆"""
        if not self.is_monomial():
            raise NonUnitConstantTerm(f"Laurent 多项式不可逆: {self}")
        (e, c), = self._terms.items()
        return LaurentPoly({-e: 1 / c})

    def shift(self, k: int) -> "LaurentPoly":
        """乘以 λ^k"""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """λ → λ^k"""
        if k == 0:
            return LaurentPoly.constant(sum(self._terms.values(), Fraction(0)))
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def evaluate(self, value: Union[Scalar, complex]) -> Union[Fraction, complex]:
        """在有理点精确求值，在复数点数值求值"""
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            if value == 0 and self._terms and self.min_exp() < 0:
                raise PoleAtEvaluationPoint("λ=0 处存在负次幂")
            return sum((c * value**e for e, c in self._terms.items()), Fraction(0))
        value = complex(value)
        return sum((float(c) * value**e for e, c in self._terms.items()), 0j)

    # ---------- 比较 ----------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            parts.append(str(c) if e == 0 else f"{c}·λ^{e}")
        return " + ".join(parts)

    def to_json(self):
        return [[e, rational_json(c)] for e, c in self.terms()]


def _to_poly(lp: LaurentPoly) -> Poly:
    """非负指数的 Laurent 多项式 → sympy Poly"""
    return Poly.from_dict({(e,): to_sympy(c) for e, c in lp.terms()}, LAMBDA, domain=QQ)


def _from_poly(poly: Poly) -> LaurentPoly:
    return LaurentPoly({monom[0]: to_fraction(c) for monom, c in poly.terms()})


class LaurentRational:
    """
    λ 的有理函数 num/den
    规范形式：den 首一且最低次数为 0，num 与 den 互素
    运算结果总是规范形式，结构相等即语义相等
    """

    __slots__ = ("num", "den", "_reduced")

    def __init__(self, num: Any, den: Any = None, _reduced: bool = False):
        self.num = _as_laurent(num)
        self.den = LaurentPoly.one() if den is None else _as_laurent(den)
        self._reduced = _reduced

    @classmethod
    def from_poly(cls, lp: Any) -> "LaurentRational":
        return cls(lp, None, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        """约化后分母是否为 1"""
        return rf_reduce(self).den == 1

    def as_polynomial(self) -> LaurentPoly:
        reduced = rf_reduce(self)
        if reduced.den != 1:
            raise ValueError(f"不是 Laurent 多项式: {reduced}")
        return reduced.num

    @staticmethod
    def _coerce(other: Any) -> Optional["LaurentRational"]:
        if isinstance(other, LaurentRational):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return LaurentRational.from_poly(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return rf_reduce(self)
        if self.num.is_zero():
            return rf_reduce(other)
        if self.den == other.den:
            return rf_reduce(LaurentRational(self.num + other.num, self.den))
        return rf_reduce(
            LaurentRational(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentRational(-self.num, self.den, _reduced=self._reduced)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return LaurentRational.from_poly(LaurentPoly.zero())
        return rf_reduce(
            LaurentRational(self.num * other.num, self.den * other.den)
        )

    __rmul__ = __mul__

    def inverse(self) -> "LaurentRational":
        if self.num.is_zero():
            raise ZeroDenominator("对零有理函数求逆")
        return rf_reduce(LaurentRational(self.den, self.num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "LaurentRational":
        if k < 0:
            return self.inverse() ** (-k)
        return rf_reduce(LaurentRational(self.num**k, self.den**k))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = rf_reduce(self), rf_reduce(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        reduced = rf_reduce(self)
        return hash((reduced.num, reduced.den))

    def __repr__(self):
        if self.den == 1:
            return repr(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json(self):
        reduced = rf_reduce(self)
        return {"num": reduced.num.to_json(), "den": reduced.den.to_json()}


def _as_laurent(value: Any) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    raise TypeError(f"无法转换为 Laurent 多项式: {type(value)}")


def rf_reduce(a: LaurentRational) -> LaurentRational:
    """
    约化为规范形式

    Raises:
        ZeroDenominator: 分母为零
    """
    if a._reduced:
        return a
    num, den = a.num, a.den
    if den.is_zero():
        raise ZeroDenominator(f"分母为零: {num} / 0")
    if num.is_zero():
        return LaurentRational(LaurentPoly.zero(), LaurentPoly.one(), _reduced=True)

    # 把 λ 的幂全部移到分子
    low = den.min_exp()
    den = den.shift(-low)
    num = num.shift(-low)

    # 分母有非零常数项；分子是单项式时两者必然互素
    if den.max_exp() > 0 and not num.is_monomial():
        num_low = num.min_exp()
        p_num = _to_poly(num.shift(-num_low))
        p_den = _to_poly(den)
        g = p_num.gcd(p_den)
        if g.degree() > 0:
            p_num = p_num.exquo(g)
            p_den = p_den.exquo(g)
            num = _from_poly(p_num).shift(num_low)
            den = _from_poly(p_den)

    lead = den.leading_coefficient()
    if lead != 1:
        num = num * (1 / lead)
        den = den * (1 / lead)
    return LaurentRational(num, den, _reduced=True)


def rf_eval(a: LaurentRational, point: Union[Scalar, complex]) -> Union[Fraction, complex]:
    """
    在 λ0 处求值：有理点给出精确值，单位圆上的复数点给出数值

    Raises:
        PoleAtEvaluationPoint: λ0 是约化后的极点
    """
    reduced = rf_reduce(a)
    if isinstance(point, (int, Fraction)):
        point = Fraction(point)
        den_value = reduced.den.evaluate(point)
        if den_value == 0:
            raise PoleAtEvaluationPoint(f"λ={point} 是 {reduced} 的极点")
        return reduced.num.evaluate(point) / den_value
    den_value = reduced.den.evaluate(point)
    if den_value == 0:
        raise PoleAtEvaluationPoint(f"λ={point} 是 {reduced} 的极点")
    return reduced.num.evaluate(point) / den_value
