# src/algebra/truncpoly.py
"""
截断多项式环 R[x]/(x^{m+1})，上同调 CP^m 的环模型
系数环 R 可以是 Fraction、LaurentPoly 或 LaurentRational
"""

from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence, Tuple

from ..common.exceptions import NonNilpotentInput
from .ring import as_scalar, invert, is_zero


class TruncPoly:
    """系数 coeffs[k] 乘 x^k；每次乘法都强制 x^{m+1} = 0"""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable[Any] = ()):
        if m < 0:
            raise ValueError(f"维数必须非负: {m}")
        values = [as_scalar(c) for c in list(coeffs)[: m + 1]]
        values += [Fraction(0)] * (m + 1 - len(values))
        self.m = m
        self.coeffs: Tuple[Any, ...] = tuple(values)

    # ---------- 构造 ----------
    @classmethod
    def constant(cls, m: int, value: Any) -> "TruncPoly":
        return cls(m, [value])

    @classmethod
    def zero(cls, m: int) -> "TruncPoly":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "TruncPoly":
        return cls(m, [1])

    @classmethod
    def variable(cls, m: int, scale: Any = 1) -> "TruncPoly":
        """scale·x"""
        if m == 0:
            return cls(0)
        return cls(m, [0, scale])

    @classmethod
    def monomial(cls, m: int, degree: int, value: Any = 1) -> "TruncPoly":
        coeffs = [0] * (m + 1)
        if degree <= m:
            coeffs[degree] = value
        return cls(m, coeffs)

    # ---------- 查询 ----------
    def constant_term(self) -> Any:
        return self.coeffs[0]

    def top(self) -> Any:
        return self.coeffs[self.m]

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coeffs)

    def map(self, fn: Callable[[Any], Any]) -> "TruncPoly":
        return TruncPoly(self.m, [fn(c) for c in self.coeffs])

    def scale_variable(self, k: Any) -> "TruncPoly":
        """p(x) → p(k·x)"""
        return TruncPoly(self.m, [c * as_scalar(k) ** i for i, c in enumerate(self.coeffs)])

    # ---------- 运算 ----------
    def _same_ring(self, other: "TruncPoly") -> None:
        if other.m != self.m:
            raise ValueError(f"截断次数不一致: {self.m} != {other.m}")

    def __add__(self, other):
        if isinstance(other, TruncPoly):
            self._same_ring(other)
            return TruncPoly(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + as_scalar(other)
        return TruncPoly(self.m, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncPoly(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncPoly):
            self._same_ring(other)
            m = self.m
            out = [Fraction(0)] * (m + 1)
            for i, a in enumerate(self.coeffs):
                if is_zero(a):
                    continue
                for j in range(m + 1 - i):
                    b = other.coeffs[j]
                    if is_zero(b):
                        continue
                    out[i + j] = out[i + j] + a * b
            return TruncPoly(m, out)
        scalar = as_scalar(other)
        return TruncPoly(self.m, [c * scalar for c in self.coeffs])

    def __rmul__(self, other):
        scalar = as_scalar(other)
        return TruncPoly(self.m, [scalar * c for c in self.coeffs])

    def __pow__(self, k: int) -> "TruncPoly":
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncPoly.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "TruncPoly":
        """
        常数项可逆时求逆：a = c0·(1 + n)，n 幂零

        Raises:
            NonUnitConstantTerm: 常数项不可逆
        """
        c0_inv = invert(self.coeffs[0])
        nilpotent = self * c0_inv - 1
        result = TruncPoly.one(self.m)
        power = TruncPoly.one(self.m)
        for _ in range(self.m):
            power = power * (-nilpotent)
            result = result + power
        return result * c0_inv

    # ---------- 比较 ----------
    def __eq__(self, other):
        if isinstance(other, TruncPoly):
            return self.m == other.m and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        if isinstance(other, (int, Fraction)):
            return self == TruncPoly.constant(self.m, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        terms = [
            f"{c}·x^{k}" if k else str(c)
            for k, c in enumerate(self.coeffs)
            if not is_zero(c)
        ]
        return f"TruncPoly(m={self.m}: {' + '.join(terms) or '0'})"

    def to_json(self):
        return {"m": self.m, "coeffs": [_coeff_json(c) for c in self.coeffs]}


def _coeff_json(value: Any) -> Any:
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    return value.to_json()


def _require_nilpotent(a: TruncPoly) -> None:
    if not is_zero(a.coeffs[0]):
        raise NonNilpotentInput(f"常数项必须为 0: {a.coeffs[0]}")


def exp_nilpotent(a: TruncPoly) -> TruncPoly:
    """
    Σ_{k=0}^{m} a^k/k!，精确

    Raises:
        NonNilpotentInput: 常数项不为 0
    """
    _require_nilpotent(a)
    result = TruncPoly.one(a.m)
    term = TruncPoly.one(a.m)
    for k in range(1, a.m + 1):
        term = term * a * Fraction(1, k)
        result = result + term
    return result


def log_unipotent(a: TruncPoly) -> TruncPoly:
    """
    log(1 + n) = Σ (−1)^{k+1} n^k / k，要求常数项为 1

    Raises:
        NonNilpotentInput: a − 1 的常数项不为 0
    """
    nilpotent = a - 1
    _require_nilpotent(nilpotent)
    result = TruncPoly.zero(a.m)
    power = TruncPoly.one(a.m)
    for k in range(1, a.m + 1):
        power = power * nilpotent
        result = result + power * Fraction((-1) ** (k + 1), k)
    return result


def apply_series(coeffs: Sequence[Any], a: TruncPoly) -> TruncPoly:
    """对幂零元代入幂级数 Σ coeffs[k]·a^k（Horner）"""
    _require_nilpotent(a)
    usable = list(coeffs[: a.m + 1])
    result = TruncPoly.zero(a.m)
    for c in reversed(usable):
        result = result * a + c
    return result


def pair_fundamental(a: TruncPoly) -> Any:
    """与基本类配对：取 x^m 的系数"""
    return a.coeffs[a.m]
