# src/algebra/qseries.py
"""
截断 q 幂级数，系数环可插拔
两个级数运算时取较小的截断阶数，结果总记录阶数
"""

from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from .ring import as_scalar, invert, is_zero, one_like, zero_like


class QSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Any], order: Optional[int] = None):
        values = [as_scalar(c) for c in coeffs]
        if not values:
            raise ValueError("q 级数至少需要一个系数")
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise ValueError(f"截断阶数必须非负: {order}")
        zero = zero_like(values[0])
        values = values[: order + 1] + [zero] * (order + 1 - len(values))
        self.order = order
        self.coeffs = tuple(values)

    @classmethod
    def constant(cls, value: Any, order: int) -> "QSeries":
        return cls([value], order)

    def __getitem__(self, n: int) -> Any:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def map(self, fn: Callable[[Any], Any]) -> "QSeries":
        return QSeries([fn(c) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs, min(order, self.order))

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coeffs)

    def first_nonzero(self) -> Optional[int]:
        for n, c in enumerate(self.coeffs):
            if not is_zero(c):
                return n
        return None

    def __add__(self, other):
        if isinstance(other, QSeries):
            order = min(self.order, other.order)
            return QSeries(
                [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)], order
            )
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + other
        return QSeries(coeffs, self.order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            order = min(self.order, other.order)
            out = []
            for n in range(order + 1):
                acc = None
                for k in range(n + 1):
                    a, b = self.coeffs[k], other.coeffs[n - k]
                    if is_zero(a) or is_zero(b):
                        continue
                    term = a * b
                    acc = term if acc is None else acc + term
                out.append(acc if acc is not None else zero_like(self.coeffs[0] * other.coeffs[0]))
            return QSeries(out, order)
        return QSeries([c * other for c in self.coeffs], self.order)

    def __rmul__(self, other):
        return QSeries([other * c for c in self.coeffs], self.order)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return series_invert(self) ** (-k)
        result = QSeries.constant(one_like(self.coeffs[0]), self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"QSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def to_json(self):
        return {
            "order": self.order,
            "coeffs": [
                c.to_json() if hasattr(c, "to_json") else _fraction_json(c)
                for c in self.coeffs
            ],
        }


def _fraction_json(value: Any) -> Any:
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def series_invert(a: QSeries) -> QSeries:
    """
    逆级数，满足 a·result = 1（到截断阶数为止）

    Raises:
        NonUnitConstantTerm: q^0 系数不可逆
    """
    b0 = invert(a.coeffs[0])
    out = [b0]
    for n in range(1, a.order + 1):
        acc = None
        for k in range(1, n + 1):
            ak = a.coeffs[k]
            if is_zero(ak):
                continue
            term = ak * out[n - k]
            acc = term if acc is None else acc + term
        out.append(zero_like(b0) if acc is None else -(b0 * acc))
    return QSeries(out, a.order)


def pair_product(s: Any, order: int, sign: int = -1) -> QSeries:
    """
    ∏_{n≥1} (1 + sign·q^n·s + q^{2n}) / (1 + sign·q^n)^2，截断到 q^order

    s = u + u^{-1} 时，sign=−1 给出 (1−q^n u)(1−q^n u^{-1})/(1−q^n)^2，
    sign=+1 给出 Λ_{q^n} 的约化因子
    """
    if sign not in (1, -1):
        raise ValueError(f"sign 只能是 ±1: {sign}")
    s = as_scalar(s)
    one = one_like(s)
    zero = zero_like(s)
    coeffs = [one] + [zero] * order
    norm = [Fraction(1)] + [Fraction(0)] * order
    signed = s * sign
    for n in range(1, order + 1):
        updated = list(coeffs)
        for k in range(n, order + 1):
            updated[k] = updated[k] + signed * coeffs[k - n]
            if k >= 2 * n:
                updated[k] = updated[k] + coeffs[k - 2 * n]
        coeffs = updated
        # (1 + sign·q^n)^2 = 1 + 2·sign·q^n + q^{2n}
        norm_updated = list(norm)
        for k in range(n, order + 1):
            norm_updated[k] += 2 * sign * norm[k - n]
            if k >= 2 * n:
                norm_updated[k] += norm[k - 2 * n]
        norm = norm_updated
    return QSeries(coeffs, order) * series_invert(QSeries(norm, order))
