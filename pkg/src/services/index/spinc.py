# src/services/index/spinc.py

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ...algebra import TruncPoly
from ...characteristic import (
    pontrjagin_components,
    pontrjagin_from_components,
    standard_pontrjagin,
)


@dataclass(frozen=True)
class SpincData:
    """Spin^c 结构：第一 Chern 类 c = c1·x"""

    m: int
    c1: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"维数必须为正: {self.m}")
        if (self.c1 - self.m - 1) % 2:
            raise ValueError(f"c1 必须满足 c1 ≡ m+1 mod 2: m={self.m}, c1={self.c1}")

    @classmethod
    def standard(cls, m: int) -> "SpincData":
        """c = (m+1)·x"""
        return cls(m, m + 1)

    def chern_class(self) -> TruncPoly:
        return TruncPoly.variable(self.m, self.c1)


@dataclass(frozen=True)
class PontrjaginCandidate:
    """p[j-1] 乘 x^{2j}，j = 1..⌊m/2⌋"""

    m: int
    p: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.p)
        if len(values) > self.m // 2:
            raise ValueError(f"Pontrjagin 分量过多: {len(values)} > {self.m // 2}")
        values += (Fraction(0),) * (self.m // 2 - len(values))
        object.__setattr__(self, "p", values)

    @classmethod
    def standard(cls, m: int, p1: Optional[int] = None) -> "PontrjaginCandidate":
        """标准类 (1+x^2)^{m+1}，可选地把 p1 替换为 b"""
        components = list(pontrjagin_components(standard_pontrjagin(m)))
        if p1 is not None and components:
            components[0] = Fraction(p1)
        return cls(m, tuple(components))

    @classmethod
    def from_total_class(cls, total: TruncPoly) -> "PontrjaginCandidate":
        return cls(total.m, pontrjagin_components(total))

    def total_class(self) -> TruncPoly:
        return pontrjagin_from_components(self.m, self.p)

    def to_json(self):
        return {
            "m": self.m,
            "p": [{"num": str(v.numerator), "den": str(v.denominator)} for v in self.p],
        }
