# src/characteristic/bundles.py
"""
形式根表示的向量丛：每个线丛加项是 (c·x, 权重 ω, 重数)
成对类型的丛按 (+c, +ω), (−c, −ω) 相邻存储，每对的第一个元素为正根
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from ..common.exceptions import UnpairedRoots
from ..common.states import BundleKind


@dataclass(frozen=True)
class LineSummand:
    root: int
    weight: int = 0
    multiplicity: int = 1

    def __post_init__(self):
        if self.multiplicity == 0:
            raise ValueError("线丛加项的重数不能为 0")

    def negated(self) -> "LineSummand":
        return LineSummand(-self.root, -self.weight, self.multiplicity)

    def to_json(self):
        return [self.root, self.weight, self.multiplicity]


@dataclass(frozen=True)
class RootBundle:
    summands: Tuple[LineSummand, ...] = field(default_factory=tuple)
    kind: BundleKind = BundleKind.COMPLEX

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if self.kind.is_paired:
            if len(self.summands) % 2:
                raise UnpairedRoots(f"成对丛的根个数必须为偶数: {len(self.summands)}")
            for first, second in zip(self.summands[::2], self.summands[1::2]):
                if second != first.negated():
                    raise UnpairedRoots(f"根没有按 ± 成对出现: {first} / {second}")

    @classmethod
    def complex(cls, summands: Iterable[Tuple[int, int, int]]) -> "RootBundle":
        """由 (root, weight, multiplicity) 列表构造复线丛之和"""
        return cls(tuple(LineSummand(*s) for s in summands), BundleKind.COMPLEX)

    @classmethod
    def paired(
        cls,
        pairs: Iterable[Tuple[int, int, int]],
        kind: BundleKind = BundleKind.REAL_ORIENTED_PAIRED,
    ) -> "RootBundle":
        """由正根列表构造成对丛"""
        entries: List[LineSummand] = []
        for pair in pairs:
            positive = LineSummand(*pair)
            entries.extend([positive, positive.negated()])
        return cls(tuple(entries), kind)

    def positive_roots(self) -> Tuple[LineSummand, ...]:
        if not self.kind.is_paired:
            raise UnpairedRoots("复丛没有正根的选取")
        return self.summands[::2]

    @property
    def virtual_rank(self) -> int:
        """复丛为复秩，成对丛为实秩"""
        return sum(s.multiplicity for s in self.summands)

    def is_empty(self) -> bool:
        return not self.summands

    def direct_sum(self, other: "RootBundle") -> "RootBundle":
        if other.kind is not self.kind:
            raise ValueError(f"丛类型不一致: {self.kind} / {other.kind}")
        return RootBundle(self.summands + other.summands, self.kind)

    def to_json(self):
        return {"kind": self.kind.value, "summands": [s.to_json() for s in self.summands]}


def cp_tangent_bundle(m: int) -> RootBundle:
    """
    CP^m 切丛的稳定模型：TM ⊕ 1 = (m+1) 个根为 x 的对，
    用一个虚平凡对补偿
    """
    return RootBundle.paired([(1, 0, m + 1), (0, 0, -1)])


def gamma_bundle(terms: Sequence[Tuple[int, int, int]]) -> RootBundle:
    """(γ 的幂, 特征权重, 重数) 列表 → 复丛 Σ mult·γ^k⊗λ^w"""
    return RootBundle.complex(terms)


def spin_gamma_bundle(rank: int) -> RootBundle:
    """rank·γ 作为自旋丛（rank 个根为 x 的对）"""
    if rank == 0:
        return RootBundle(kind=BundleKind.SPIN_PAIRED)
    return RootBundle.paired([(1, 0, rank)], BundleKind.SPIN_PAIRED)
