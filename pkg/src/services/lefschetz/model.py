# src/services/lefschetz/model.py
"""
S^1 作用的不动点数据模型

所有权重在构造时加倍后存储（二重作用约定），λ 的指数因此始终为整数。
线性模型 CP^m 上 [z_0:…:z_m] ↦ [λ^{a_0}z_0:…:λ^{a_m}z_m]：
  - 权重相同的坐标张成一个 CP^{k−1} 分支，互不相同时为孤立点 p_i
  - p_i 处法权重为 a_j − a_i，γ 的权重为 a_i，Spin^c 线丛权重 l = c1·a_i
  - 法丛的形式根取 −x，定向符号为 (−1)^{m+d}
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ...characteristic import LineSummand, RootBundle, gamma_bundle
from ...common.exceptions import (
    DuplicateWeights,
    InvalidFixedPointData,
    MissingNormalization,
    ZeroNormalWeight,
)
from ...common.states import BundleKind

# 线性模型中法丛的形式根系数
NORMAL_ROOT = -1


def double(weight: int) -> int:
    return 2 * int(weight)


def tangent_model(d: int) -> RootBundle:
    """CP^d 分支的稳定切丛模型；孤立点为空丛"""
    if d == 0:
        return RootBundle(kind=BundleKind.REAL_ORIENTED_PAIRED)
    return RootBundle.paired([(1, 0, d + 1), (0, 0, -1)])


@dataclass(frozen=True)
class FixedComponent:
    """
    不动点分支 Y（上同调为 CP^d）

    normal 中每项是 (形式根 r, 加倍权重 w, 重数)，对应法丛的等变根 r·x + w·z
    """

    d: int
    normal: Tuple[LineSummand, ...]
    gamma_weight: int
    spinc_weight: int
    orientation: int = 1
    tangent: Optional[RootBundle] = None

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(self.normal))
        if self.d < 0:
            raise InvalidFixedPointData(f"分支维数必须非负: {self.d}")
        if self.orientation not in (1, -1):
            raise InvalidFixedPointData(f"定向符号只能是 ±1: {self.orientation}")
        if self.tangent is None:
            object.__setattr__(self, "tangent", tangent_model(self.d))
        for summand in self.normal:
            if summand.weight == 0:
                raise ZeroNormalWeight(f"法权重必须非零: {summand}")
            if summand.weight % 2:
                raise InvalidFixedPointData(f"存储的权重必须为偶数（已加倍）: {summand}")
        for weight in (self.gamma_weight, self.spinc_weight):
            if weight % 2:
                raise InvalidFixedPointData(f"存储的权重必须为偶数（已加倍）: {weight}")

    @property
    def normal_weights(self) -> Tuple[int, ...]:
        """按重数展开的法权重 m_{Y,i}（加倍后）"""
        return tuple(s.weight for s in self.normal for _ in range(s.multiplicity))

    @property
    def normal_rank(self) -> int:
        return sum(s.multiplicity for s in self.normal)

    @property
    def is_isolated(self) -> bool:
        return self.d == 0

    def to_json(self):
        return {
            "d": self.d,
            "gammaWeight": self.gamma_weight // 2,
            "spincWeight": self.spinc_weight // 2,
            "normalWeights": [w // 2 for w in self.normal_weights],
            "normalRoots": [s.root for s in self.normal for _ in range(s.multiplicity)],
            "orientation": self.orientation,
        }


@dataclass(frozen=True)
class FixedPointData:
    """
    整个不动点集：Σ(d(Y)+1) = m+1，γ 的权重两两不同
    p_1(M) = −n·x²
    """

    m: int
    components: Tuple[FixedComponent, ...]
    n: int
    spinc_c1: int

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise InvalidFixedPointData("不动点集不能为空")
        if self.euler_characteristic() != self.m + 1:
            raise InvalidFixedPointData(
                f"Σ(d(Y)+1) = {self.euler_characteristic()}，应为 m+1 = {self.m + 1}"
            )
        weights = self.gamma_weights
        if len(set(weights)) != len(weights):
            raise InvalidFixedPointData(f"γ 的权重必须两两不同: {weights}")
        for index, component in enumerate(self.components):
            if component.d + component.normal_rank != self.m:
                raise InvalidFixedPointData(
                    f"分支 {index}: d + 法丛秩 = {component.d + component.normal_rank} ≠ m = {self.m}"
                )

    def euler_characteristic(self) -> int:
        """Lefschetz 不动点计数 Σ χ(Y) = Σ (d(Y)+1)"""
        return sum(c.d + 1 for c in self.components)

    @property
    def gamma_weights(self) -> Tuple[int, ...]:
        return tuple(c.gamma_weight for c in self.components)

    @property
    def is_normalized(self) -> bool:
        """Pin(2) 不动点所在分支排在最前且 a_{Y_0} = 0"""
        return self.components[0].gamma_weight == 0

    def require_normalized(self) -> None:
        if not self.is_normalized:
            raise MissingNormalization(
                f"a_(Y_0) = {self.components[0].gamma_weight // 2} ≠ 0，需要先归一化"
            )

    @property
    def is_linear_isolated(self) -> bool:
        return all(c.is_isolated for c in self.components)

    def to_json(self):
        return {
            "m": self.m,
            "n": self.n,
            "spincC1": self.spinc_c1,
            "components": [c.to_json() for c in self.components],
        }


@dataclass(frozen=True)
class LinearModelSpec:
    """线性作用的环境权重 (a_0, …, a_m)，未加倍"""

    m: int
    ambient_weights: Tuple[int, ...]
    normalize: bool = False
    allow_repeated: bool = False
    spinc_c1: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "ambient_weights", tuple(int(a) for a in self.ambient_weights))
        if self.m < 1:
            raise InvalidFixedPointData(f"维数必须为正: {self.m}")
        if len(self.ambient_weights) != self.m + 1:
            raise InvalidFixedPointData(
                f"需要 m+1 = {self.m + 1} 个环境权重，实际 {len(self.ambient_weights)}"
            )
        if self.ambient_weights[0] != 0:
            raise InvalidFixedPointData(f"约定 a_0 = 0，实际 {self.ambient_weights[0]}")
        if not self.allow_repeated and len(set(self.ambient_weights)) != len(self.ambient_weights):
            raise DuplicateWeights(f"环境权重有重复: {self.ambient_weights}")
        if len(set(self.ambient_weights)) == 1:
            raise DuplicateWeights("所有环境权重相同，作用平凡")

    @property
    def c1(self) -> int:
        return self.m + 1 if self.spinc_c1 is None else self.spinc_c1

    def shift(self) -> int:
        """归一化平移量 Σa_j/(m+1)"""
        total = sum(self.ambient_weights)
        if total % (self.m + 1):
            raise MissingNormalization(
                f"Σa_j = {total} 不能被 m+1 = {self.m + 1} 整除，无法用整数平移归一化"
            )
        return total // (self.m + 1)


def linear_model(spec: LinearModelSpec) -> FixedPointData:
    """
    由线性模型构造不动点数据，n = −(m+1)

    Raises:
        DuplicateWeights: 权重重复且未允许扩展分支
        MissingNormalization: 要求归一化但 Σa_j 不能被 m+1 整除，或平移后没有 γ 权重为 0 的分支
    """
    m = spec.m
    weights = spec.ambient_weights
    offset = spec.shift() if spec.normalize else 0

    groups: Dict[int, int] = {}
    for a in weights:
        groups[a] = groups.get(a, 0) + 1

    components: List[FixedComponent] = []
    for a, size in groups.items():
        d = size - 1
        normal = [
            LineSummand(NORMAL_ROOT, double(b - a), count)
            for b, count in groups.items()
            if b != a
        ]
        gamma = double(a - offset)
        components.append(
            FixedComponent(
                d=d,
                normal=tuple(normal),
                gamma_weight=gamma,
                spinc_weight=spec.c1 * gamma,
                orientation=(-1) ** ((m + d) % 2),
            )
        )

    if spec.normalize:
        zero = [i for i, c in enumerate(components) if c.gamma_weight == 0]
        if not zero:
            raise MissingNormalization(
                f"平移量 {offset} 不是任何 a_j，归一化后没有 γ 权重为 0 的分支"
            )
        i = zero[0]
        components = [components[i]] + components[:i] + components[i + 1 :]

    return FixedPointData(m=m, components=tuple(components), n=-(m + 1), spinc_c1=spec.c1)


@dataclass(frozen=True)
class VAssignment:
    """
    全局 V = Σ mult·γ^k ⊗ λ^{χ}（χ 加倍后存储）
    在分支 Y 上 γ^k ⊗ λ^χ 的等变根为 k·x + (k·a_Y + χ)·z
    """

    bundle: RootBundle = field(default_factory=lambda: RootBundle())

    def __post_init__(self):
        if self.bundle.kind is not BundleKind.COMPLEX:
            raise InvalidFixedPointData(f"V 必须是复丛: {self.bundle.kind.value}")
        for summand in self.bundle.summands:
            if summand.weight % 2:
                raise InvalidFixedPointData(f"V 的特征权重必须为偶数（已加倍）: {summand}")

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int, int]]) -> "VAssignment":
        """(γ 的幂, 未加倍特征权重, 重数)"""
        return cls(gamma_bundle([(k, double(chi), mult) for k, chi, mult in terms]))

    def restrict(self, component: FixedComponent) -> Tuple[LineSummand, ...]:
        return tuple(
            LineSummand(s.root, s.root * component.gamma_weight + s.weight, s.multiplicity)
            for s in self.bundle.summands
        )

    def fixed_rank(self, component: FixedComponent) -> int:
        """n(V|Y)：S^1 不动子丛的复维数"""
        return sum(s.multiplicity for s in self.restrict(component) if s.weight == 0)

    def is_empty(self) -> bool:
        return self.bundle.is_empty()

    def to_json(self):
        return [
            {"gammaPower": s.root, "character": s.weight // 2, "multiplicity": s.multiplicity}
            for s in self.bundle.summands
        ]


def isolated_component(
    normal_weights: Sequence[int],
    gamma_weight: int,
    spinc_weight: int = 0,
    orientation: int = 1,
    root: int = NORMAL_ROOT,
) -> FixedComponent:
    """由未加倍的权重构造孤立不动点"""
    return FixedComponent(
        d=0,
        normal=tuple(LineSummand(root, double(w)) for w in normal_weights),
        gamma_weight=double(gamma_weight),
        spinc_weight=double(spinc_weight),
        orientation=orientation,
    )
