# src/characteristic/classes.py
"""
Chern 特征、Euler 类与旋量特征
equivariant=True 时系数为 λ 的 Laurent 多项式（权重已加倍）
"""

from fractions import Fraction

from ..algebra import LaurentPoly, TruncPoly, exp_nilpotent
from ..common.exceptions import OddHalfWeight, UnpairedRoots
from ..common.states import BundleKind
from .bundles import LineSummand, RootBundle


def exp_root(m: int, root: Fraction) -> TruncPoly:
    """e^{root·x}"""
    return exp_nilpotent(TruncPoly.variable(m, root))


def equivariant_exp(m: int, summand: LineSummand, sign: int = 1) -> TruncPoly:
    """e^{±c·x}·λ^{±ω}"""
    return exp_root(m, sign * summand.root) * LaurentPoly.monomial(sign * summand.weight)


def chern_character(bundle: RootBundle, m: int, equivariant: bool = False) -> TruncPoly:
    """Σ mult·e^{c·x}（·λ^ω）"""
    result = TruncPoly.zero(m)
    for summand in bundle.summands:
        term = equivariant_exp(m, summand) if equivariant else exp_root(m, summand.root)
        result = result + term * summand.multiplicity
    return result


def euler_class(bundle: RootBundle, m: int) -> TruncPoly:
    """
    正根之积；复丛取全部根之积
    负重数需要对根求逆，幂零根上会抛出 NonUnitConstantTerm
    """
    roots = bundle.positive_roots() if bundle.kind.is_paired else bundle.summands
    result = TruncPoly.one(m)
    for summand in roots:
        result = result * TruncPoly.variable(m, summand.root) ** summand.multiplicity
    return result


def spinor_character(w: RootBundle, m: int, equivariant: bool = False) -> TruncPoly:
    """
    完整复旋量丛 Δ(W) 的特征：∏ (e^{c·x/2}λ^{ω/2} + e^{−c·x/2}λ^{−ω/2})

    Raises:
        UnpairedRoots: W 不是自旋成对丛
        OddHalfWeight: λ 的指数不是整数
    """
    if w.kind is not BundleKind.SPIN_PAIRED:
        raise UnpairedRoots(f"旋量特征要求自旋成对丛，实际为 {w.kind.value}")
    result = TruncPoly.one(m)
    for summand in w.positive_roots():
        half = Fraction(summand.root, 2)
        if equivariant:
            if summand.weight % 2:
                raise OddHalfWeight(f"权重 {summand.weight} 的一半不是整数")
            lam = LaurentPoly.monomial(summand.weight // 2)
            lam_inv = LaurentPoly.monomial(-(summand.weight // 2))
            factor = exp_root(m, half) * lam + exp_root(m, -half) * lam_inv
        else:
            factor = exp_root(m, half) + exp_root(m, -half)
        result = result * factor**summand.multiplicity
    return result
