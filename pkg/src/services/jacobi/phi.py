# src/services/jacobi/phi.py
"""
Weierstrass Φ 函数的数值求值

Φ(τ, z) = (e^{πiz} − e^{−πiz}) · ∏_{n≥1} (1 − q^n λ)(1 − q^n λ^{−1}) / (1 − q^n)²
q = e^{2πiτ}，λ = e^{2πiz}；λ^{1/2} 直接取 e^{πiz}，不经过 λ 开方
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ...common.exceptions import TailBoundViolation


@dataclass(frozen=True)
class ModularPoint:
    tau: complex
    z: complex

    def __post_init__(self):
        if complex(self.tau).imag <= 0:
            raise ValueError(f"τ 必须在上半平面: {self.tau}")

    @property
    def q(self) -> complex:
        return complex(np.exp(2j * np.pi * self.tau))

    @property
    def lam(self) -> complex:
        return complex(np.exp(2j * np.pi * self.z))

    def with_z(self, z: complex) -> "ModularPoint":
        return ModularPoint(self.tau, z)


@dataclass(frozen=True)
class NumericPolicy:
    """
    乘积截断策略

    product_truncation 为 None 时按点自动选取 N，使尾部相对误差界 ≤ tolerance/10
    """

    tolerance: float = 1e-9
    max_product_terms: int = 400
    pole_threshold: float = 1e-6
    refinement_growth: float = 0.05
    cross_check_tolerance: float = 1e-6
    product_truncation: Optional[int] = None

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError(f"容差必须为正: {self.tolerance}")

    @classmethod
    def from_config(cls, config: Dict[str, Any], **overrides) -> "NumericPolicy":
        values = {
            "tolerance": float(config.get("tolerance", 1e-9)),
            "max_product_terms": int(config.get("max_product_terms", 400)),
            "pole_threshold": float(config.get("pole_threshold", 1e-6)),
            "refinement_growth": float(config.get("refinement_growth", 0.05)),
            "cross_check_tolerance": float(config.get("cross_check_tolerance", 1e-6)),
            "product_truncation": config.get("product_truncation"),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @staticmethod
    def tail_bound(abs_q: float, abs_lam: float, n: int) -> float:
        """2|q|^{N+1}(|λ| + 1/|λ| + 2)/(1 − |q|)"""
        return 2 * abs_q ** (n + 1) * (abs_lam + 1 / abs_lam + 2) / (1 - abs_q)

    @staticmethod
    def _admissible(abs_q: float, abs_lam: float, n: int) -> bool:
        # 尾部因子须远离零点，上面的对数估计才成立
        return abs_q ** (n + 1) * max(abs_lam, 1 / abs_lam) <= 0.5

    def truncation(self, abs_q: float, abs_lam: float) -> Tuple[int, float]:
        """
        返回 (N, 尾部误差界)

        Raises:
            TailBoundViolation: 在 max_product_terms 内达不到 tolerance/10
        """
        target = self.tolerance / 10
        if self.product_truncation is not None:
            n = int(self.product_truncation)
            bound = self.tail_bound(abs_q, abs_lam, n)
            if bound > target or not self._admissible(abs_q, abs_lam, n):
                raise TailBoundViolation(
                    f"N={n} 时尾部误差界 {bound:.3e} 超过 {target:.3e} (|q|={abs_q:.4f})"
                )
            return n, bound
        for n in range(1, self.max_product_terms + 1):
            if self._admissible(abs_q, abs_lam, n):
                bound = self.tail_bound(abs_q, abs_lam, n)
                if bound <= target:
                    return n, bound
        raise TailBoundViolation(
            f"{self.max_product_terms} 项内无法满足尾部误差界 (|q|={abs_q:.4f}, |λ|={abs_lam:.4e})"
        )


def phi_with_bound(point: ModularPoint, policy: NumericPolicy) -> Tuple[complex, int, float]:
    """返回 (Φ 值, 截断项数 N, 相对误差界)"""
    q = point.q
    lam = point.lam
    n, bound = policy.truncation(abs(q), abs(lam))
    qn = q ** np.arange(1, n + 1)
    factors = (1 - qn * lam) * (1 - qn / lam) / (1 - qn) ** 2
    prefactor = 2j * np.sin(np.pi * point.z)
    return complex(prefactor * np.prod(factors)), n, bound


def phi_eval(point: ModularPoint, policy: NumericPolicy) -> complex:
    """
    Raises:
        TailBoundViolation: 截断策略不满足
    """
    value, _, _ = phi_with_bound(point, policy)
    return value


def phi_grid(tau: complex, zs: np.ndarray, policy: NumericPolicy) -> np.ndarray:
    """同一 τ 下对一组 z 向量化求 Φ，N 按最坏的 |λ| 选取"""
    zs = np.asarray(zs, dtype=complex)
    q = complex(np.exp(2j * np.pi * tau))
    lam = np.exp(2j * np.pi * zs)
    worst = float(np.max(np.maximum(np.abs(lam), 1 / np.abs(lam)))) if zs.size else 1.0
    n, _ = policy.truncation(abs(q), worst)
    qn = q ** np.arange(1, n + 1)
    factors = (1 - np.outer(lam, qn)) * (1 - np.outer(1 / lam, qn)) / (1 - qn) ** 2
    prefactor = 2j * np.sin(np.pi * zs)
    return prefactor * np.prod(factors, axis=1)
