# src/services/jacobi/core.py

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ...common import VerificationReport
from ...utils import info
from ..base_check_service import BaseCheckService
from ..lefschetz import Fixture
from .laws import (
    S_MATRIX,
    T_MATRIX,
    TS_MATRIX,
    aggregate,
    index_law_check,
    index_modular_check,
    lattice_shift_check,
    modular_check,
    oddness_check,
    phi_cross_check,
)
from .phi import ModularPoint, NumericPolicy
from .scan import real_line_pole_scan, write_scan_csv

# 原始权重，全部为偶数：F_Y 的指标律不带符号因子
EVEN_WEIGHT_SYSTEMS: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = (
    ((2,), (2,)),
    ((2, 4), (2,)),
    ((2, -2), (4,)),
    ((2, 2, -4), (2, 4)),
    ((4, 2), (-2, 2, 2)),
)

F_SHIFTS: Tuple[Tuple[int, int], ...] = ((1, 0), (0, 1), (1, 1), (-1, 2))


def random_points(
    rng: np.random.Generator, samples: int, real_z: bool = False
) -> List[ModularPoint]:
    """τ = x + iy，x ∈ [−½, ½]，y ∈ [½, 3/2]；z 的虚部不超过 Im τ 的一半"""
    points = []
    for _ in range(samples):
        x = rng.uniform(-0.5, 0.5)
        y = rng.uniform(0.5, 1.5)
        re = rng.uniform(0.05, 0.95)
        im = 0.0 if real_z else rng.uniform(-0.5, 0.5) * y
        points.append(ModularPoint(complex(x, y), complex(re, im)))
    return points


class JacobiService(BaseCheckService):
    """Φ 的变换律、F_Y 的指标律、精确/数值交叉校验与实轴极点扫描"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "Jacobi 数值校验")

    def _check(
        self,
        seed: int = 0,
        samples: int = 20,
        tolerance: Optional[float] = None,
        lattice_range: int = 2,
        cross_order: int = 12,
        fixtures: Iterable[Fixture] = (),
        scan_tau: complex = 1j,
        scan_points: int = 101,
        csv_dir: Optional[str] = None,
        strict: bool = False,
    ) -> List[VerificationReport]:
        policy = NumericPolicy.from_config(self.service_config, tolerance=tolerance)
        rng = np.random.default_rng(seed)
        points = random_points(rng, samples)
        real_points = random_points(rng, samples, real_z=True)
        info(f"🎲 随机采样 {samples} 个点 (seed={seed}, tolerance={policy.tolerance:g})")

        shifts = [
            (a, b)
            for a in range(-lattice_range, lattice_range + 1)
            for b in range(-lattice_range, lattice_range + 1)
        ]
        reports = [
            aggregate(
                "jacobi[lattice]",
                [lattice_shift_check(p, s, policy) for p in points for s in shifts],
            ),
            aggregate("jacobi[oddness]", [oddness_check(p, policy) for p in points]),
        ]
        for name, matrix in (("S", S_MATRIX), ("T", T_MATRIX), ("TS", TS_MATRIX)):
            reports.append(
                aggregate(
                    f"jacobi[modular:{name}]", [modular_check(p, matrix, policy) for p in points]
                )
            )
        reports.append(self._index_laws(points, policy))
        reports.append(
            aggregate(
                "jacobi[phi-cross-check]",
                [phi_cross_check(p, cross_order, policy) for p in real_points],
            )
        )
        reports.extend(self._scans(fixtures, scan_tau, scan_points, policy, csv_dir, strict))
        return reports

    def _index_laws(
        self, points: Sequence[ModularPoint], policy: NumericPolicy
    ) -> VerificationReport:
        def cell(system):
            tangent, v = system
            checks = [
                index_law_check(tangent, v, p, shift, policy)
                for p in points
                for shift in F_SHIFTS
            ]
            checks += [index_modular_check(tangent, v, p, S_MATRIX, policy) for p in points]
            return checks

        groups = self.map_cells(cell, EVEN_WEIGHT_SYSTEMS)
        return aggregate("jacobi[F-index]", [r for group in groups for r in group])

    def _scans(
        self,
        fixtures: Iterable[Fixture],
        tau: complex,
        points: int,
        policy: NumericPolicy,
        csv_dir: Optional[str],
        strict: bool,
    ) -> List[VerificationReport]:
        reports = []
        for fixture in fixtures:
            report, rows = real_line_pole_scan(
                fixture.data,
                tau,
                points,
                policy,
                v=fixture.v,
                strict=strict,
                mapper=self.map_cells,
                chunks=self.workers,
                label=fixture.name,
            )
            reports.append(report)
            if csv_dir:
                path = write_scan_csv(rows, f"{csv_dir}/{fixture.name}.csv")
                info(f"📈 扫描数据已写出: {path}")
        return reports
