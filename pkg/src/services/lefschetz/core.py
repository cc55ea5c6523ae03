# src/services/lefschetz/core.py

from typing import Any, Dict, Iterable, List, Optional

from ...common import CheckStatus, VerificationReport
from ...common.exceptions import MissingNormalization
from ...utils import warning
from ..base_check_service import BaseCheckService
from ..index import SpincData
from .generator import Fixture
from .local_terms import lefschetz_sum, vanishing_report
from .model import VAssignment
from .weights import petrie_bound_report, star_invariant, twist_index_constancy, vanishing_assignment


def rigidity_twist_pair(m: int):
    """V = γ² + (m−3)·γ，W = 0：p1(V + W) 与标准 p1 = (m+1)·x² 相同"""
    terms = [(2, 0, 1)] + ([(1, 0, m - 3)] if m != 3 else [])
    return VAssignment.from_terms(terms), VAssignment()


class LefschetzService(BaseCheckService):
    """局部项求和：极点抵消与 λ=1 一致性，外加消失判据"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "Lefschetz 局部项校验")

    def _check(
        self,
        fixtures: Iterable[Fixture],
        q_order: Optional[int] = None,
        strict: bool = False,
        vanishing: bool = True,
    ) -> List[VerificationReport]:
        default_order = int(self.service_config.get("q_order", 4))

        def cell(fixture: Fixture) -> List[VerificationReport]:
            order = q_order if q_order is not None else fixture.q_order
            if order is None:
                order = default_order
            _, report = lefschetz_sum(
                fixture.data, v=fixture.v, order=order, strict=strict, label=fixture.name
            )
            reports = [report]
            if vanishing:
                spinc = SpincData(fixture.data.m, fixture.data.spinc_c1)
                reports.append(
                    vanishing_report(
                        fixture.data, spinc, vanishing_assignment(fixture.data), order, fixture.name
                    )
                )
            return reports

        return [r for group in self.map_cells(cell, fixtures) for r in group]


class StarService(BaseCheckService):
    """(∗) 恒等式，以及 𝒰_{V,W} 指标在各分支上的恒定性"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "(∗) 权重恒等式校验")

    def _check(self, fixtures: Iterable[Fixture]) -> List[VerificationReport]:
        reports = []
        for fixture in fixtures:
            reports.append(star_invariant(fixture.data, fixture.name))
            if fixture.spec is not None:
                v, w = rigidity_twist_pair(fixture.data.m)
                reports.append(twist_index_constancy(fixture.data, v, w, fixture.name))
        return reports


class PetrieService(BaseCheckService):
    """n < m 界的证明链"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "n < m 界校验")

    def _check(self, fixtures: Iterable[Fixture]) -> List[VerificationReport]:
        reports = []
        for fixture in fixtures:
            try:
                reports.append(petrie_bound_report(fixture.data, fixture.name))
            except MissingNormalization as e:
                warning(f"⚠️ {fixture.name}: {e}")
                reports.append(
                    VerificationReport(
                        check=f"petrie-bound[{fixture.name}]",
                        status=CheckStatus.FAIL,
                        params={"m": fixture.data.m, "n": fixture.data.n},
                        witness={"error": type(e).__name__, "message": str(e)},
                    )
                )
        return reports
