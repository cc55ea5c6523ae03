# src/services/index/core.py

from typing import Any, Dict, Iterable, List, Optional

from ...common import CheckStatus, VerificationReport
from ...common.exceptions import NoSolution, UnderdeterminedSystem
from ...utils import info, warning
from ..base_check_service import BaseCheckService
from .indices import aroof_of
from .mod24 import mod24_check
from .pontrjagin import reconstruct_pontrjagin
from .rigidity import perturbation_check, rigidity_check, rigidity_relations, upper_bound_relation
from .spinc import PontrjaginCandidate


class Mod24Service(BaseCheckService):
    """p1 模 24 同余校验服务"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "mod24 同余校验")

    def _check(self, m_values: Iterable[int], b_values: Iterable[int]) -> List[VerificationReport]:
        b_values = list(b_values)
        return self.map_cells(lambda m: mod24_check(m, b_values), m_values)


class RigidityService(BaseCheckService):
    """刚性关系校验服务，可选附带 p1 上界关系"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "刚性关系校验")

    def _check(
        self,
        m_values: Iterable[int],
        upper_bound_b: Optional[int] = None,
        q_order: int = 2,
    ) -> List[VerificationReport]:
        def cell(m: int) -> List[VerificationReport]:
            reports = [rigidity_check(m), perturbation_check(m)]
            if upper_bound_b is not None:
                reports.append(upper_bound_relation(m, upper_bound_b, q_order))
            return reports

        return [r for group in self.map_cells(cell, m_values) for r in group]


class ReconstructService(BaseCheckService):
    """由刚性关系与符号差反解 Pontrjagin 类"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "Pontrjagin 类重建")

    def _check(self, m_values: Iterable[int]) -> List[VerificationReport]:
        return self.map_cells(self._reconstruct_one, m_values)

    @staticmethod
    def _reconstruct_one(m: int) -> VerificationReport:
        name = f"reconstruct[m={m}]"
        try:
            candidate, stages = reconstruct_pontrjagin(m)
        except (UnderdeterminedSystem, NoSolution) as e:
            warning(f"⚠️ m={m} 无法唯一确定 Pontrjagin 类: {e}")
            return VerificationReport(
                check=name,
                status=CheckStatus.FAIL,
                params={"m": m},
                witness={"error": type(e).__name__, "message": str(e)},
            )

        standard = PontrjaginCandidate.standard(m)
        relations = rigidity_relations(m, aroof_of(candidate)) if m >= 3 else []
        witness: Dict[str, Any] = {}
        if candidate != standard:
            witness["candidate"] = candidate
            witness["standard"] = standard
        if any(v != 0 for v in relations):
            witness["relations"] = relations
        info(f"m={m} 重建结果: p = {[str(v) for v in candidate.p]}")
        return VerificationReport(
            check=name,
            status=CheckStatus.FAIL if witness else CheckStatus.PASS,
            params={"m": m},
            witness=witness,
            value={"pontrjagin": candidate, "stages": stages},
        )
