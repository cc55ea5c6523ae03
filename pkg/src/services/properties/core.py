# src/services/properties/core.py

from typing import Any, Dict, List

from ...common import VerificationReport
from ...utils import info
from ..base_check_service import BaseCheckService
from .suite import run_properties


class PropertyService(BaseCheckService):
    """带种子的随机性质测试"""

    def __init__(self, service_config: Dict[str, Any]):
        super().__init__(service_config, "随机性质测试")

    def _check(self, seed: int = 0, trials: int = 20) -> List[VerificationReport]:
        info(f"🎲 性质测试: seed={seed}, 每项 {trials} 次")
        return run_properties(seed, trials)
