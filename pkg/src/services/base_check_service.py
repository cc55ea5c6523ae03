# src/services/base_check_service.py

import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, TypeVar

from ..common import CheckStatus, VerificationReport
from ..utils import error, info, log_check_result, log_check_start, resolve_workers

T = TypeVar("T")
R = TypeVar("R")


class BaseCheckService(ABC):
    """
    通用校验服务基类
    所有具体服务（指标/Lefschetz/Jacobi/性质测试）都继承此类，
    run() 负责计时与日志，子类只实现 _check()
    """

    def __init__(self, service_config: Dict[str, Any], service_name: str = "校验服务"):
        self.service_config = service_config
        self.service_name = service_name
        self._last_elapsed = 0.0
        self.workers = 1

    def run(self, threads: Any = 1, **params) -> List[VerificationReport]:
        """
        执行校验并返回报告列表

        Args:
            threads: 线程配置（"auto" 或正整数），受 VERIFY_THREADS 限制
            **params: 传给 _check 的校验参数
        """
        start_time = time.time()
        self.workers = resolve_workers(threads)
        info(f"🚀 启动 {self.service_name}... (线程数: {self.workers})")
        log_check_start(self.service_name, params)

        try:
            reports = self._check(**params)
        except Exception as e:
            error(f"❌ {self.service_name} 执行失败: {e}")
            raise

        self._last_elapsed = time.time() - start_time
        status = (
            CheckStatus.PASS.value
            if all(r.passed for r in reports)
            else CheckStatus.FAIL.value
        )
        log_check_result(self.service_name, status, self._last_elapsed)
        return reports

    def map_cells(self, fn: Callable[[T], R], cells: Iterable[T]) -> List[R]:
        """独立单元并发计算，结果按输入顺序返回"""
        cells = list(cells)
        if self.workers <= 1 or len(cells) <= 1:
            return [fn(cell) for cell in cells]
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(fn, cells))

    @abstractmethod
    def _check(self, **params) -> List[VerificationReport]:
        """子类必须实现：具体的校验逻辑"""
        pass
