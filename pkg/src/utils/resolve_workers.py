import os
from typing import Optional, Union


def resolve_workers(threads_config: Union[str, int, None] = "auto") -> int:
    """
    根据配置解析并发校验使用的线程数

    Args:
        threads_config: 配置值，支持 "auto" 或正整数

    Returns:
        int: 实际线程数，环境变量 VERIFY_THREADS 为上限
    """
    from . import warning

    cap = _env_cap()

    if threads_config is None or str(threads_config).lower().strip() == "auto":
        workers = os.cpu_count() or 1
    else:
        try:
            workers = int(threads_config)
        except (TypeError, ValueError):
            warning(f"无效的线程配置: '{threads_config}'，将回退到自动检测")
            workers = os.cpu_count() or 1
        if workers < 1:
            warning(f"线程数必须为正整数: {workers}，改为 1")
            workers = 1

    if cap is not None:
        workers = min(workers, cap)
    return workers


def _env_cap() -> Optional[int]:
    raw = os.getenv("VERIFY_THREADS")
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return max(1, value)
