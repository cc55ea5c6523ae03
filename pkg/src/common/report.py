"""
校验报告类型与 JSON 序列化
所有有理数写成 {"num": "...", "den": "..."}，保证逐字节可复现
"""

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List

from .states import CheckStatus


def to_jsonable(value: Any) -> Any:
    """把报告里的值递归转换为可 JSON 序列化的结构"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    # numpy 标量
    if hasattr(value, "item"):
        return to_jsonable(value.item())
    raise TypeError(f"无法序列化的报告字段类型: {type(value)}")


@dataclass(frozen=True)
class VerificationReport:
    """一次命名校验的机器可读结果"""

    check: str
    status: CheckStatus
    params: Dict[str, Any] = field(default_factory=dict)
    witness: Dict[str, Any] = field(default_factory=dict)
    value: Any = None

    def __post_init__(self):
        if self.status is CheckStatus.FAIL and not self.witness:
            raise ValueError(f"失败的校验必须携带反例: {self.check}")

    @property
    def passed(self) -> bool:
        return self.status in (CheckStatus.PASS, CheckStatus.NUMERIC_PASS)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "status": self.status.value,
            "params": to_jsonable(self.params),
            "witness": to_jsonable(self.witness),
            "value": to_jsonable(self.value),
        }


def order_reports(reports: Iterable[VerificationReport]) -> List[VerificationReport]:
    """按校验名排序（稳定排序，同名保持原顺序）"""
    return sorted(reports, key=lambda r: r.check)


def dump_reports(
    reports: Iterable[VerificationReport], path: str, run_params: Dict[str, Any]
) -> str:
    """
    把一组报告写入 JSON 文件

    Args:
        reports: 校验报告
        path: 输出路径
        run_params: 运行参数（命令、种子、截断阶数等）

    Returns:
        str: 写出的 JSON 文本
    """
    ordered = order_reports(reports)
    document = {
        "run": to_jsonable(run_params),
        "passed": "error" not in run_params and all(r.passed for r in ordered),
        "reports": [r.to_dict() for r in ordered],
    }
    text = json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return text
