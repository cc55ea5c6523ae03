import json
import os
from typing import Any, Dict

from ..common.exceptions import FixtureParseError


def read_json(path: str) -> Dict[str, Any]:
    """
    读取 JSON 夹具文件

    Raises:
        FixtureParseError: 文件不存在、无法解析或顶层不是对象
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except OSError as e:
        raise FixtureParseError(f"无法读取夹具文件: {path}, 错误: {e}") from e
    except json.JSONDecodeError as e:
        raise FixtureParseError(f"夹具文件不是合法 JSON: {path}, 错误: {e}") from e
    if not isinstance(document, dict):
        raise FixtureParseError(f"夹具顶层必须是对象: {path}")
    return document


def write_json(path: str, document: Any) -> str:
    """以确定性格式（键排序）写出 JSON"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    text = json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return text
