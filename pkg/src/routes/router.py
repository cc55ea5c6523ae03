"""
命令路由：每个子命令由名称、帮助文本、参数配置函数与处理函数组成
"""
import argparse
import os
from dataclasses import dataclass
from typing import Callable, List, Sequence

from ..common import VerificationReport
from ..services.lefschetz import Fixture, load_fixture
from ..utils import info


def _no_options(parser: argparse.ArgumentParser) -> None:
    pass


@dataclass(frozen=True)
class CommandRoute:
    name: str
    help: str
    handler: Callable[..., List[VerificationReport]]
    configure: Callable[[argparse.ArgumentParser], None] = _no_options


def add_common_options(parser: argparse.ArgumentParser) -> None:
    """所有命令共享的选项；未给出时按 环境变量 > config.yaml > 默认值 取值"""
    parser.add_argument("--fixture", action="append", metavar="PATH",
                        help="夹具 JSON 文件或目录，可重复")
    parser.add_argument("--q-order", type=int, dest="q_order", help="q 级数截断阶数")
    parser.add_argument("--tolerance", type=float, help="数值容差")
    parser.add_argument("--out", metavar="PATH", help="报告输出路径")
    parser.add_argument("--seed", type=int, help="随机种子")
    parser.add_argument("--threads", help='线程数，"auto" 或正整数')


def load_fixtures(paths: Sequence[str]) -> List[Fixture]:
    """
    读取夹具；目录按文件名排序读取其中的 *.json（index.json 除外）

    Raises:
        FixtureParseError: 文件不存在或内容不合法
    """
    fixtures: List[Fixture] = []
    for path in paths:
        if os.path.isdir(path):
            names = sorted(
                n for n in os.listdir(path) if n.endswith(".json") and n != "index.json"
            )
            fixtures.extend(load_fixture(os.path.join(path, n)) for n in names)
        else:
            fixtures.append(load_fixture(path))
    info(f"📂 已读取 {len(fixtures)} 个夹具")
    return fixtures


def fixtures_or(paths: Sequence[str], default: Callable[[], List[Fixture]]) -> List[Fixture]:
    return load_fixtures(paths) if paths else default()
