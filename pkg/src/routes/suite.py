"""
性质测试与全量校验命令
"""
import argparse
from typing import List

from ..common import VerificationReport
from ..services import property_service
from .index import run_mod24, run_reconstruct, run_rigidity
from .jacobi import run_jacobi
from .lefschetz import linear_fixtures, run_lefschetz, run_petrie, run_star, star_fixtures
from .router import CommandRoute


def run_properties(context, trials: int = 20) -> List[VerificationReport]:
    context.run_params.update({"trials": trials})
    return property_service.run(
        threads=context.config.threads, seed=context.config.seed, trials=trials
    )


def run_all(context) -> List[VerificationReport]:
    """各命令的缩小网格，外加随机性质测试"""
    reports: List[VerificationReport] = []
    reports += run_lefschetz(context, linear_fixtures([2], 2))
    reports += run_star(context, linear_fixtures([2, 3, 4], 3))
    reports += run_petrie(context, star_fixtures([3, 4]))
    reports += run_mod24(context, list(range(3, 12)), list(range(0, 73)))
    reports += run_rigidity(context, list(range(3, 9)))
    reports += run_reconstruct(context, [2, 4, 6])
    reports += run_jacobi(context, samples=5, points=51)
    reports += run_properties(context)
    # 各子命令写入的参数互相覆盖，这里只保留命令级信息
    context.run_params = context.config.to_params()
    return reports


def _properties_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--trials", type=int, default=20, help="每个性质的随机抽样次数")


suite_routes = [
    CommandRoute(
        name="properties",
        help="带种子的随机性质测试（环公理、级数求逆、指标可加性等）",
        handler=lambda ctx: run_properties(ctx, ctx.args.trials),
        configure=_properties_options,
    ),
    CommandRoute(
        name="all",
        help="运行全部校验（缩小的参数网格）",
        handler=run_all,
    ),
]
