"""
夹具生成命令
"""
import argparse
from typing import Any, Dict, List

from ..common import CheckStatus, FixtureFamily, VerificationReport, global_config
from ..services.lefschetz import generate_fixtures
from .router import CommandRoute


def run_generate(context, family: FixtureFamily, params: Dict[str, Any], output_dir: str) -> List[VerificationReport]:
    context.run_params.update({"family": family.value, "params": params})
    paths = generate_fixtures(family, params, output_dir)
    return [
        VerificationReport(
            check=f"generate[{family.value}]",
            status=CheckStatus.PASS,
            params=params,
            value={"output_dir": output_dir, "fixtures": paths},
        )
    ]


def _generate_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, choices=[f.value for f in FixtureFamily])
    parser.add_argument("--m", type=int, required=True, help="维数")
    parser.add_argument("--n", type=int, help="synthetic-star / petrie-edge 的 n")
    parser.add_argument("--max-weight", dest="max_weight", type=int, help="线性族权重绝对值上限")
    parser.add_argument("--search-limit", dest="search_limit", type=int, default=400,
                        help="(∗) 求解时 C 的搜索宽度")
    parser.add_argument("--out-dir", dest="out_dir", help="夹具输出目录（默认 fixtures.output_dir）")


def _handle_generate(ctx) -> List[VerificationReport]:
    args = ctx.args
    family = FixtureFamily(args.family)
    fixture_config = global_config.get_fixture_config()
    params: Dict[str, Any] = {"m": args.m, "search_limit": args.search_limit}
    if family is FixtureFamily.LINEAR:
        params["max_weight"] = args.max_weight or int(fixture_config["max_weight"])
        if ctx.config.q_order is not None:
            params["q_order"] = ctx.config.q_order
    else:
        params["n"] = args.n if args.n is not None else 0
    output_dir = args.out_dir or fixture_config["output_dir"]
    return run_generate(ctx, family, params, output_dir)


fixture_routes = [
    CommandRoute(
        name="generate",
        help="生成夹具：linear / synthetic-star / petrie-edge",
        handler=_handle_generate,
        configure=_generate_options,
    ),
]
