"""
等变 Lefschetz 相关命令：lefschetz、star、petrie-bound
"""
import argparse
from typing import List, Optional

from ..common import VerificationReport, global_config
from ..services import lefschetz_service, petrie_service, star_service
from ..services.lefschetz import Fixture, linear_family, synthetic_star
from ..utils import parse_int_range
from .router import CommandRoute, fixtures_or


def default_max_weight() -> int:
    return int(global_config.get("fixtures.max_weight", 3))


def linear_fixtures(m_values: List[int], max_weight: int) -> List[Fixture]:
    return [f for m in m_values for f in linear_family(m, max_weight)]


def star_fixtures(m_values: List[int], n_values: Optional[List[int]] = None) -> List[Fixture]:
    """默认 n 取 0..m+2"""
    return [
        synthetic_star(m, n)
        for m in m_values
        for n in (n_values if n_values is not None else range(0, m + 3))
    ]


def run_lefschetz(
    context, fixtures: List[Fixture], strict: bool = False, vanishing: bool = True
) -> List[VerificationReport]:
    context.run_params.update({"fixture_count": len(fixtures), "strict": strict})
    return lefschetz_service.run(
        threads=context.config.threads,
        fixtures=fixtures,
        q_order=context.config.q_order,
        strict=strict,
        vanishing=vanishing,
    )


def run_star(context, fixtures: List[Fixture]) -> List[VerificationReport]:
    context.run_params.update({"fixture_count": len(fixtures)})
    return star_service.run(threads=context.config.threads, fixtures=fixtures)


def run_petrie(context, fixtures: List[Fixture]) -> List[VerificationReport]:
    context.run_params.update({"fixture_count": len(fixtures)})
    return petrie_service.run(threads=context.config.threads, fixtures=fixtures)


def _linear_options(default_m: str):
    def configure(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--m", default=default_m, help="未给出夹具时生成线性模型的维数范围")
        parser.add_argument("--max-weight", dest="max_weight", type=int,
                            help="线性模型权重绝对值上限（默认取 fixtures.max_weight）")
    return configure


def _lefschetz_options(parser: argparse.ArgumentParser) -> None:
    _linear_options("2..3")(parser)
    parser.add_argument("--strict", action="store_true", help="极点未抵消时直接报错")
    parser.add_argument("--no-vanishing", dest="vanishing", action="store_false",
                        help="跳过 n(V|Y) > d(Y) 的消失校验")


def _petrie_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", default="3..5", help="未给出夹具时 (∗) 求解的维数范围")
    parser.add_argument("--n", help="n 的范围，默认 0..m+2")


def _linear_default(ctx):
    max_weight = ctx.args.max_weight or default_max_weight()
    return lambda: linear_fixtures(parse_int_range(ctx.args.m), max_weight)


lefschetz_routes = [
    CommandRoute(
        name="lefschetz",
        help="局部项之和约化为 Laurent 多项式，λ=1 处与非等变指标一致",
        handler=lambda ctx: run_lefschetz(
            ctx,
            fixtures_or(ctx.config.fixture_paths, _linear_default(ctx)),
            strict=ctx.args.strict,
            vanishing=ctx.args.vanishing,
        ),
        configure=_lefschetz_options,
    ),
    CommandRoute(
        name="star",
        help="(∗) 恒等式：Σ m² + n·a² 在各不动点分支上相同",
        handler=lambda ctx: run_star(
            ctx, fixtures_or(ctx.config.fixture_paths, _linear_default(ctx))
        ),
        configure=_linear_options("2..4"),
    ),
    CommandRoute(
        name="petrie-bound",
        help="n < m 界的证明链",
        handler=lambda ctx: run_petrie(
            ctx,
            fixtures_or(
                ctx.config.fixture_paths,
                lambda: star_fixtures(
                    parse_int_range(ctx.args.m),
                    parse_int_range(ctx.args.n) if ctx.args.n else None,
                ),
            ),
        ),
        configure=_petrie_options,
    ),
]
