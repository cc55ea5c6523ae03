"""
全局指标相关命令：mod24、rigidity、reconstruct
"""
import argparse
from typing import List, Optional

from ..common import VerificationReport
from ..services import mod24_service, reconstruct_service, rigidity_service
from ..utils import parse_int_range
from .router import CommandRoute


def run_mod24(context, m_values: List[int], b_values: List[int]) -> List[VerificationReport]:
    context.run_params.update({"m": m_values, "b": [min(b_values), max(b_values)]})
    return mod24_service.run(
        threads=context.config.threads, m_values=m_values, b_values=b_values
    )


def run_rigidity(
    context, m_values: List[int], upper_bound_b: Optional[int] = None
) -> List[VerificationReport]:
    q_order = context.config.q_order if context.config.q_order is not None else 2
    context.run_params.update({"m": m_values, "upper_bound_b": upper_bound_b})
    return rigidity_service.run(
        threads=context.config.threads,
        m_values=m_values,
        upper_bound_b=upper_bound_b,
        q_order=q_order,
    )


def run_reconstruct(context, m_values: List[int]) -> List[VerificationReport]:
    context.run_params.update({"m": m_values})
    return reconstruct_service.run(threads=context.config.threads, m_values=m_values)


def _mod24_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", default="3..11", help="维数范围，如 3..11 或 4,6")
    parser.add_argument("--b-range", dest="b_range", default="0..72", help="p1 = b·x² 的 b 范围")


def _rigidity_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", default="3..12", help="维数范围")
    parser.add_argument("--upper-bound-b", dest="upper_bound_b", type=int,
                        help="同时校验 p1 = b·x² 的上界关系")


def _reconstruct_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", default="4,6,8,10", help="维数范围")


index_routes = [
    CommandRoute(
        name="mod24",
        help="p1 模 24 同余：b/24 − Q 为整数当且仅当 b ≡ m+1 (mod 24)",
        handler=lambda ctx: run_mod24(
            ctx, parse_int_range(ctx.args.m), parse_int_range(ctx.args.b_range)
        ),
        configure=_mod24_options,
    ),
    CommandRoute(
        name="rigidity",
        help="刚性关系在标准 Â 上为零，扰动后不为零",
        handler=lambda ctx: run_rigidity(ctx, parse_int_range(ctx.args.m), ctx.args.upper_bound_b),
        configure=_rigidity_options,
    ),
    CommandRoute(
        name="reconstruct",
        help="由刚性关系与符号差反解 Pontrjagin 类",
        handler=lambda ctx: run_reconstruct(ctx, parse_int_range(ctx.args.m)),
        configure=_reconstruct_options,
    ),
]
