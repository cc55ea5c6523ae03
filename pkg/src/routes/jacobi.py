"""
Jacobi 数值校验命令
"""
import argparse
from typing import List, Optional

from ..common import VerificationReport
from ..services import jacobi_service
from ..services.lefschetz import Fixture, LinearModelSpec, linear_model
from .router import CommandRoute, fixtures_or


def scan_fixtures() -> List[Fixture]:
    """默认扫描 CP¹ 与 CP² 的线性模型"""
    specs = {
        "cp1": LinearModelSpec(m=1, ambient_weights=(0, 1)),
        "cp2": LinearModelSpec(m=2, ambient_weights=(0, 1, 2)),
    }
    return [Fixture(name=name, data=linear_model(spec), spec=spec) for name, spec in specs.items()]


def run_jacobi(
    context,
    samples: int = 20,
    points: int = 101,
    tau: complex = 1j,
    csv_dir: Optional[str] = None,
    strict: bool = False,
    fixtures: Optional[List[Fixture]] = None,
) -> List[VerificationReport]:
    if fixtures is None:
        fixtures = scan_fixtures()
    context.run_params.update(
        {"samples": samples, "points": points, "tau": tau, "scan_fixtures": [f.name for f in fixtures]}
    )
    return jacobi_service.run(
        threads=context.config.threads,
        seed=context.config.seed,
        samples=samples,
        tolerance=context.config.tolerance,
        fixtures=fixtures,
        scan_tau=tau,
        scan_points=points,
        csv_dir=csv_dir,
        strict=strict,
    )


def _jacobi_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=20, help="随机采样点个数")
    parser.add_argument("--points", type=int, default=101, help="实轴扫描的粗网格点数")
    parser.add_argument("--tau", type=complex, default=1j, help="实轴扫描使用的 τ，如 1j")
    parser.add_argument("--csv-dir", dest="csv_dir", help="扫描数据 CSV 输出目录")
    parser.add_argument("--strict", action="store_true", help="极点未抵消时直接报错")


jacobi_routes = [
    CommandRoute(
        name="jacobi",
        help="Φ 的格平移与模变换律、F_Y 指标律、精确/数值交叉校验、实轴极点扫描",
        handler=lambda ctx: run_jacobi(
            ctx,
            samples=ctx.args.samples,
            points=ctx.args.points,
            tau=ctx.args.tau,
            csv_dir=ctx.args.csv_dir,
            strict=ctx.args.strict,
            fixtures=fixtures_or(ctx.config.fixture_paths, scan_fixtures),
        ),
        configure=_jacobi_options,
    ),
]
