# src/app.py
"""
命令行应用：解析参数、依次经过中间件、调用命令处理函数并写出报告
"""

import argparse
import sys
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Tuple, Type

from .common import RunConfig, VerificationReport, dump_reports, global_config
from .common.exceptions import CheckFailed
from .utils import info


@dataclass
class CommandContext:
    """一次命令执行在中间件之间传递的状态"""

    args: argparse.Namespace
    config: Optional[RunConfig] = None
    reports: List[VerificationReport] = field(default_factory=list)
    run_params: Dict[str, Any] = field(default_factory=dict)
    error: Optional[Dict[str, str]] = None
    report_path: Optional[str] = None

    @property
    def command(self) -> str:
        return getattr(self.args, "command", "") or ""

    @property
    def output_path(self) -> str:
        if self.config is not None:
            return self.config.output_path
        return getattr(self.args, "out", None) or global_config.get(
            "cli.output", "reports/report.json"
        )


CallNext = Callable[[CommandContext], int]


def write_report(context: CommandContext) -> str:
    """写出 JSON 报告；出错时把错误信息记入运行参数"""
    run_params = dict(context.run_params) or {"command": context.command}
    if context.error is not None:
        run_params["error"] = context.error
    path = context.output_path
    dump_reports(context.reports, path, run_params)
    context.report_path = path
    info(f"📝 报告已写出: {path} ({len(context.reports)} 项)")
    return path


def print_summary(reports: List[VerificationReport], stream=None) -> None:
    stream = stream or sys.stdout
    for report in sorted(reports, key=lambda r: r.check):
        stream.write(f"{report.status.value:<13} {report.check}\n")


class VerifyApp:
    """
    verify 命令行应用
    中间件按注册顺序包裹，后注册的在最外层
    """

    def __init__(self, title: str = "verify", description: str = "", version: str = "0.1.0"):
        self.title = title
        self.version = version
        self.parser = argparse.ArgumentParser(prog=title, description=description)
        self.parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
        self.subparsers = self.parser.add_subparsers(
            dest="command", metavar="<command>", required=True
        )
        self._middlewares: List[Tuple[Type, Dict[str, Any]]] = []

    def add_middleware(self, middleware_class: Type, **options) -> None:
        self._middlewares.append((middleware_class, options))

    def _build_chain(self) -> CallNext:
        call: CallNext = self._execute
        for middleware_class, options in self._middlewares:
            call = partial(middleware_class(**options).dispatch, call_next=call)
        return call

    def run(self, argv: Optional[List[str]] = None) -> int:
        """解析参数并执行命令，返回退出码（参数错误时 argparse 以 2 退出）"""
        args = self.parser.parse_args(argv)
        return self._build_chain()(CommandContext(args=args))

    @staticmethod
    def _execute(context: CommandContext) -> int:
        context.config = RunConfig.resolve(context.args, global_config)
        context.run_params = context.config.to_params()
        context.reports = list(context.args.route.handler(context))
        write_report(context)
        print_summary(context.reports)
        failed = [r.check for r in context.reports if not r.passed]
        if failed:
            raise CheckFailed(f"{len(failed)} 项校验失败: {', '.join(failed[:5])}")
        return 0
