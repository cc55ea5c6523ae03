# src/common/run_config.py
"""
一次命令行运行的配置
优先级：命令行参数 > 环境变量 > config.yaml > 内置默认值
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

from .exceptions import ConfigError
from .global_config import GlobalConfig
from .states import CommandName

ENV_SEED = "VERIFY_SEED"
ENV_Q_ORDER = "VERIFY_Q_ORDER"
ENV_TOLERANCE = "VERIFY_TOLERANCE"
ENV_OUTPUT = "VERIFY_OUTPUT"
ENV_THREADS = "VERIFY_THREADS"


def _pick(cli_value: Any, env_name: str, config_value: Any, default: Any) -> Any:
    if cli_value is not None:
        return cli_value
    env_value = os.getenv(env_name)
    if env_value not in (None, ""):
        return env_value
    if config_value is not None:
        return config_value
    return default


@dataclass(frozen=True)
class RunConfig:
    command: CommandName
    fixture_paths: Tuple[str, ...] = field(default_factory=tuple)
    q_order: Optional[int] = None
    tolerance: float = 1e-9
    output_path: str = "reports/report.json"
    seed: int = 0
    threads: Union[str, int] = "auto"

    def __post_init__(self):
        if self.q_order is not None and self.q_order < 0:
            raise ConfigError(f"q 截断阶数必须非负: {self.q_order}")
        if self.tolerance <= 0:
            raise ConfigError(f"容差必须为正: {self.tolerance}")

    @classmethod
    def resolve(cls, args: Any, config: GlobalConfig) -> "RunConfig":
        """
        由 argparse 结果与全局配置合成运行配置

        Raises:
            ConfigError: 取值无法解析或违反约束
        """
        cli = config.get_cli_config()
        try:
            q_order = _pick(getattr(args, "q_order", None), ENV_Q_ORDER, None, None)
            return cls(
                command=CommandName(args.command),
                fixture_paths=tuple(getattr(args, "fixture", None) or ()),
                q_order=None if q_order is None else int(q_order),
                tolerance=float(
                    _pick(
                        getattr(args, "tolerance", None),
                        ENV_TOLERANCE,
                        config.get("numeric.tolerance"),
                        1e-9,
                    )
                ),
                output_path=str(
                    _pick(getattr(args, "out", None), ENV_OUTPUT, cli.get("output"), "reports/report.json")
                ),
                seed=int(_pick(getattr(args, "seed", None), ENV_SEED, cli.get("seed"), 0)),
                threads=_pick(getattr(args, "threads", None), ENV_THREADS, cli.get("threads"), "auto"),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"运行配置不合法: {e}") from e

    def to_params(self) -> Dict[str, Any]:
        """写入报告的运行参数；线程数不影响结果，不写入"""
        return {
            "command": self.command.value,
            "fixtures": list(self.fixture_paths),
            "q_order": self.q_order,
            "tolerance": self.tolerance,
            "seed": self.seed,
        }
