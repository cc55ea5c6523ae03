import datetime
import logging
import os
import sys
from typing import Any, Dict, Optional, TextIO

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class ColoredFormatter(logging.Formatter):
    """
    控制台日志按级别着色
    输出不是终端或设置了 NO_COLOR 时不着色，避免重定向到文件后夹杂控制符
    """

    COLORS = {
        "DEBUG": "\033[92m",
        "INFO": "\033[96m",
        "WARNING": "\033[93m",
        "ERROR": "\033[91m",
        "CRITICAL": "\033[91m\033[1m",
    }
    RESET = "\033[0m"

    def __init__(self, fmt: str, stream: TextIO):
        super().__init__(fmt)
        self.use_color = hasattr(stream, "isatty") and stream.isatty() and not os.getenv("NO_COLOR")

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        color = self.COLORS.get(record.levelname) if self.use_color else None
        return f"{color}{message}{self.RESET}" if color else message


class Logger:
    """
    校验器共用的命名 logger，首次使用时按环境变量配置一次

    APP_LOG_LEVEL  日志级别，默认 INFO
    APP_LOG_DIR    按日期滚动的文件日志目录，默认 logs；设为空字符串则只输出到 stderr
    """

    _logger: Optional[logging.Logger] = None

    @classmethod
    def get_logger(cls, name: str = "verify") -> logging.Logger:
        if cls._logger is None:
            cls._logger = cls._configure(name)
        return cls._logger

    @staticmethod
    def _configure(name: str) -> logging.Logger:
        log = logging.getLogger(name)
        log.handlers.clear()
        log.setLevel(os.getenv("APP_LOG_LEVEL", "INFO").upper())

        # stdout 只留给校验摘要
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(ColoredFormatter(LOG_FORMAT, sys.stderr))
        log.addHandler(console)

        log_dir = os.getenv("APP_LOG_DIR", "logs")
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
            path = os.path.join(log_dir, f"verify-{datetime.date.today():%Y-%m-%d}.log")
            file_handler = logging.FileHandler(path, encoding="utf-8")
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            log.addHandler(file_handler)

        log.propagate = False
        return log


logger = Logger.get_logger()


def info(message: str, *args, **kwargs) -> None:
    logger.info(message, *args, **kwargs)


def debug(message: str, *args, **kwargs) -> None:
    logger.debug(message, *args, **kwargs)


def warning(message: str, *args, **kwargs) -> None:
    logger.warning(message, *args, **kwargs)


def error(message: str, exc_info=True, *args, **kwargs) -> None:
    """
    记录ERROR级别的日志

    参数:
        message: 日志消息
        exc_info: 是否附带当前异常的堆栈，默认为True
    """
    logger.error(message, exc_info=exc_info, *args, **kwargs)


def critical(message: str, exc_info=True, *args, **kwargs) -> None:
    """未预期的异常：命令中止，附带堆栈"""
    logger.critical(message, exc_info=exc_info, *args, **kwargs)


def _brief(value: Any) -> Any:
    # 夹具、矩阵等大对象只记类型名
    if isinstance(value, (int, float, str, bool, type(None))):
        return value
    if isinstance(value, (list, tuple, range)) and len(value) <= 8:
        return [_brief(v) for v in value]
    return type(value).__name__


def log_check_start(name: str, params: Dict[str, Any]) -> None:
    info(f"开始校验: {name} 参数: { {k: _brief(v) for k, v in params.items()} }")


def log_check_result(name: str, status: str, elapsed: float) -> None:
    """
    记录校验结果

    参数:
        name: 校验名称
        status: pass / fail / numeric-pass
        elapsed: 耗时(秒)
    """
    mark = "❌" if status == "fail" else "✅"
    info(f"{mark} 校验结束: {name} 状态: {status} 耗时: {elapsed:.4f}秒")


def log_command(command: str, options: Dict[str, Any]) -> None:
    info(f"▶️ 执行命令: {command} 参数: {options}")


def log_exit(command: str, exit_code: int, elapsed: float) -> None:
    mark = "✅" if exit_code == 0 else "❌"
    info(f"{mark} 命令结束: {command} 退出码: {exit_code} 耗时: {elapsed:.4f}秒")
