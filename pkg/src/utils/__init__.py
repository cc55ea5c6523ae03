from .logger import (
    logger,
    info,
    error,
    critical,
    debug,
    warning,
    log_check_start,
    log_check_result,
    log_command,
    log_exit,
)
from .resolve_workers import resolve_workers
from .fixtures import read_json, write_json
from .ranges import parse_int_range

__all__ = [
    "logger",
    "info",
    "error",
    "critical",
    "debug",
    "warning",
    "log_check_start",
    "log_check_result",
    "log_command",
    "log_exit",
    "resolve_workers",
    "read_json",
    "write_json",
    "parse_int_range",
]
