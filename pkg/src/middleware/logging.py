"""
日志中间件，记录命令、参数、耗时与退出码
"""
import time

from ..utils import log_command, log_exit


class LoggingMiddleware:
    """
    日志中间件，记录命令开始与结束
    """
    def dispatch(self, context, call_next):
        # 记录命令开始时间
        start_time = time.time()

        options = {
            k: v for k, v in sorted(vars(context.args).items()) if k not in ("route", "command")
        }
        log_command(context.command, options)

        exit_code = call_next(context)

        # 计算命令处理时间
        log_exit(context.command, exit_code, time.time() - start_time)
        return exit_code
