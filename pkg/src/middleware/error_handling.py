"""
错误处理中间件，把异常映射为退出码，并保证报告总被写出
"""
from ..app import write_report
from ..common.exceptions import CheckFailed, ConfigError, FixtureParseError, VerifyError
from ..utils import critical, error, warning


class ErrorHandlingMiddleware:
    """
    退出码约定：
      0  全部校验通过
      1  有校验失败，或校验过程中抛出其他异常
      2  夹具无法解析或运行配置不合法
    """
    def dispatch(self, context, call_next):
        try:
            return call_next(context)
        except CheckFailed as e:
            warning(f"⚠️ {e}")
            if context.report_path is None:
                self._record(context, e)
            return 1
        except (FixtureParseError, ConfigError) as e:
            error(f"❌ 输入不合法: {e}", exc_info=False)
            self._record(context, e)
            return 2
        except VerifyError as e:
            error(f"❌ 校验中止: {type(e).__name__}: {e}", exc_info=False)
            self._record(context, e)
            return 1
        except Exception as e:
            critical(f"💥 命令执行异常: {type(e).__name__}: {e}")
            self._record(context, e)
            return 1

    @staticmethod
    def _record(context, exc: BaseException) -> None:
        context.error = {"type": type(exc).__name__, "message": str(exc)}
        try:
            write_report(context)
        except OSError as e:
            error(f"报告写出失败: {e}", exc_info=False)
