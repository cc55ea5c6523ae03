"""
中间件管理器，用于统一注册所有中间件
"""
from ..utils import logger
from .logging import LoggingMiddleware
from .error_handling import ErrorHandlingMiddleware


class MiddlewareManager:
    """
    中间件管理器，用于统一注册所有中间件
    """
    @staticmethod
    def register_middlewares(app):
        """
        注册所有中间件到命令行应用

        参数:
            app: VerifyApp 实例
        """
        # 注册错误处理中间件
        app.add_middleware(ErrorHandlingMiddleware)

        # 注册日志中间件（最后注册，位于最外层，记录最终退出码）
        app.add_middleware(LoggingMiddleware)

        logger.debug("所有中间件已成功注册")
