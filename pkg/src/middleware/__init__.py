"""
中间件模块，用于统一管理命令执行前后的拦截器
"""
from .middleware_manager import MiddlewareManager
from .logging import LoggingMiddleware
from .error_handling import ErrorHandlingMiddleware

__all__ = [
    'MiddlewareManager',
    'LoggingMiddleware',
    'ErrorHandlingMiddleware',
]
