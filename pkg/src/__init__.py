# 尝试加载.env文件中的环境变量
try:
    from dotenv import load_dotenv
    load_dotenv()  # 加载.env文件中的环境变量
except ImportError:
    pass

from typing import List, Optional

from .app import VerifyApp
from .middleware import MiddlewareManager
from .routes import register_routes

__version__ = "0.1.0"

# 创建命令行应用实例
app = VerifyApp(
    title="verify",
    description="cohomology CP^m 上 Spin^c 指标、等变 Lefschetz 局部项与 Jacobi 函数的精确校验",
    version=__version__,
)

# 注册中间件
MiddlewareManager.register_middlewares(app)

# 注册命令
register_routes(app)


def main(argv: Optional[List[str]] = None) -> int:
    """命令行入口，返回退出码"""
    return app.run(argv)
