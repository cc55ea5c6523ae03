from ..utils import logger

# 导入各个命令路由模块
from .router import CommandRoute, add_common_options, load_fixtures
from .index import index_routes
from .lefschetz import lefschetz_routes
from .jacobi import jacobi_routes
from .fixtures import fixture_routes
from .suite import suite_routes

ROUTES = [
    *lefschetz_routes,
    *index_routes,
    *jacobi_routes,
    *fixture_routes,
    *suite_routes,
]


def register_routes(app):
    """
    注册所有子命令到命令行应用
    """
    for route in ROUTES:
        parser = app.subparsers.add_parser(route.name, help=route.help, description=route.help)
        add_common_options(parser)
        route.configure(parser)
        parser.set_defaults(route=route)

    logger.debug("所有命令已成功注册")


__all__ = ["CommandRoute", "ROUTES", "register_routes", "add_common_options", "load_fixtures"]
