"""
服务层模块，每个校验领域一个子包
为命令路由层提供统一的服务接口
"""

from .base_check_service import BaseCheckService

# 全局指标：mod 24、刚性关系、Pontrjagin 类重建
from .index import (
    Mod24Service,
    RigidityService,
    ReconstructService,
    mod24_service,
    rigidity_service,
    reconstruct_service,
)

# 等变 Lefschetz：局部项、(∗) 恒等式、n < m 界
from .lefschetz import (
    LefschetzService,
    StarService,
    PetrieService,
    lefschetz_service,
    star_service,
    petrie_service,
)

# Jacobi 数值校验
from .jacobi import JacobiService, jacobi_service

# 随机性质测试
from .properties import PropertyService, property_service

__all__ = [
    "BaseCheckService",
    "Mod24Service",
    "RigidityService",
    "ReconstructService",
    "mod24_service",
    "rigidity_service",
    "reconstruct_service",
    "LefschetzService",
    "StarService",
    "PetrieService",
    "lefschetz_service",
    "star_service",
    "petrie_service",
    "JacobiService",
    "jacobi_service",
    "PropertyService",
    "property_service",
]
