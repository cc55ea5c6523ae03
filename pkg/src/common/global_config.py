import copy
import logging
import os
from threading import Lock
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)


# config.yaml 缺失或缺项时的取值
DEFAULT_CONFIG: Dict[str, Any] = {
    "algebra": {
        "q_order": 4,
    },
    "numeric": {
        "tolerance": 1e-9,
        "max_product_terms": 400,
        "refinement_growth": 0.05,
        "pole_threshold": 1e-6,
        "cross_check_tolerance": 1e-6,
    },
    "cli": {
        "seed": 0,
        "threads": "auto",
        "output": "reports/report.json",
    },
    "fixtures": {
        "output_dir": "fixtures",
        "max_weight": 3,
    },
}

# PyYAML 把 1e-9 这类不带小数点的写法读成字符串
FLOAT_KEYS = ("tolerance", "refinement_growth", "pole_threshold", "cross_check_tolerance")


def merge_config(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    """递归合并两层配置，返回新字典，update 中的值优先"""
    merged = copy.deepcopy(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_config(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


class GlobalConfig:
    """
    校验器的全局配置，进程内单例

    读取顺序：内置默认值，再合并 APP_CONFIG_FILE（默认 ./config.yaml）
    命令行参数与 VERIFY_* 环境变量的覆盖在 RunConfig 中处理
    """

    _instance: Optional["GlobalConfig"] = None
    _lock = Lock()
    _config_loaded = False

    def __new__(cls):
        with cls._lock:
            if cls._instance is None:
                cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        with self.__class__._lock:
            if self.__class__._config_loaded:
                return
            self._config: Dict[str, Any] = copy.deepcopy(DEFAULT_CONFIG)
            self._source: Optional[str] = None

            config_file = os.getenv("APP_CONFIG_FILE", "config.yaml")
            if os.path.exists(config_file):
                self.load_config_file(config_file)
            else:
                logger.debug(f"未找到配置文件 {config_file}，使用内置默认值")

            self.__class__._config_loaded = True

    @property
    def source(self) -> Optional[str]:
        """已合并的配置文件路径，未加载时为 None"""
        return self._source

    def load_config_file(self, file_path: str) -> bool:
        """
        合并一个 YAML 配置文件

        Returns:
            bool: 是否成功合并
        """
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            logger.error(f"读取配置文件失败: {file_path}, 错误: {e}")
            return False

        if not data:
            logger.warning(f"配置文件为空: {file_path}")
            return False
        if not isinstance(data, dict):
            logger.error(f"配置文件顶层必须是映射: {file_path}")
            return False

        unknown = sorted(set(data) - set(DEFAULT_CONFIG))
        if unknown:
            logger.warning(f"忽略未知配置段: {unknown}")
            data = {k: v for k, v in data.items() if k in DEFAULT_CONFIG}

        self._config = merge_config(self._config, data)
        self._coerce_numeric()
        self._source = file_path
        logger.info(f"已加载配置文件: {file_path}")
        return True

    def _coerce_numeric(self) -> None:
        numeric = self._config["numeric"]
        for key in FLOAT_KEYS:
            if key not in numeric:
                continue
            try:
                numeric[key] = float(numeric[key])
            except (TypeError, ValueError):
                logger.warning(f"numeric.{key} 不是数值: {numeric[key]!r}，改用默认值")
                numeric[key] = DEFAULT_CONFIG["numeric"][key]

    def get(self, key: str, default: Any = None) -> Any:
        """点号分隔的嵌套键，如 'numeric.tolerance'"""
        value: Any = self._config
        for part in key.split("."):
            if not isinstance(value, dict) or part not in value:
                return default
            value = value[part]
        return value

    def get_algebra_config(self) -> Dict[str, Any]:
        return dict(self._config["algebra"])

    def get_numeric_config(self) -> Dict[str, Any]:
        return dict(self._config["numeric"])

    def get_cli_config(self) -> Dict[str, Any]:
        return dict(self._config["cli"])

    def get_fixture_config(self) -> Dict[str, Any]:
        return dict(self._config["fixtures"])
