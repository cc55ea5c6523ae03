import os

# 测试时不写文件日志
os.environ.setdefault("APP_LOG_DIR", "")

import pytest

from src.services.jacobi import NumericPolicy
from src.services.lefschetz import (
    FixedPointData,
    LinearModelSpec,
    fixture_from_dict,
    linear_model,
)

RUN_ENV = ("VERIFY_SEED", "VERIFY_Q_ORDER", "VERIFY_TOLERANCE", "VERIFY_OUTPUT", "VERIFY_THREADS")

# CP¹ 的两个孤立点，第二个点的定向符号取反：局部项之和在 λ=1 处留下极点
BROKEN_CP1 = {
    "m": 1,
    "n": -2,
    "spincC1": 2,
    "components": [
        {"gammaWeight": 0, "spincWeight": 0, "normalWeights": [1], "orientation": -1},
        {"gammaWeight": 1, "spincWeight": 2, "normalWeights": [-1], "orientation": 1},
    ],
}


@pytest.fixture(autouse=True)
def clean_run_env(monkeypatch):
    for name in RUN_ENV:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def cp1() -> FixedPointData:
    return linear_model(LinearModelSpec(m=1, ambient_weights=(0, 1)))


@pytest.fixture
def cp2_normalized() -> FixedPointData:
    return linear_model(LinearModelSpec(m=2, ambient_weights=(0, 1, 2), normalize=True))


@pytest.fixture
def broken_cp1():
    return fixture_from_dict(BROKEN_CP1, "broken_cp1")


@pytest.fixture
def policy() -> NumericPolicy:
    return NumericPolicy()
