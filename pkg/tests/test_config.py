import argparse

import pytest

from src.common import CommandName, RunConfig, global_config
from src.common.exceptions import ConfigError
from src.utils import parse_int_range, resolve_workers


def _args(**overrides) -> argparse.Namespace:
    values = {
        "command": "mod24",
        "fixture": None,
        "q_order": None,
        "tolerance": None,
        "out": None,
        "seed": None,
        "threads": None,
    }
    values.update(overrides)
    return argparse.Namespace(**values)


# ---------- 整数范围 ----------
def test_parse_int_range():
    assert parse_int_range("3..5,8") == [3, 4, 5, 8]
    assert parse_int_range("7") == [7]
    assert parse_int_range(" 1 , 2 ") == [1, 2]


@pytest.mark.parametrize("text", ["5..3", "a..b", "", "1..", "x"])
def test_parse_int_range_errors(text):
    with pytest.raises(ConfigError):
        parse_int_range(text)


# ---------- 运行配置 ----------
def test_defaults_from_config():
    config = RunConfig.resolve(_args(), global_config)
    assert config.command is CommandName.MOD24
    assert config.q_order is None
    assert config.seed == global_config.get("cli.seed")


def test_env_overrides_config(monkeypatch):
    monkeypatch.setenv("VERIFY_SEED", "11")
    monkeypatch.setenv("VERIFY_Q_ORDER", "3")
    monkeypatch.setenv("VERIFY_TOLERANCE", "1e-7")
    monkeypatch.setenv("VERIFY_OUTPUT", "out/env.json")
    config = RunConfig.resolve(_args(), global_config)
    assert (config.seed, config.q_order, config.tolerance) == (11, 3, 1e-7)
    assert config.output_path == "out/env.json"


def test_cli_overrides_env(monkeypatch):
    monkeypatch.setenv("VERIFY_SEED", "11")
    monkeypatch.setenv("VERIFY_OUTPUT", "out/env.json")
    config = RunConfig.resolve(_args(seed=2, out="cli.json", fixture=["a.json"]), global_config)
    assert config.seed == 2
    assert config.output_path == "cli.json"
    assert config.fixture_paths == ("a.json",)


@pytest.mark.parametrize(
    "overrides, env",
    [
        ({"q_order": -1}, {}),
        ({"tolerance": 0.0}, {}),
        ({}, {"VERIFY_SEED": "abc"}),
        ({}, {"VERIFY_TOLERANCE": "tiny"}),
    ],
)
def test_invalid_run_config(overrides, env, monkeypatch):
    for name, value in env.items():
        monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        RunConfig.resolve(_args(**overrides), global_config)


def test_params_exclude_output_and_threads():
    config = RunConfig.resolve(_args(threads="4", out="x.json"), global_config)
    assert set(config.to_params()) == {"command", "fixtures", "q_order", "tolerance", "seed"}


# ---------- 线程数 ----------
def test_resolve_workers(monkeypatch):
    assert resolve_workers(3) == 3
    assert resolve_workers("2") == 2
    assert resolve_workers(0) == 1
    assert resolve_workers("auto") >= 1
    assert resolve_workers("many") >= 1
    monkeypatch.setenv("VERIFY_THREADS", "2")
    assert resolve_workers(8) == 2
    assert resolve_workers("auto") <= 2


def test_config_source():
    assert global_config.source in (None, "config.yaml")
