import numpy as np
import pytest

from src.services.properties import PROPERTY_SUITE, PropertyService, run_properties


def test_suite_passes():
    reports = run_properties(seed=0, trials=5)
    assert [r.check for r in reports] == [f"properties[{name}]" for name, _ in PROPERTY_SUITE]
    failures = {r.check: r.witness for r in reports if not r.passed}
    assert not failures


@pytest.mark.parametrize("seed", [1, 2024])
def test_suite_is_deterministic(seed):
    first = [r.to_dict() for r in run_properties(seed, trials=3)]
    second = [r.to_dict() for r in run_properties(seed, trials=3)]
    assert first == second


def test_property_service():
    reports = PropertyService({}).run(threads=1, seed=5, trials=2)
    assert len(reports) == len(PROPERTY_SUITE)
    assert all(r.passed for r in reports)


@pytest.mark.parametrize(
    "name",
    ["rf-reduce", "index-oracle", "multiplicative-class", "chern-character", "twist-integrality"],
)
def test_named_invariant_with_twenty_trials(name):
    check = dict(PROPERTY_SUITE)[name]
    report = check(np.random.default_rng(11), 11, 20)
    assert report.check == f"properties[{name}]"
    assert report.passed, report.witness
    assert report.params == {"seed": 11, "trials": 20}


def test_pair_fundamental_property():
    report = dict(PROPERTY_SUITE)["pair-fundamental"](np.random.default_rng(4), 4, 10)
    assert report.passed, report.witness
