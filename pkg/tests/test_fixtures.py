import json

import pytest

from src.common.exceptions import FixtureParseError, InfeasibleParams
from src.common.states import FixtureFamily
from src.routes.router import load_fixtures
from src.services.lefschetz import (
    dump_fixture,
    fixture_from_dict,
    fixture_to_dict,
    generate_fixtures,
    linear_family,
    load_fixture,
    synthetic_star,
)
from src.services.lefschetz.generator import alternating_weights, nonzero_squares, solve_star


def test_alternating_weights():
    assert alternating_weights(4) == (0, 1, -1, 2, -2)


def test_nonzero_squares():
    assert nonzero_squares(12, 4) == (3, 1, 1, 1)
    assert nonzero_squares(15, 3) is None
    assert nonzero_squares(0, 0) == ()


def test_solve_star_infeasible():
    with pytest.raises(InfeasibleParams):
        solve_star(3, 3, alternating_weights(3), 15, 4)


def test_linear_family_infeasible():
    """m=3、权重上限 2 时没有和能被 4 整除的权重组"""
    with pytest.raises(InfeasibleParams):
        linear_family(3, 2)


def test_dump_and_load(tmp_path):
    fixture = linear_family(2, 2)[0]
    path = tmp_path / "linear.json"
    dump_fixture(fixture, str(path))
    loaded = load_fixture(str(path))
    assert loaded.name == "linear"
    assert loaded.data == fixture.data
    assert loaded.family is FixtureFamily.LINEAR


def test_components_document():
    fixture = synthetic_star(3, 1)
    document = fixture_to_dict(fixture)
    assert "components" in document
    assert fixture_from_dict(document, "star").data == fixture.data


def test_fixture_with_v():
    document = {
        "m": 2,
        "ambientWeights": [0, 1, 2],
        "qOrder": 3,
        "V": [{"gammaPower": 1, "character": -1, "multiplicity": 2}],
    }
    fixture = fixture_from_dict(document)
    assert fixture.q_order == 3
    (summand,) = fixture.v.bundle.summands
    assert (summand.root, summand.weight, summand.multiplicity) == (1, -2, 2)
    assert fixture_to_dict(fixture)["V"] == document["V"]


@pytest.mark.parametrize(
    "document",
    [
        {},
        {"m": 2},
        {"m": 2, "ambientWeights": [0, 1, 1]},
        {"m": "two", "ambientWeights": [0, 1, 2]},
        {"m": 1, "n": -2, "components": [{"gammaWeight": 0, "normalWeights": [1, 2], "normalRoots": [-1]}]},
        {"m": 1, "n": -2, "components": [{"gammaWeight": 0, "normalWeights": [0]}, {"gammaWeight": 1, "normalWeights": [-1]}]},
    ],
)
def test_bad_documents(document):
    with pytest.raises(FixtureParseError):
        fixture_from_dict(document)


def test_unreadable_files(tmp_path):
    with pytest.raises(FixtureParseError):
        load_fixture(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(FixtureParseError):
        load_fixture(str(broken))
    listing = tmp_path / "list.json"
    listing.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(FixtureParseError):
        load_fixture(str(listing))


def test_generate_linear(tmp_path):
    paths = generate_fixtures(FixtureFamily.LINEAR, {"m": 2, "max_weight": 2}, str(tmp_path))
    assert len(paths) == 3
    index = json.loads((tmp_path / "index.json").read_text(encoding="utf-8"))
    assert index["family"] == "linear"
    assert len(index["fixtures"]) == 3
    # 目录读取时跳过 index.json，按文件名排序
    loaded = load_fixtures([str(tmp_path)])
    assert [f.name for f in loaded] == sorted(f.name for f in loaded)
    assert len(loaded) == 3


def test_generate_is_deterministic(tmp_path):
    first = generate_fixtures(FixtureFamily.PETRIE_EDGE, {"m": 3, "n": 3}, str(tmp_path / "a"))
    second = generate_fixtures(FixtureFamily.PETRIE_EDGE, {"m": 3, "n": 3}, str(tmp_path / "b"))
    with open(first[0], "rb") as f1, open(second[0], "rb") as f2:
        assert f1.read() == f2.read()
