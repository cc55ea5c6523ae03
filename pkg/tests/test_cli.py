import json

import pytest

from src import main
from src.common import global_config
from tests.conftest import BROKEN_CP1


def _read(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def test_mod24_passes(tmp_path, capsys):
    out = tmp_path / "mod24.json"
    assert main(["mod24", "--m", "3,4", "--b-range", "0..30", "--out", str(out)]) == 0
    report = _read(out)
    assert report["passed"] is True
    assert report["run"]["command"] == "mod24"
    assert [r["check"] for r in report["reports"]] == ["mod24[m=3]", "mod24[m=4]"]
    assert "mod24[m=3]" in capsys.readouterr().out


def test_reruns_are_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["rigidity", "--m", "3..4", "--q-order", "1", "--threads", "2"]
    assert main(argv + ["--out", str(first)]) == 0
    assert main(argv[:-2] + ["--threads", "1", "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_output_from_env(tmp_path, monkeypatch):
    out = tmp_path / "env" / "report.json"
    monkeypatch.setenv("VERIFY_OUTPUT", str(out))
    assert main(["reconstruct", "--m", "4"]) == 0
    assert _read(out)["reports"][0]["check"] == "reconstruct[m=4]"


def test_bad_range_exits_2(tmp_path):
    out = tmp_path / "bad.json"
    assert main(["mod24", "--m", "5..3", "--out", str(out)]) == 2
    report = _read(out)
    assert report["passed"] is False
    assert report["run"]["error"]["type"] == "ConfigError"


def test_bad_tolerance_exits_2(tmp_path):
    out = tmp_path / "tol.json"
    assert main(["star", "--tolerance", "-1", "--out", str(out)]) == 2
    assert _read(out)["run"]["error"]["type"] == "ConfigError"


def test_unknown_command():
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2


def test_missing_fixture_exits_2(tmp_path):
    out = tmp_path / "missing.json"
    code = main(["lefschetz", "--fixture", str(tmp_path / "nope.json"), "--out", str(out)])
    assert code == 2
    report = _read(out)
    assert report["passed"] is False
    assert report["run"]["error"]["type"] == "FixtureParseError"
    assert report["reports"] == []


def test_failing_fixture_exits_1(tmp_path):
    fixture = tmp_path / "broken.json"
    fixture.write_text(json.dumps(BROKEN_CP1), encoding="utf-8")
    out = tmp_path / "broken-report.json"
    code = main(["lefschetz", "--fixture", str(fixture), "--no-vanishing", "--out", str(out)])
    assert code == 1
    report = _read(out)
    assert report["passed"] is False
    (entry,) = report["reports"]
    assert entry["check"] == "lefschetz[broken]"
    assert entry["status"] == "fail"


def test_generate_then_check(tmp_path):
    fixtures = tmp_path / "fixtures"
    code = main([
        "generate", "--family", "linear", "--m", "2", "--max-weight", "2",
        "--out-dir", str(fixtures), "--out", str(tmp_path / "generate.json"),
    ])
    assert code == 0
    assert len(list(fixtures.glob("*.json"))) == 4

    out = tmp_path / "star.json"
    assert main(["star", "--fixture", str(fixtures), "--out", str(out)]) == 0
    assert len(_read(out)["reports"]) == 6


def test_properties_command(tmp_path):
    out = tmp_path / "properties.json"
    assert main(["properties", "--trials", "2", "--seed", "9", "--out", str(out)]) == 0
    report = _read(out)
    assert report["run"]["seed"] == 9
    assert report["run"]["trials"] == 2


def test_q_order_falls_back_to_config(tmp_path):
    out = tmp_path / "lefschetz.json"
    assert main(["lefschetz", "--m", "2", "--max-weight", "2", "--out", str(out)]) == 0
    document = _read(out)
    assert document["run"]["q_order"] is None
    expected = global_config.get("algebra.q_order")
    assert {r["params"]["q_order"] for r in document["reports"]} == {expected}


def test_unexpected_error_exits_1(tmp_path, monkeypatch):
    from src.middleware import error_handling
    from src.services import mod24_service

    logged = []
    monkeypatch.setattr(
        error_handling, "critical", lambda message, *args, **kwargs: logged.append(message)
    )

    def explode(**kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(mod24_service, "run", explode)
    out = tmp_path / "crash.json"
    assert main(["mod24", "--m", "4", "--out", str(out)]) == 1
    report = _read(out)
    assert report["passed"] is False
    assert report["run"]["error"] == {"type": "RuntimeError", "message": "boom"}
    assert len(logged) == 1 and "RuntimeError" in logged[0]
