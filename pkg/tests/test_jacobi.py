import numpy as np
import pytest

from src.common import CheckStatus
from src.common.exceptions import (
    CancellationFailure,
    MatrixNotUnimodular,
    NonIntegralIndex,
    PoleProximity,
    TailBoundViolation,
)
from src.services.jacobi import (
    JacobiService,
    ModularPoint,
    NumericPolicy,
    S_MATRIX,
    T_MATRIX,
    TS_MATRIX,
    FY_eval,
    FY_index,
    aggregate,
    index_law_check,
    index_modular_check,
    lattice_shift_check,
    modular_check,
    nu_numeric,
    oddness_check,
    phi_cross_check,
    phi_eval,
    phi_grid,
    real_line_pole_scan,
    residual,
    write_scan_csv,
)
from src.services.lefschetz import Fixture, LinearModelSpec, VAssignment, linear_model

POINTS = [
    ModularPoint(1j, 0.3),
    ModularPoint(0.2 + 0.8j, 0.41 + 0.1j),
    ModularPoint(-0.35 + 1.2j, 0.77 - 0.3j),
]


# ---------- Φ ----------
def test_point_requires_upper_half_plane():
    with pytest.raises(ValueError):
        ModularPoint(-1j, 0.1)


def test_phi_zero_at_origin(policy):
    assert abs(phi_eval(ModularPoint(1j, 0), policy)) < 1e-15


def test_phi_near_origin_is_linear(policy):
    """z → 0 时 Φ(τ, z) ≈ 2πi·z"""
    z = 1e-7
    assert phi_eval(ModularPoint(1j, z), policy) == pytest.approx(2j * np.pi * z, rel=1e-6)


def test_phi_grid_matches_pointwise(policy):
    zs = np.array([0.1, 0.25 + 0.05j, 0.6])
    grid = phi_grid(1j, zs, policy)
    for z, value in zip(zs, grid):
        assert residual(value, phi_eval(ModularPoint(1j, z), policy)) < 1e-12


def test_truncation_meets_tolerance(policy):
    n, bound = policy.truncation(abs(np.exp(-2 * np.pi)), 1.0)
    assert bound <= policy.tolerance / 10
    assert n >= 1


def test_fixed_truncation_too_short():
    policy = NumericPolicy(product_truncation=1)
    with pytest.raises(TailBoundViolation):
        phi_eval(ModularPoint(0.5j, 0.3), policy)


def test_term_cap_too_small():
    policy = NumericPolicy(max_product_terms=2, tolerance=1e-12)
    with pytest.raises(TailBoundViolation):
        phi_eval(ModularPoint(0.3j, 0.3), policy)


def test_policy_from_config():
    policy = NumericPolicy.from_config({"tolerance": 1e-6, "max_product_terms": 50}, tolerance=None)
    assert policy.tolerance == 1e-6
    assert policy.max_product_terms == 50
    assert NumericPolicy.from_config({}, tolerance=1e-3).tolerance == 1e-3


# ---------- 变换律 ----------
@pytest.mark.parametrize("point", POINTS)
@pytest.mark.parametrize("shift", [(1, 0), (0, 1), (1, 1), (-1, 2), (2, -1)])
def test_lattice_shift(point, shift, policy):
    report = lattice_shift_check(point, shift, policy)
    assert report.status is CheckStatus.NUMERIC_PASS, report.witness
    assert report.check == f"jacobi[lattice:{shift[0]},{shift[1]}]"


@pytest.mark.parametrize("point", POINTS)
def test_oddness(point, policy):
    assert oddness_check(point, policy).passed


@pytest.mark.parametrize("point", POINTS)
@pytest.mark.parametrize("matrix", [S_MATRIX, T_MATRIX, TS_MATRIX])
def test_modular(point, matrix, policy):
    report = modular_check(point, matrix, policy)
    assert report.passed, report.witness


def test_modular_rejects_non_unimodular(policy):
    with pytest.raises(MatrixNotUnimodular):
        modular_check(POINTS[0], (1, 1, 1, 1), policy)


def test_aggregate_and_residual(policy):
    report = aggregate("demo", [oddness_check(p, policy) for p in POINTS])
    assert report.status is CheckStatus.NUMERIC_PASS
    # 符号取反的比较必然失败
    value = phi_eval(POINTS[0], policy)
    assert residual(value, -value) == pytest.approx(2.0)


# ---------- F_Y ----------
def test_fy_index():
    assert FY_index([2], [2]) == 0
    assert FY_index([1, 1], []) == -1
    assert FY_index([1, 2], [3]) == 2
    with pytest.raises(NonIntegralIndex):
        FY_index([1], [])


def test_fy_validation(policy):
    with pytest.raises(ValueError):
        FY_eval([0], [], POINTS[0], policy)
    with pytest.raises(PoleProximity):
        FY_eval([1], [], ModularPoint(1j, 0), policy)


@pytest.mark.parametrize("system", [((2,), (2,)), ((2, 4), (2,)), ((2, -2), (4,))])
@pytest.mark.parametrize("shift", [(1, 0), (0, 1), (1, 1)])
def test_fy_index_law(system, shift, policy):
    tangent, v = system
    report = index_law_check(tangent, v, POINTS[1], shift, policy)
    assert report.passed, report.witness


@pytest.mark.parametrize("system", [((2,), (2,)), ((2, 2, -4), (2, 4))])
def test_fy_modular(system, policy):
    tangent, v = system
    report = index_modular_check(tangent, v, POINTS[2], S_MATRIX, policy)
    assert report.passed, report.witness


# ---------- 精确/数值交叉校验 ----------
@pytest.mark.parametrize("z", [0.13, 0.5, 0.87])
@pytest.mark.parametrize("tau", [1j, 0.3 + 0.7j])
def test_phi_cross_check(z, tau, policy):
    report = phi_cross_check(ModularPoint(tau, z), 12, policy)
    assert report.status is CheckStatus.NUMERIC_PASS, report.witness


def test_cross_check_requires_real_z(policy):
    with pytest.raises(ValueError):
        phi_cross_check(ModularPoint(1j, 0.2 + 0.1j), 4, policy)


# ---------- 局部数据与实轴扫描 ----------
def test_nu_sum_matches_lambda(cp1, policy):
    """CP¹ 上 Σν_Y 的 q^0 部分是 λ，τ 较大时高阶项可忽略"""
    point = ModularPoint(3j, 0.3)
    total = sum(nu_numeric(c, (), point, policy) for c in cp1.components)
    assert total == pytest.approx(np.exp(2j * np.pi * 0.3), rel=1e-6)


def test_pole_scan_cp1(cp1, policy, tmp_path):
    report, rows = real_line_pole_scan(cp1, 1j, 51, policy, label="cp1")
    assert report.status is CheckStatus.NUMERIC_PASS, report.witness
    assert report.check == "pole-scan[cp1]"
    assert rows.shape == (51 * 10, 4)
    assert report.value["exact_deviation"] < policy.cross_check_tolerance

    path = write_scan_csv(rows, str(tmp_path / "scan" / "cp1.csv"))
    with open(path, encoding="utf-8") as f:
        assert f.readline().strip() == "z,re,im,abs"
    assert np.loadtxt(path, delimiter=",", skiprows=1).shape == rows.shape


def test_pole_scan_twisted(cp2_normalized, policy):
    v = VAssignment.from_terms([(1, 0, 1)])
    report, _ = real_line_pole_scan(cp2_normalized, 1j, 31, policy, v=v, label="cp2-gamma")
    assert report.passed, report.witness


def test_pole_scan_detects_pole(broken_cp1, policy):
    report, _ = real_line_pole_scan(broken_cp1.data, 1j, 51, policy)
    assert report.status is CheckStatus.FAIL
    assert report.value["fine_max"] > report.value["coarse_max"]
    with pytest.raises(CancellationFailure):
        real_line_pole_scan(broken_cp1.data, 1j, 51, policy, strict=True)


def test_pole_scan_isolated_only(policy):
    data = linear_model(LinearModelSpec(m=2, ambient_weights=(0, 0, 1), allow_repeated=True))
    with pytest.raises(ValueError):
        real_line_pole_scan(data, 1j, 11, policy)


# ---------- 服务 ----------
def test_jacobi_service(cp1, tmp_path):
    service = JacobiService({"tolerance": 1e-9})
    fixture = Fixture(name="cp1", data=cp1)
    reports = service.run(
        threads=2, seed=7, samples=3, fixtures=[fixture], scan_points=21, csv_dir=str(tmp_path)
    )
    names = [r.check for r in reports]
    assert names == [
        "jacobi[lattice]",
        "jacobi[oddness]",
        "jacobi[modular:S]",
        "jacobi[modular:T]",
        "jacobi[modular:TS]",
        "jacobi[F-index]",
        "jacobi[phi-cross-check]",
        "pole-scan[cp1]",
    ]
    assert all(r.passed for r in reports), [r.witness for r in reports if not r.passed]
    assert (tmp_path / "cp1.csv").exists()


def test_jacobi_service_is_seeded(cp1):
    service = JacobiService({})
    first = service.run(threads=1, seed=3, samples=2)
    second = service.run(threads=1, seed=3, samples=2)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]
