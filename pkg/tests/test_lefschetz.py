from fractions import Fraction

import pytest

from src.algebra import LaurentPoly
from src.common import CheckStatus
from src.common.exceptions import (
    DuplicateWeights,
    InfeasibleParams,
    InvalidFixedPointData,
    MissingNormalization,
    PoleSurvivesReduction,
    ZeroNormalWeight,
)
from src.services.index import SpincData
from src.services.lefschetz import (
    FixedPointData,
    Fixture,
    LefschetzService,
    LinearModelSpec,
    PetrieService,
    StarService,
    VAssignment,
    build_bound_V,
    isolated_component,
    jacobi_index_IY,
    lefschetz_sum,
    linear_family,
    linear_model,
    petrie_bound_report,
    petrie_edge,
    star_invariant,
    synthetic_star,
    vanishing_assignment,
    vanishing_report,
)


# ---------- 数据模型 ----------
def test_linear_model_cp1(cp1):
    first, second = cp1.components
    assert cp1.n == -2
    assert cp1.gamma_weights == (0, 2)
    assert first.normal_weights == (2,)
    assert second.normal_weights == (-2,)
    assert second.spinc_weight == 4
    assert first.orientation == second.orientation == -1


def test_linear_model_repeated_weights():
    """(0, 0, 1)：一个 CP¹ 分支加一个孤立点"""
    data = linear_model(LinearModelSpec(m=2, ambient_weights=(0, 0, 1), allow_repeated=True))
    assert [c.d for c in data.components] == [1, 0]
    assert data.components[0].normal_rank == 1
    assert data.components[1].normal[0].multiplicity == 2
    assert data.euler_characteristic() == 3


def test_normalization_rotates_zero_first(cp2_normalized):
    assert cp2_normalized.is_normalized
    assert cp2_normalized.gamma_weights == (0, -2, 2)


def test_linear_model_errors():
    with pytest.raises(DuplicateWeights):
        LinearModelSpec(m=2, ambient_weights=(0, 1, 1))
    with pytest.raises(DuplicateWeights):
        LinearModelSpec(m=1, ambient_weights=(0, 0), allow_repeated=True)
    with pytest.raises(InvalidFixedPointData):
        LinearModelSpec(m=2, ambient_weights=(0, 1))
    with pytest.raises(MissingNormalization):
        linear_model(LinearModelSpec(m=1, ambient_weights=(0, 1), normalize=True))
    with pytest.raises(MissingNormalization):
        linear_model(LinearModelSpec(m=3, ambient_weights=(0, -3, -2, 1), normalize=True))


def test_fixed_point_data_errors():
    with pytest.raises(ZeroNormalWeight):
        isolated_component([0], 0)
    with pytest.raises(InvalidFixedPointData):
        FixedPointData(m=1, components=(isolated_component([1], 0), isolated_component([-1], 0)), n=-2, spinc_c1=2)
    with pytest.raises(InvalidFixedPointData):
        FixedPointData(m=1, components=(isolated_component([1], 0),), n=-2, spinc_c1=2)


def test_v_restriction(cp2_normalized):
    v = VAssignment.from_terms([(1, 0, 1), (0, 3, 2)])
    component = cp2_normalized.components[1]
    restricted = v.restrict(component)
    assert [(s.root, s.weight, s.multiplicity) for s in restricted] == [(1, -2, 1), (0, 6, 2)]
    assert v.fixed_rank(cp2_normalized.components[0]) == 1


# ---------- Lefschetz 求和 ----------
def test_cp1_sum_is_lambda(cp1):
    total, report = lefschetz_sum(cp1, order=2, label="cp1")
    assert report.status is CheckStatus.PASS
    assert report.check == "lefschetz[cp1]"
    assert report.value["coefficients"][0] == LaurentPoly.monomial(1)
    assert report.value["at_lambda_1"][0] == 1


@pytest.mark.parametrize("m, max_weight", [(2, 2), (3, 3)])
def test_linear_family_sums(m, max_weight):
    for fixture in linear_family(m, max_weight):
        _, report = lefschetz_sum(fixture.data, order=2, label=fixture.name)
        assert report.passed, report.witness


def test_linear_family_dedup():
    assert len(linear_family(2, 2)) == 3


def test_linear_family_only_normalized():
    """(0, −3, −2, 1) 的平移量 −1 不是任何 a_j，不进入线性族"""
    fixtures = linear_family(3, 3)
    assert all(f.data.is_normalized for f in fixtures)
    assert "linear_m3_0_-3_-2_1" not in [f.name for f in fixtures]
    with pytest.raises(InfeasibleParams):
        linear_family(1, 3)


def test_twisted_sum(cp2_normalized):
    v = VAssignment.from_terms([(1, 0, 1)])
    _, report = lefschetz_sum(cp2_normalized, v=v, order=1)
    assert report.passed, report.witness


def test_pole_survives(broken_cp1):
    _, report = lefschetz_sum(broken_cp1.data, order=1)
    assert report.status is CheckStatus.FAIL
    assert report.witness["order"] == 0
    with pytest.raises(PoleSurvivesReduction):
        lefschetz_sum(broken_cp1.data, order=1, strict=True)


def test_vanishing(cp2_normalized):
    spinc = SpincData(2, cp2_normalized.spinc_c1)
    report = vanishing_report(cp2_normalized, spinc, vanishing_assignment(cp2_normalized), 2)
    assert report.passed
    assert report.value["components_checked"] == 3


# ---------- 权重恒等式 ----------
def test_star_linear(cp2_normalized):
    report = star_invariant(cp2_normalized, "cp2")
    assert report.passed
    assert report.value["C_raw"] == 2


def test_star_fails_unnormalized():
    data = linear_model(LinearModelSpec(m=2, ambient_weights=(0, 1, 2)))
    report = star_invariant(data)
    assert report.status is CheckStatus.FAIL
    assert report.witness["component"] == 1


def test_synthetic_star_m4_n2():
    fixture = synthetic_star(4, 2)
    report = star_invariant(fixture.data)
    assert report.passed
    assert report.value["C_raw"] == 12


def test_jacobi_index_of_bound_bundle(cp2_normalized):
    v = build_bound_V(cp2_normalized)
    first = cp2_normalized.components[0]
    assert jacobi_index_IY(first, v.restrict(first)) == 0


def test_build_v_requires_normalization():
    data = FixedPointData(
        m=1,
        components=(isolated_component([1], 1), isolated_component([-1], 2)),
        n=-2,
        spinc_c1=2,
    )
    with pytest.raises(MissingNormalization):
        build_bound_V(data)


# ---------- n < m 界 ----------
def test_petrie_edge_m3_n3():
    fixture = petrie_edge(3, 3)
    report = petrie_bound_report(fixture.data, fixture.name)
    assert report.passed
    assert report.value["index_Y0"] == -9
    assert report.value["lhs"] == 24
    assert report.value["rhs"] == 6
    assert report.value["chain"]["lhs_le_rhs"] is False
    assert star_invariant(fixture.data).value["C_raw"] == 24


def test_petrie_linear_models():
    for fixture in linear_family(3, 3):
        report = petrie_bound_report(fixture.data, fixture.name)
        assert report.passed, report.witness
        assert report.value["index_Y0"] >= 0


# ---------- 服务 ----------
def test_services_report_per_fixture(broken_cp1):
    config = {"q_order": 1}
    fixtures = linear_family(2, 2)

    reports = LefschetzService(config).run(threads=2, fixtures=fixtures)
    assert len(reports) == 2 * len(fixtures)
    assert all(r.passed for r in reports)
    assert {r.params["q_order"] for r in reports} == {1}

    reports = LefschetzService(config).run(threads=1, fixtures=[broken_cp1], vanishing=False)
    assert [r.status for r in reports] == [CheckStatus.FAIL]

    reports = StarService(config).run(threads=1, fixtures=fixtures)
    assert len(reports) == 2 * len(fixtures)
    assert all(r.passed for r in reports)


def test_petrie_service_unnormalized():
    unnormalized = Fixture(
        name="shifted",
        data=FixedPointData(
            m=1,
            components=(isolated_component([1], 1), isolated_component([-1], 2)),
            n=-2,
            spinc_c1=2,
        ),
    )
    (report,) = PetrieService({}).run(threads=1, fixtures=[unnormalized])
    assert report.status is CheckStatus.FAIL
    assert report.witness["error"] == "MissingNormalization"


def test_c_raw_is_exact():
    fixture = synthetic_star(3, 0)
    assert isinstance(star_invariant(fixture.data).value["C_raw"], Fraction)
