from fractions import Fraction

import pytest

from src.algebra import TruncPoly
from src.common import CheckStatus
from src.common.exceptions import DimensionTooSmall, InfeasibleParams
from src.services.index import (
    PontrjaginCandidate,
    SpincData,
    aroof_of,
    mod24_check,
    mod24_index,
    perturbation_check,
    reconstruct_pontrjagin,
    relation_kernels,
    rigidity_check,
    rigidity_relations,
    upper_bound_relation,
)
from src.services.index import Mod24Service, ReconstructService, RigidityService


# ---------- Spin^c 数据 ----------
def test_spinc_parity():
    assert SpincData.standard(3).c1 == 4
    with pytest.raises(ValueError):
        SpincData(3, 3)


def test_pontrjagin_candidate_padding():
    candidate = PontrjaginCandidate(6, (7,))
    assert candidate.p == (7, 0, 0)
    with pytest.raises(ValueError):
        PontrjaginCandidate(3, (1, 2))


def test_standard_candidate():
    """(1+x²)^5 在 m=4：p1 = 5，p2 = 10"""
    assert PontrjaginCandidate.standard(4).p == (5, 10)
    assert PontrjaginCandidate.standard(4, p1=29).p == (29, 10)


# ---------- mod 24 ----------
def test_mod24_small():
    report = mod24_check(4, range(0, 49))
    assert report.status is CheckStatus.PASS
    assert report.value["integral_b"] == [5, 29]
    assert report.value["residues"] == [5]


def test_mod24_affine_in_b():
    """指标 = Q − b/24"""
    q_value = mod24_index(5, 0)
    for b in (1, 6, 30):
        assert mod24_index(5, b) == q_value - Fraction(b, 24)


def test_mod24_independent_of_higher_classes():
    assert mod24_index(6, 7, higher_shift=3) == mod24_index(6, 7)


def test_mod24_dimension():
    with pytest.raises(DimensionTooSmall):
        mod24_check(2, range(0, 24))


@pytest.mark.slow
@pytest.mark.parametrize("m", range(3, 12))
def test_mod24_acceptance_grid(m):
    report = mod24_check(m, range(0, 73))
    assert report.passed
    assert all((b - m - 1) % 24 == 0 for b in report.value["integral_b"])


# ---------- 刚性关系 ----------
def test_relation_counts():
    assert relation_kernels(2) == ()
    assert len(relation_kernels(3)) == 1
    assert len(relation_kernels(4)) == 1
    assert len(relation_kernels(7)) == 3


def test_relation_kernel_m3():
    """m=3 唯一的核是 e^x − e^{−x} = 2x + x³/3"""
    (kernel,) = relation_kernels(3)
    assert kernel == TruncPoly(3, [0, 2, 0, Fraction(1, 3)])


def test_rigidity_dimension():
    with pytest.raises(DimensionTooSmall):
        rigidity_relations(2, TruncPoly.one(2))


@pytest.mark.parametrize("m", range(3, 9))
def test_rigidity_standard(m):
    report = rigidity_check(m)
    assert report.status is CheckStatus.PASS
    assert all(v == 0 for v in report.value["relations"])


@pytest.mark.slow
@pytest.mark.parametrize("m", range(9, 13))
def test_rigidity_standard_large(m):
    assert rigidity_check(m).passed


@pytest.mark.parametrize("m", [3, 4, 7])
def test_rigidity_detects_perturbation(m):
    report = perturbation_check(m)
    assert report.passed
    assert any(v != 0 for v in report.value["relations"])


def test_rigidity_fails_on_wrong_p1():
    aroof = aroof_of(PontrjaginCandidate.standard(5, p1=7))
    report = rigidity_check(5, aroof, label="p1=7")
    assert report.status is CheckStatus.FAIL
    assert "k" in report.witness


@pytest.mark.parametrize("m, b", [(3, 6), (3, 8), (4, 7), (5, 10)])
def test_upper_bound_relation(m, b):
    """q^0 系数为 2^{b−m−2}，而不动点处的指标为负"""
    report = upper_bound_relation(m, b, order=1)
    assert report.passed
    assert report.value["first_nonzero_order"] == 0
    assert report.value["first_nonzero"] == 2 ** (b - m - 2)
    assert report.value["index_I"] < 0


@pytest.mark.parametrize("m, b", [(3, 5), (4, 8)])
def test_upper_bound_infeasible(m, b):
    with pytest.raises(InfeasibleParams):
        upper_bound_relation(m, b, order=1)


# ---------- Pontrjagin 类重建 ----------
@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_reconstruct_standard(m):
    candidate, stages = reconstruct_pontrjagin(m)
    assert candidate == PontrjaginCandidate.standard(m)
    assert stages["after_signature"] == 0


def test_reconstruct_rank_stages():
    _, stages = reconstruct_pontrjagin(6)
    assert stages["unknowns"] == 3
    assert stages["relations"] == 2
    assert stages["rank"] == 2
    assert stages["after_relations"] == 1


@pytest.mark.slow
@pytest.mark.parametrize("m", [8, 10])
def test_reconstruct_standard_large(m):
    candidate, _ = reconstruct_pontrjagin(m)
    assert candidate == PontrjaginCandidate.standard(m)


# ---------- 服务 ----------
def test_index_services():
    config = {"q_order": 4}
    mod24 = Mod24Service(config).run(threads=2, m_values=[3, 4], b_values=range(0, 30))
    assert [r.check for r in mod24] == ["mod24[m=3]", "mod24[m=4]"]
    assert all(r.passed for r in mod24)

    rigidity = RigidityService(config).run(threads=1, m_values=[3, 5], upper_bound_b=8, q_order=1)
    assert len(rigidity) == 6
    assert all(r.passed for r in rigidity)
    assert "upper-bound[m=5,b=8]" in [r.check for r in rigidity]

    reconstruct = ReconstructService(config).run(threads=1, m_values=[4])
    assert reconstruct[0].check == "reconstruct[m=4]"
    assert reconstruct[0].passed
