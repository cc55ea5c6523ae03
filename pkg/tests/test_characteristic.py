from fractions import Fraction
from math import comb

import pytest

from src.algebra import LaurentPoly, TruncPoly, pair_fundamental
from src.characteristic import (
    aroof_genus,
    cp_tangent_bundle,
    gamma_bundle,
    genus_coefficients,
    genus_from_pontrjagin,
    jacobi_index_from_weights,
    multiplicative_class,
    phi_series,
    pontrjagin_from_genus,
    signature,
    spin_gamma_bundle,
    spinor_character,
    spinc_twist_index,
    standard_pontrjagin,
    twist_UV,
)
from src.common.exceptions import NonIntegralIndex, OddHalfWeight, UnpairedRoots
from src.common.states import SeriesId
from src.services.index import SpincData, index_series, index_twisted, standard_aroof

F = Fraction


def test_genus_coefficients():
    assert genus_coefficients(SeriesId.AROOF, 4) == (1, 0, F(-1, 24), 0, F(7, 5760))
    assert genus_coefficients(SeriesId.L, 4) == (1, 0, F(1, 3), 0, F(-1, 45))


@pytest.mark.parametrize(
    "m, aroof, sig",
    [
        (2, F(-1, 8), 1),
        (3, F(0), 0),
        (4, F(3, 128), 1),
    ],
)
def test_cp_genera(m, aroof, sig):
    p = standard_pontrjagin(m)
    assert aroof_genus(p) == aroof
    assert signature(p) == sig


@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_tangent_model_matches_pontrjagin_route(m):
    """由形式根与由 Pontrjagin 类得到的 Â 相同"""
    assert standard_aroof(m) == genus_from_pontrjagin(SeriesId.AROOF, standard_pontrjagin(m))


@pytest.mark.parametrize("series_id", [SeriesId.AROOF, SeriesId.L])
def test_pontrjagin_genus_inverse(series_id):
    p = standard_pontrjagin(6)
    assert pontrjagin_from_genus(series_id, genus_from_pontrjagin(series_id, p)) == p


def test_multiplicative_class_needs_pairs():
    with pytest.raises(UnpairedRoots):
        multiplicative_class(SeriesId.AROOF, gamma_bundle([(1, 0, 1)]), 2)


def test_odd_pontrjagin_rejected():
    with pytest.raises(ValueError):
        genus_from_pontrjagin(SeriesId.L, TruncPoly(3, [1, 1]))


@pytest.mark.parametrize("m", [1, 2, 3, 6])
@pytest.mark.parametrize("k", [-1, 0, 1, 2, 3])
def test_todd_twisted_index(m, k):
    """c = (m+1)x 时 ind(∂_c ⊗ γ^k) = χ(CP^m, O(k))"""
    expected = comb(m + k, m) if k >= 0 else 0
    assert index_twisted(SpincData.standard(m), gamma_bundle([(k, 0, 1)])) == expected


def test_trivial_twist_series_constant_term():
    """V 为空时 q^0 系数是 Todd 亏格 1"""
    for m in (1, 2, 4):
        series = index_series(SpincData.standard(m), twist_UV(cp_tangent_bundle(m), gamma_bundle([]), m, 2))
        assert series[0] == 1


def test_spinor_character_rank_two():
    """Δ(2γ) 的特征 (e^{x/2} + e^{−x/2})²，常数项为 4"""
    character = spinor_character(spin_gamma_bundle(2), 2)
    assert character.coeffs[0] == 4
    assert character.coeffs[1] == 0
    assert character.coeffs[2] == 1


def test_spinor_character_needs_spin_bundle():
    with pytest.raises(UnpairedRoots):
        spinor_character(cp_tangent_bundle(2), 2)


def test_phi_series_low_orders():
    """w = 2：q^0 为 λ − λ^{-1}，q^1 为 −λ³ + 3λ − 3λ^{-1} + λ^{-3}"""
    series = phi_series(2, 3)
    assert series[0] == LaurentPoly({1: 1, -1: -1})
    assert series[1] == LaurentPoly({3: -1, 1: 3, -1: -3, -3: 1})


def test_phi_series_odd_weight():
    with pytest.raises(OddHalfWeight):
        phi_series(3, 2)


def test_weight_indices():
    # 加倍后的权重：未加倍 ŝ = (1, 1)，m̂ = (1, 1, 2)
    assert jacobi_index_from_weights([(2, 2)], [2, 2, 4]) == -2
    assert spinc_twist_index([(2, 1)], [(2, 1)], [2]) == F(1, 2)
    with pytest.raises(NonIntegralIndex):
        jacobi_index_from_weights([], [2])


def test_pairing_reads_top_degree():
    assert pair_fundamental(TruncPoly(2, [5, 0, 7])) == 7


def test_bundle_rank_and_direct_sum():
    assert cp_tangent_bundle(3).virtual_rank == 6
    total = gamma_bundle([(1, 0, 1)]).direct_sum(gamma_bundle([(2, 0, 1)]))
    assert total.virtual_rank == 2
    with pytest.raises(ValueError):
        total.direct_sum(cp_tangent_bundle(2))
