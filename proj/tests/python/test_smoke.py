"""Smoke tests for the python module."""

import pytest

perflat = pytest.importorskip("perflat")


def test_alpha_prefix():
    assert [perflat.alpha(n) for n in range(1, 12)] == [
        1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26,
    ]


def test_alpha_polynomial():
    assert perflat.alpha_polynomial(6) == [1, 5]


def test_family_lattice():
    lat = perflat.construct_ld(9, [])
    assert lat["support"] == list(range(1, 12))
    assert perflat.ld_determinant(9, []) == 1210
    mins = perflat.ld_minimal_vectors(9, [])
    assert mins["minimum"] == 4
    assert len(mins["representatives"]) == 70
    assert mins["d2_rank"] == 45


def test_bold_row_is_not_perfect():
    mins = perflat.ld_minimal_vectors(9, [4, 10])
    assert len(mins["representatives"]) == 54
    assert mins["d2_rank"] == 44


def test_sigma_and_bounds():
    assert perflat.sigma(3, 4) == 35
    rep = perflat.id_upper_bounds(8)
    assert rep["minkowski"] == 63
    assert rep["blichfeldt"] == 19
    assert rep["hermite"] == 16
    assert rep["best_known"] == 16


def test_is_perfect():
    a2 = [[2, -1], [-1, 2]]
    assert perflat.is_perfect(a2)
    assert not perflat.is_perfect([[1, 0], [0, 1]])


def test_essential_partner():
    assert perflat.essential_partner(6, [2, 5, 6, 9]) == [4, 7, 8, 11]


def test_enumerate_dimension_two():
    recs = perflat.enumerate_perfect(2)
    assert len(recs) == 1
    assert recs[0]["label"] == "A2"


def test_recover_roundtrip():
    gram = perflat.minset_gram(46, [48], scramble_seed=5)
    out = perflat.recover_holes(gram)
    assert out["d"] == 46
    assert out["holes"] == [48]


def test_isometry_witness():
    a = perflat.construct_ld(6, [2, 5, 6, 9])["gram"]
    b = perflat.construct_ld(6, [4, 7, 8, 11])["gram"]
    w = perflat.isometry_equivalent(a, b)
    assert w is not None
