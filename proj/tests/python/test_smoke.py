import math

import pytest

import arfkit


E8 = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
]

TREFOIL = [[-1, 1], [0, -1]]


def test_arf_of_knots():
    assert arfkit.arf_of_seifert(TREFOIL) == 1
    assert arfkit.arf_of_seifert([[1, 1], [0, -1]]) == 1
    assert arfkit.arf_of_seifert([]) == 0


def test_arf_of_improper_link_is_infinite():
    arf = arfkit.arf_of_seifert([[1]], components=2, linking=[[0, 1], [1, 0]])
    assert math.isinf(arf)


def test_classify():
    assert arfkit.classify_quadratic([[0, 1], [1, 0]], [1, 1]) == (2, 0, 1)
    assert arfkit.classify_quadratic([[0, 1], [1, 0]], [0, 0]) == (2, 0, 0)


def test_brown():
    assert arfkit.brown_of_enhanced([[1]], [1]) == 1
    assert arfkit.brown_of_enhanced([[1]], [3]) == 7
    assert arfkit.beta_of_surface([[1]], [1], 2) == 0


def test_lattice():
    assert arfkit.signature(E8) == 8
    assert arfkit.is_unimodular(E8)
    assert arfkit.is_even(E8)
    assert arfkit.characteristic_vector(E8) == [0] * 8
    assert arfkit.van_der_blij_holds(E8)


def test_rochlin():
    assert arfkit.mu_from_presentation(E8) == 1
    assert arfkit.mu_from_surgery(TREFOIL, 1) == 1
    assert arfkit.mu_from_surgery(TREFOIL, 2) == 0

    scenario = arfkit.build_surgery_scenario(TREFOIL, 1)
    assert scenario["mu_boundary"] == 1
    assert arfkit.verify_relative(scenario)["holds"]

    closed = arfkit.verify_closed(8, 0, 0, 1)
    assert closed["holds"]
    assert closed["modulus"] == 2


def test_relation():
    assert arfkit.arf_beta_relation_check(
        TREFOIL, 1, None, [[0, 1], [1, 0]], [2, 2], 0
    )


def test_input_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        arfkit.signature([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        arfkit.arf_of_seifert([[0]])
