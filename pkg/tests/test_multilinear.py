import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bdcoords.scalars import Scalar, ScalarModeError
from bdcoords.multilinear import (Matrix, band_det_bruteforce, band_det_formula,
                                  band_matrix, compare_band, compare_rhombus, det,
                                  ext_binomial, rhombus_det_bruteforce,
                                  rhombus_det_formula, rhombus_matrix, wedge_coeff)
from oracles import cofactor_det


# -- determinants -----------------------------------------------------------

def test_det_identity():
    assert det(Matrix.identity(4)) == 1


def test_det_2x2_against_cofactor_oracle():
    rows = [[1, 2], [3, 4]]
    assert cofactor_det(rows) == -2
    assert det(Matrix(rows)) == -2


def test_det_rhombus_2x2_case():
    assert det(Matrix([[2, 3], [3, 6]])) == 3


def test_det_float_partial_pivot():
    rows = [[0.0, 2.0, 1.0], [1.0, 0.5, -3.0], [2.0, 1.0, 1.0]]
    expected = cofactor_det([[Fraction(0), Fraction(2), Fraction(1)],
                             [Fraction(1), Fraction(1, 2), Fraction(-3)],
                             [Fraction(2), Fraction(1), Fraction(1)]])
    assert det(Matrix(rows)).value == pytest.approx(float(expected), rel=1e-12)


def test_det_requires_square():
    with pytest.raises(ValueError):
        det(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_matrix_rejects_mixed_modes():
    with pytest.raises(ScalarModeError):
        Matrix([[Fraction(1, 2), 0.5]])


def test_det_multiplicative_on_random_exact_matrices():
    rng = random.Random(5)
    for n in range(2, 6):
        for _ in range(20):
            a = Matrix([[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                         for _ in range(n)] for _ in range(n)])
            b = Matrix([[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                         for _ in range(n)] for _ in range(n)])
            assert det(a @ b) == det(a) * det(b)


def test_det_matches_cofactor_oracle_random():
    rng = random.Random(9)
    for n in range(1, 6):
        for _ in range(10):
            rows = [[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
            assert det(Matrix(rows)) == cofactor_det(rows)


# -- scalars ----------------------------------------------------------------

def test_scalar_mixed_mode_arithmetic_rejected():
    with pytest.raises(ScalarModeError):
        Scalar.exact(1, 2) + Scalar.approx(0.5)
    with pytest.raises(ScalarModeError):
        Scalar.approx(0.5) * Fraction(1, 3)


def test_scalar_int_literals_lift_into_either_mode():
    assert Scalar.exact(3, 2) * 2 == 3
    assert Scalar.approx(1.5) * 2 == 3.0


# -- extended binomials -----------------------------------------------------

def test_ext_binomial_values():
    assert ext_binomial(5, 2) == 10
    assert ext_binomial(3, 5) == 0
    assert ext_binomial(4, -1) == 0


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=-5, max_value=45))
def test_ext_binomial_symmetry(n, p):
    if 0 <= p <= n:
        assert ext_binomial(n, p) == ext_binomial(n, n - p)


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=-6, max_value=46))
def test_ext_binomial_pascal(n, p):
    assert ext_binomial(n, p) + ext_binomial(n, p + 1) == ext_binomial(n + 1, p + 1)


# -- wedge coefficients -----------------------------------------------------

def test_wedge_coeff_identity_and_antisymmetry():
    basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert wedge_coeff(basis, basis) == 1
    swapped = [basis[1], basis[0], basis[2]]
    assert wedge_coeff(swapped, basis) == -1


def test_wedge_coeff_det_oracle():
    assert wedge_coeff([[1, 2], [3, 4]], [[1, 0], [0, 1]]) == -2


def test_wedge_coeff_errors():
    with pytest.raises(ValueError):
        wedge_coeff([[1, 2]], [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        wedge_coeff([[1, 0], [0, 1]], [[1, 1], [1, 1]])


# -- rhombus determinants ---------------------------------------------------

def test_rhombus_1x1_is_binomial():
    for n in range(6):
        for k in range(n + 1):
            assert rhombus_det_bruteforce(n, k, 0) == ext_binomial(n, k)
            assert rhombus_det_formula(n, k, 0) == ext_binomial(n, k)


def test_rhombus_2x2_documented_sign_mismatch():
    assert rhombus_det_bruteforce(2, 1, 1) == 3
    assert rhombus_det_formula(2, 1, 1) == -3


def test_rhombus_3x3_against_cofactor_oracle():
    rows = [[x.value for x in row] for row in rhombus_matrix(3, 1, 2).entries]
    assert rhombus_det_bruteforce(3, 1, 2) == cofactor_det(rows)
    assert abs(rhombus_det_formula(3, 1, 2).value) == abs(cofactor_det(rows))


def test_rhombus_out_of_range_k():
    with pytest.raises(ValueError):
        rhombus_det_bruteforce(3, 4, 1)
    with pytest.raises(ValueError):
        rhombus_det_formula(3, -1, 1)


def test_rhombus_abs_equality_up_to_12():
    mismatches = 0
    for n in range(13):
        for k in range(n + 1):
            for l in range(13):
                r = compare_rhombus(n, k, l)
                assert r["abs_equal"], (n, k, l)
                mismatches += not r["sign_agree"]
    assert mismatches > 0  # the closed form's sign prefix genuinely disagrees


# -- band determinants ------------------------------------------------------

def test_band_small_values():
    assert band_det_bruteforce(1, 1, 1) == 2
    assert band_det_bruteforce(1, 2, 1) == 3
    assert cofactor_det([[2, 1], [1, 2]]) == 3
    for p in range(5):
        for r in range(5):
            assert band_det_bruteforce(p, 1, r) == ext_binomial(p + r, p)


def test_band_formula_values():
    assert band_det_formula(3, 1, 1, 1) == 2
    assert band_det_formula(4, 1, 2, 1) == -3


def test_band_formula_requires_consistent_n():
    with pytest.raises(ValueError):
        band_det_formula(5, 1, 2, 1)


def test_band_abs_equality_up_to_12():
    for n in range(1, 13):
        for p in range(n):
            for q in range(1, n - p + 1):
                r = n - p - q
                assert compare_band(n, p, q, r)["abs_equal"], (n, p, q, r)


def test_band_bruteforce_matches_cofactor_oracle():
    rng = random.Random(3)
    for _ in range(25):
        p, q, r = rng.randint(0, 6), rng.randint(1, 6), rng.randint(0, 6)
        rows = [[x.value for x in row] for row in band_matrix(p, q, r).entries]
        assert band_det_bruteforce(p, q, r) == cofactor_det(rows)


def test_band_reduces_to_rhombus():
    # the band determinant equals the rhombus determinant at
    # (n - q, n - r - q, q - 1); both brute-force values agree exactly
    for p in range(1, 5):
        for q in range(1, 5):
            for r in range(1, 5):
                n = p + q + r
                assert band_det_bruteforce(p, q, r) == \
                    rhombus_det_bruteforce(n - q, n - r - q, q - 1)


def test_band_positive_for_interior_triples():
    for p in range(1, 7):
        for q in range(1, 7):
            for r in range(1, 7):
                assert band_det_bruteforce(p, q, r) > 0
