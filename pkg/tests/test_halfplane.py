import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bdcoords.halfplane import (DegenerateConfigurationError, Mobius, ProjPoint,
                                axis_data, cross_ratio, fourth_point, is_clockwise,
                                mobius_apply, mobius_to_standard, orientation,
                                shear_from_quadruple, sort_ccw, twist_map)
from oracles import affine_cross_ratio

INF = ProjPoint(1, 0)


def pt(x):
    return ProjPoint.of(Fraction(x))


# -- cross ratio ------------------------------------------------------------

def test_cross_ratio_normalization():
    assert cross_ratio(pt(0), pt(1), INF, pt(5)) == 5


def test_cross_ratio_symmetric_quadruple():
    assert cross_ratio(pt(-1), pt(0), pt(1), INF) == -1


@given(st.lists(st.integers(min_value=-30, max_value=30),
                min_size=4, max_size=4, unique=True))
def test_cross_ratio_matches_affine_formula(values):
    a, b, c, d = values
    assert cross_ratio(pt(a), pt(b), pt(c), pt(d)) == affine_cross_ratio(a, b, c, d)


@given(st.lists(st.integers(min_value=-30, max_value=30),
                min_size=4, max_size=4, unique=True))
def test_cross_ratio_classical_relation(values):
    # z(a,b,c,d) = z'(d,b,a,c) for z'(a,b,c,d) = (a-c)(b-d)/((a-d)(b-c))
    a, b, c, d = values
    zprime = Fraction(d - a) * (b - c) / ((d - c) * (b - a))
    assert cross_ratio(pt(a), pt(b), pt(c), pt(d)) == zprime


def test_cross_ratio_degenerate():
    with pytest.raises(DegenerateConfigurationError):
        cross_ratio(pt(0), pt(0), pt(1), pt(2))


def test_cross_ratio_mobius_invariance():
    rng = random.Random(2)
    for _ in range(100):
        while True:
            entries = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
            if entries[0] * entries[3] - entries[1] * entries[2] != 0:
                break
        m = Mobius([entries[:2], entries[2:]])
        pts = []
        while len(pts) < 4:
            a, b = rng.randint(-20, 20), rng.randint(0, 3)
            if a == 0 and b == 0:
                continue
            q = ProjPoint(a, b)
            if all(q != p for p in pts):
                pts.append(q)
        expected = cross_ratio(*pts)
        assert cross_ratio(*(mobius_apply(m, p) for p in pts)) == expected


# -- Moebius maps -----------------------------------------------------------

def test_mobius_apply_identity_and_rotation():
    p = pt(7)
    assert mobius_apply(Mobius.identity(), p) == p
    rot = Mobius([[0, -1], [1, 0]])
    assert mobius_apply(rot, INF) == pt(0)


def test_mobius_diagonal_action():
    t = 0.35
    m = Mobius([[math.exp(t), 0.0], [0.0, math.exp(-t)]])
    image = mobius_apply(m, ProjPoint(1.7, 1.0))
    assert image.value().value == pytest.approx(math.exp(2 * t) * 1.7)


def test_mobius_to_standard_identity():
    m = mobius_to_standard(INF, pt(1), pt(0))
    assert m.projectively_equal(Mobius.identity())


def test_mobius_to_standard_involution():
    m = mobius_to_standard(pt(0), pt(1), INF)
    assert mobius_apply(m, pt(0)) == INF
    assert mobius_apply(m, INF) == pt(0)
    assert (m @ m).projectively_equal(Mobius.identity())


def test_mobius_to_standard_computes_cross_ratio():
    a, b, c, d = pt(-3), pt(2), pt(5), pt(11)
    m = mobius_to_standard(a, b, c)
    image = mobius_apply(m, d)
    assert image.value() == cross_ratio(c, b, a, d)


def test_mobius_to_standard_round_trip():
    rng = random.Random(4)
    for _ in range(25):
        pts = []
        while len(pts) < 3:
            a, b = rng.randint(-9, 9), rng.randint(0, 3)
            if a == 0 and b == 0:
                continue
            q = ProjPoint(a, b)
            if all(q != p for p in pts):
                pts.append(q)
        m = mobius_to_standard(*pts)
        images = [mobius_apply(m, p) for p in pts]
        again = mobius_to_standard(*images)
        assert again.projectively_equal(Mobius.identity())


def test_mobius_to_standard_rejects_coincident():
    with pytest.raises(DegenerateConfigurationError):
        mobius_to_standard(pt(1), pt(1), pt(0))


def test_fourth_point_inverts_cross_ratio():
    a, c, d = pt(2), pt(-1), INF
    for r in (Fraction(3), Fraction(-5, 7)):
        b = fourth_point(a, c, d, r)
        assert cross_ratio(a, b, c, d) == r


# -- orientation ------------------------------------------------------------

def test_orientation_examples():
    assert orientation(pt(0), pt(1), INF) > 0
    assert is_clockwise(INF, pt(1), pt(0))
    assert not is_clockwise(pt(0), pt(1), INF)


def test_orientation_cyclic_invariance():
    triple = (pt(-2), pt(1), INF)
    a, b, c = triple
    assert orientation(a, b, c) == orientation(b, c, a) == orientation(c, a, b)
    assert orientation(a, b, c) == -orientation(b, a, c)


def test_sort_ccw():
    pts = [pt(3), INF, pt(-1), pt(0)]
    assert [p.b == 0 or p.value().value for p in sort_ccw(pts)] == [-1, 0, 3, True]


# -- shears -----------------------------------------------------------------

def test_shear_examples():
    z = lambda *args: shear_from_quadruple(*args).value
    assert z(pt(0).to_float(), pt(1).to_float(), INF.to_float(), pt(-1).to_float()) == 0
    assert z(pt(0).to_float(), pt(2).to_float(), INF.to_float(), pt(-1).to_float()) == \
        pytest.approx(math.log(2))
    assert z(pt(0).to_float(), pt(1).to_float(), INF.to_float(), pt(-3).to_float()) == \
        pytest.approx(-math.log(3))


def test_shear_rejects_nonnegative_cross_ratio():
    with pytest.raises(DegenerateConfigurationError):
        shear_from_quadruple(pt(0), INF, pt(1), pt(2))


def test_shear_symmetric_under_full_swap():
    # swapping the two triangles (x <-> y, zl <-> zr) preserves the shear
    y, zr, x, zl = (p.to_float() for p in (pt(0), pt(3), INF, pt(-2)))
    s1 = shear_from_quadruple(y, zr, x, zl)
    s2 = shear_from_quadruple(x, zl, y, zr)
    assert float(s1.value) == pytest.approx(float(s2.value))


def test_shear_antisymmetric_under_side_swap():
    # reflecting the side vertices through the axis (zl <-> zr) negates it
    y, zr, x, zl = (p.to_float() for p in (pt(0), pt(3), INF, pt(-2)))
    s1 = shear_from_quadruple(y, zr, x, zl)
    s2 = shear_from_quadruple(y, zl, x, zr)
    assert float(s1.value) == pytest.approx(-float(s2.value))


# -- axes and twists --------------------------------------------------------

def test_axis_data_diagonal():
    l = 1.3
    m = Mobius([[math.exp(l / 2), 0.0], [0.0, math.exp(-l / 2)]])
    att, rep, length = axis_data(m)
    assert att.is_infinity and rep == ProjPoint(0.0, 1.0)
    assert float(length.value) == pytest.approx(l)


def test_axis_data_trace_formula():
    att, rep, length = axis_data(Mobius([[2.0, 1.0], [1.0, 1.0]]))
    assert float(length.value) == pytest.approx(2 * math.acosh(1.5))


def test_axis_data_conjugation_equivariance():
    l = 0.9
    m = Mobius([[math.exp(l / 2), 0.0], [0.0, math.exp(-l / 2)]])
    g = Mobius([[1.0, 2.0], [0.5, 3.0]])
    att, rep, length = axis_data(g @ m @ g.inverse())
    assert float(length.value) == pytest.approx(l)
    assert att == mobius_apply(g, INF.to_float())
    assert rep == mobius_apply(g, ProjPoint(0.0, 1.0))


def test_axis_data_rejects_non_hyperbolic():
    with pytest.raises(ValueError):
        axis_data(Mobius([[1.0, 1.0], [0.0, 1.0]]))  # parabolic
    with pytest.raises(ValueError):
        axis_data(Mobius([[0.0, -1.0], [1.0, 0.0]]))  # elliptic


def test_twist_map_basics():
    p, q = INF.to_float(), ProjPoint(0.0, 1.0)
    assert twist_map(p, q, 0.0).projectively_equal(Mobius.identity("float"))
    t = 0.6
    m = twist_map(p, q, t)
    x = mobius_apply(m, ProjPoint(1.2, 1.0))
    assert x.value().value == pytest.approx(math.exp(2 * t) * 1.2)


def test_twist_map_axis_and_length():
    p, q = ProjPoint(3.0, 1.0), ProjPoint(-2.0, 1.0)
    t = 0.45
    att, rep, length = axis_data(twist_map(p, q, t))
    assert att == p and rep == q
    assert float(length.value) == pytest.approx(2 * t)


def test_twist_map_group_law():
    p, q = ProjPoint(2.0, 1.0), ProjPoint(-5.0, 1.0)
    lhs = twist_map(p, q, 0.3) @ twist_map(p, q, 0.9)
    assert lhs.projectively_equal(twist_map(p, q, 1.2), tol=1e-9)


def test_twist_map_rejects_coincident_axis():
    with pytest.raises(DegenerateConfigurationError):
        twist_map(ProjPoint(1.0, 1.0), ProjPoint(2.0, 2.0), 1.0)
