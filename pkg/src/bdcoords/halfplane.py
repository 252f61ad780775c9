"""Boundary geometry of the upper half-plane.

Points of the circle at infinity RP^1 are homogeneous pairs [a : b] (so that
infinity = [1:0] is an ordinary citizen), Moebius maps are 2x2 matrices acting
projectively, and everything downstream is built from the four-point cross
ratio normalized so that z(0, 1, oo, d) = d.

Orientation convention: the boundary circle is oriented counterclockwise,
which for the upper half-plane means increasing real direction (wrapping
through infinity).  ``orientation(a, b, c)`` is +1 for counterclockwise
triples, -1 for clockwise ones.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .scalars import EXACT, FLOAT, Scalar, _lift, join_mode
from .multilinear import infer_mode

_HYPERBOLIC_TOL = 1e-12  # |trace| must exceed 2 by this much in float mode


class DegenerateConfigurationError(ValueError):
    """A boundary configuration violates a genericity precondition."""


class ProjPoint:
    """A point of RP^1 in homogeneous coordinates [a : b]; oo = [1:0]."""

    __slots__ = ("a", "b", "mode")

    def __init__(self, a, b):
        mode = infer_mode([a, b])
        conv = float if mode == FLOAT else Fraction
        a, b = conv(_lift(a)), conv(_lift(b))
        if a == 0 and b == 0:
            raise ValueError("[0 : 0] is not a projective point")
        if mode == FLOAT:
            # keep homogeneous coordinates well scaled
            s = max(abs(a), abs(b))
            a, b = a / s, b / s
        self.a, self.b, self.mode = a, b, mode

    @classmethod
    def infinity(cls, mode: str = EXACT) -> "ProjPoint":
        return cls(1.0, 0.0) if mode == FLOAT else cls(1, 0)

    @classmethod
    def of(cls, x) -> "ProjPoint":
        """Finite point x as [x : 1] (mode follows the value)."""
        x = _lift(x)
        return cls(x, 1.0 if isinstance(x, float) else 1)

    @property
    def is_infinity(self) -> bool:
        return self.b == 0

    def to_float(self) -> "ProjPoint":
        return ProjPoint(float(self.a), float(self.b))

    def value(self) -> Scalar:
        """Affine coordinate a/b; raises at infinity."""
        if self.b == 0:
            raise ZeroDivisionError("point at infinity has no affine value")
        return Scalar(self.a / self.b)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        join_mode(self.mode, other.mode)
        cross = self.a * other.b - self.b * other.a
        if self.mode == EXACT:
            return cross == 0
        # float coordinates are normalized to max-abs 1 at construction
        return abs(cross) <= 1e-9

    def __hash__(self):
        raise TypeError("ProjPoint is unhashable (projective equality)")

    def __repr__(self):
        return f"ProjPoint({self.a!r}, {self.b!r})"


def wedge(p: ProjPoint, q: ProjPoint):
    """The pairing p ^ q = a_p b_q - b_p a_q (0 iff p == q projectively)."""
    join_mode(p.mode, q.mode)
    return p.a * q.b - p.b * q.a


def orientation(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> int:
    """+1 if (a, b, c) is counterclockwise on the boundary circle, -1 if
    clockwise, 0 if degenerate.  Invariant under rescaling representatives."""
    w = wedge(a, b) * wedge(b, c) * wedge(c, a)
    return (w > 0) - (w < 0)


def is_clockwise(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    return orientation(a, b, c) < 0


def cross_ratio(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> Scalar:
    """z(a,b,c,d) = (d-a)(b-c) / ((d-c)(b-a)), evaluated projectively.

    Normalized so that z(0, 1, oo, d) = d.  Degenerate quadruples (d = c or
    b = a, or coincidences making the value 0/0) raise.
    """
    num = wedge(d, a) * wedge(b, c)
    den = wedge(d, c) * wedge(b, a)
    if den == 0:
        raise DegenerateConfigurationError("cross ratio undefined: d = c or b = a")
    return Scalar(num / den)


def fourth_point(a: ProjPoint, c: ProjPoint, d: ProjPoint, r) -> ProjPoint:
    """The unique b with cross_ratio(a, b, c, d) = r (a projective-linear solve)."""
    r = _lift(r)
    da, dc = wedge(d, a), wedge(d, c)
    # (b ^ c) * (d ^ a) = r * (b ^ a) * (d ^ c), linear in b = [b1 : b2]
    b1 = c.a * da - r * a.a * dc
    b2 = c.b * da - r * a.b * dc
    return ProjPoint(b1, b2)


class Mobius:
    """A projective 2x2 real matrix acting on RP^1.

    Float-mode matrices are normalized to |det| = 1 (and det's sign is kept:
    det > 0 for the orientation-preserving maps used everywhere in the
    geometry; det < 0 can arise from 3-point interpolation of a reversing
    triple).  Exact-mode matrices are kept as given, up to projective
    equality M == -M.
    """

    __slots__ = ("m", "mode")

    def __init__(self, rows):
        mode = infer_mode([x for row in rows for x in row])
        conv = float if mode == FLOAT else Fraction
        (a, b), (c, d) = rows
        a, b, c, d = (conv(_lift(x)) for x in (a, b, c, d))
        det = a * d - b * c
        if det == 0:
            raise ValueError("singular matrix is not a Moebius map")
        if mode == FLOAT:
            s = math.sqrt(abs(det))
            a, b, c, d = a / s, b / s, c / s, d / s
        self.m = ((a, b), (c, d))
        self.mode = mode

    @classmethod
    def identity(cls, mode: str = EXACT) -> "Mobius":
        return cls([[1.0, 0.0], [0.0, 1.0]]) if mode == FLOAT else cls([[1, 0], [0, 1]])

    @classmethod
    def scaling(cls, factor: float) -> "Mobius":
        """z -> factor * z for factor > 0 (float mode)."""
        if factor <= 0:
            raise ValueError("scaling factor must be positive")
        return cls([[float(factor), 0.0], [0.0, 1.0]])

    def det(self) -> Scalar:
        (a, b), (c, d) = self.m
        return Scalar(a * d - b * c)

    def trace_normalized(self) -> float:
        """tr(M / sqrt(det M)) up to sign; requires det > 0."""
        (a, b), (c, d) = self.m
        det = a * d - b * c
        if det <= 0:
            raise ValueError("trace normalization needs det > 0")
        return float(a + d) / math.sqrt(float(det))

    def inverse(self) -> "Mobius":
        (a, b), (c, d) = self.m
        return Mobius([[d, -b], [-c, a]])

    def __matmul__(self, other: "Mobius") -> "Mobius":
        join_mode(self.mode, other.mode)
        (a, b), (c, d) = self.m
        (e, f), (g, h) = other.m
        return Mobius([[a * e + b * g, a * f + b * h],
                       [c * e + d * g, c * f + d * h]])

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return mobius_apply(self, p)

    def projectively_equal(self, other: "Mobius", tol: float = 1e-9) -> bool:
        join_mode(self.mode, other.mode)
        xs = [x for row in self.m for x in row]
        ys = [x for row in other.m for x in row]
        if self.mode == EXACT:
            return all(xs[i] * ys[j] == xs[j] * ys[i]
                       for i in range(4) for j in range(i + 1, 4))
        i0 = max(range(4), key=lambda i: abs(ys[i]))
        scale = xs[i0] / ys[i0]
        return all(abs(xs[i] - scale * ys[i]) <= tol for i in range(4))

    def __repr__(self):
        return f"Mobius({[list(r) for r in self.m]!r})"


def mobius_apply(m: Mobius, p: ProjPoint) -> ProjPoint:
    join_mode(m.mode, p.mode)
    (a, b), (c, d) = m.m
    return ProjPoint(a * p.a + b * p.b, c * p.a + d * p.b)


def mobius_to_standard(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Mobius:
    """The unique projective map sending a -> oo, b -> 1, c -> 0.

    For a clockwise triple this is orientation-preserving (det > 0); for a
    counterclockwise triple it reverses orientation.
    """
    ba, bc = wedge(b, a), wedge(b, c)
    if ba == 0 or bc == 0 or wedge(a, c) == 0:
        raise DegenerateConfigurationError("three-point interpolation needs distinct points")
    # v  |-->  [ (v ^ c) (b ^ a) : (v ^ a) (b ^ c) ]
    return Mobius([[c.b * ba, -c.a * ba], [a.b * bc, -a.a * bc]])


def shear_from_quadruple(y: ProjPoint, zr: ProjPoint, x: ProjPoint, zl: ProjPoint) -> Scalar:
    """Shear of two ideal triangles glued along (x, y): log -z(y, zr, x, zl)^(-1).

    (x, zl, y, zr) must be the vertices of the two triangles in cyclic order
    around the circle, which makes the cross ratio negative.
    """
    z = cross_ratio(y, zr, x, zl)
    if z.value >= 0:
        raise DegenerateConfigurationError(
            f"quadruple is not an adjacent-triangle configuration (z = {z})")
    return Scalar(math.log(-1.0 / float(z.value)))


def axis_data(m: Mobius):
    """(attracting, repelling, translation_length) of a hyperbolic element.

    Raises on non-hyperbolic input (|trace| <= 2 + tol after normalizing
    det = 1): gluing constructions must fail loudly at parabolics.
    """
    tr = m.trace_normalized()
    if abs(tr) <= 2.0 + _HYPERBOLIC_TOL:
        raise ValueError(f"not a hyperbolic element: |trace| = {abs(tr):.17g}")
    (a, b), (c, d) = (tuple(map(float, row)) for row in m.m)
    det = a * d - b * c
    s = math.sqrt(det)
    a, b, c, d = a / s, b / s, c / s, d / s
    disc = math.sqrt(tr * tr - 4.0)
    lam_plus = (tr + disc) / 2.0
    lam_minus = (tr - disc) / 2.0
    if abs(lam_plus) >= abs(lam_minus):
        lam_att, lam_rep = lam_plus, lam_minus
    else:
        lam_att, lam_rep = lam_minus, lam_plus
    if c != 0.0:
        att = ProjPoint(lam_att - d, c)
        rep = ProjPoint(lam_rep - d, c)
    elif b != 0.0:
        att = ProjPoint(b, lam_att - a)
        rep = ProjPoint(b, lam_rep - a)
    else:
        # diagonal: fixed points 0 and oo
        if abs(a) >= abs(d):
            att, rep = ProjPoint.infinity(FLOAT), ProjPoint(0.0, 1.0)
        else:
            att, rep = ProjPoint(0.0, 1.0), ProjPoint.infinity(FLOAT)
    length = 2.0 * math.acosh(abs(tr) / 2.0)
    return att, rep, Scalar(length)


def twist_map(attracting: ProjPoint, repelling: ProjPoint, t) -> Mobius:
    """The hyperbolic map with the given axis, conjugate to diag(e^t, e^-t)
    under the normalization attracting -> oo, repelling -> 0.

    Fixes both axis endpoints and translates by 2t toward the attracting
    point for t > 0.
    """
    att = attracting if attracting.mode == FLOAT else attracting.to_float()
    rep = repelling if repelling.mode == FLOAT else repelling.to_float()
    if wedge(att, rep) == 0:
        raise DegenerateConfigurationError("twist axis needs distinct endpoints")
    t = float(_lift(t))
    norm = Mobius([[rep.b, -rep.a], [att.b, -att.a]])  # rep -> 0, att -> oo
    diag = Mobius([[math.exp(t), 0.0], [0.0, math.exp(-t)]])
    return norm.inverse() @ diag @ norm


def sort_ccw(points) -> list:
    """Sort boundary points into counterclockwise circle order.

    Increasing real order with infinity as the final wrap point; pure
    convenience for building oriented test configurations.
    """
    def key(p: ProjPoint):
        if p.is_infinity:
            return (1, 0)
        return (0, p.a / p.b)
    return sorted(points, key=key)
