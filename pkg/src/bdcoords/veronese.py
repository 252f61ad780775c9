"""Symmetric-power representation and the Veronese flag curve.

R^n is identified with the homogeneous polynomials of degree n-1 in X, Y via
the fixed monomial basis b_1 = X^{n-1}, b_2 = X^{n-2} Y, ..., b_n = Y^{n-1}.
A 2x2 matrix acts by substitution on (X, Y), giving the (projectivized)
irreducible representation into PSL(n, R); the boundary point [a : b] maps to
the osculating flag of the rational normal curve, realized concretely by the
basis

    v_d = (a X + b Y)^{n-d} (b X - a Y)^{d-1},      d = 1, ..., n,

whose leading vector is the Veronese image (a X + b Y)^{n-1} and whose level-d
span is exactly the multiples of (a X + b Y)^{n-d}.  The auxiliary factor
(b X - a Y) is a uniform choice of complement that is invertible against
(a X + b Y) for every real [a : b], so the same formula covers 0 and infinity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import FLOAT, Scalar
from .multilinear import Matrix
from .flags import Flag
from .halfplane import Mobius, ProjPoint, axis_data


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            out[i + j] = out[i + j] + pi * qj
    return out


def _poly_pow(p, k, one):
    out = [one]
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


def irrep_n(A: Mobius, n: int) -> "SymPowerMatrix":
    """The symmetric-power image of a 2x2 matrix, in the monomial basis.

    Column j holds the coefficients of (a11 X + a21 Y)^{n-j} (a12 X + a22 Y)^{j-1}
    expanded over b_1, ..., b_n, so that the Veronese curve is equivariant:
    irrep_n(A, n) . veronese(p) = veronese(A . p) projectively.
    """
    if n < 2:
        raise ValueError("symmetric powers need n >= 2")
    (a, b), (c, d) = A.m
    one = 1.0 if A.mode == FLOAT else Fraction(1)
    cols = []
    for j in range(1, n + 1):
        # polynomials as coefficient lists over X^{deg-i} Y^i
        poly = _poly_mul(_poly_pow([a, c], n - j, one), _poly_pow([b, d], j - 1, one))
        cols.append(poly)
    entries = [[cols[j][i] for j in range(n)] for i in range(n)]
    return SymPowerMatrix(n=n, matrix=Matrix(entries), source=A)


@dataclass(frozen=True)
class SymPowerMatrix:
    """An n x n matrix arising as a symmetric power, with its 2x2 source."""

    n: int
    matrix: Matrix
    source: Mobius | None = None

    @property
    def mode(self) -> str:
        return self.matrix.mode

    def apply_rows(self, row):
        """Matrix * column-vector, for a raw coefficient sequence."""
        m = self.matrix.raw_rows()
        return tuple(sum(m[i][j] * row[j] for j in range(self.n)) for i in range(self.n))


def veronese_point(p: ProjPoint, n: int):
    """Raw coefficient vector of (a X + b Y)^{n-1}: the Veronese image of p."""
    one = 1.0 if p.mode == FLOAT else Fraction(1)
    return tuple(_poly_pow([p.a, p.b], n - 1, one))


def veronese_flag(p: ProjPoint, n: int) -> Flag:
    """The osculating flag of the Veronese curve at a boundary point."""
    if n < 2:
        raise ValueError("veronese flags need n >= 2")
    one = 1.0 if p.mode == FLOAT else Fraction(1)
    a, b = p.a, p.b
    rows = []
    for d in range(1, n + 1):
        poly = _poly_mul(_poly_pow([a, b], n - d, one), _poly_pow([b, -a], d - 1, one))
        rows.append(poly)
    return Flag(rows)


def length_spectrum(m: SymPowerMatrix):
    """The n-1 logs of consecutive eigenvalue ratios of a symmetric power.

    The eigenvalues of the symmetric power of a hyperbolic element with
    eigenvalues lambda^{+-1} are lambda^{n-1}, lambda^{n-3}, ...,
    lambda^{-(n-1)} (distinct, positive, computed symbolically rather than by
    an eigensolver), so every consecutive ratio is lambda^2 and every log is
    the translation length.
    """
    if m.source is None:
        raise ValueError("length spectrum needs the 2x2 source element")
    _, _, length = axis_data(m.source if m.source.mode == FLOAT else _as_float(m.source))
    return [Scalar(float(length.value)) for _ in range(m.n - 1)]


def sym_eigenvalues(m: SymPowerMatrix):
    """Eigenvalues of the symmetric power, descending, from the source element."""
    if m.source is None:
        raise ValueError("eigenvalues need the 2x2 source element")
    _, _, length = axis_data(m.source if m.source.mode == FLOAT else _as_float(m.source))
    lam = math.exp(float(length.value) / 2.0)
    return [lam ** (m.n - 1 - 2 * k) for k in range(m.n)]


def _as_float(m: Mobius) -> Mobius:
    return Mobius([[float(x) for x in row] for row in m.m])
