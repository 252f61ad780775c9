"""Exact and floating-point multilinear algebra.

Determinants (fraction-free Bareiss elimination in exact mode, partial-pivot
LU via LAPACK in float mode), wedge-product coefficients, extended binomial
coefficients, and two families of binomial determinants together with their
closed forms:

* the "band" determinant: the q x q matrix whose row i, column j entry is
  ``ext_binomial(p + r, p + i - j)`` (0-indexed),
* the "rhombus" determinant ``(l+1) x (l+1)`` with row i, column j entry
  ``ext_binomial(n + i + j, k + j)`` (a rhombus of entries in Pascal's
  triangle).

The closed forms are implemented *literally*, including their sign prefixes.
The sign prefixes disagree with the brute-force determinants (which are
positive in the ranges used here, being Vandermonde-like with increasing
nodes); :func:`compare_band` and :func:`compare_rhombus` record the
agreement of absolute values and the sign relation, and nothing in this
package silently "fixes" one to match the other.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .scalars import EXACT, FLOAT, Scalar, ScalarModeError, _lift, join_mode


def infer_mode(values, default=EXACT, requested=None) -> str:
    """Common mode of a collection: ints lift either way, Fraction/float clash."""
    seen = set()
    for x in values:
        if isinstance(x, Scalar):
            x = x.value
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            continue
        if isinstance(x, float):
            seen.add(FLOAT)
        elif isinstance(x, Fraction):
            seen.add(EXACT)
        else:
            raise TypeError(f"cannot interpret {x!r} as a scalar")
    if len(seen) > 1:
        raise ScalarModeError("mixed exact and float values")
    inferred = seen.pop() if seen else (requested or default)
    if requested is not None and requested != inferred:
        raise ScalarModeError(f"values are {inferred}, requested {requested}")
    return inferred


class Matrix:
    """A dense rows x cols matrix with uniform-mode entries, row-major."""

    __slots__ = ("rows", "cols", "mode", "_rows")

    def __init__(self, rows_data, mode=None):
        data = [list(row) for row in rows_data]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        ncols = len(data[0])
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged rows")
        self.rows = len(data)
        self.cols = ncols
        self.mode = infer_mode(
            (x for row in data for x in row), default=EXACT, requested=mode)
        conv = float if self.mode == FLOAT else Fraction
        self._rows = tuple(tuple(conv(_lift(x)) for x in row) for row in data)

    @classmethod
    def identity(cls, n: int, mode: str = EXACT) -> "Matrix":
        one, zero = (1.0, 0.0) if mode == FLOAT else (Fraction(1), Fraction(0))
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self._rows[i][j])

    @property
    def entries(self):
        return tuple(tuple(Scalar(x) for x in row) for row in self._rows)

    def raw_rows(self):
        return self._rows

    def __matmul__(self, other: "Matrix") -> "Matrix":
        join_mode(self.mode, other.mode)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        b = other._rows
        return Matrix([[sum(self._rows[i][k] * b[k][j] for k in range(self.cols))
                        for j in range(other.cols)] for i in range(self.rows)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.mode == other.mode and self._rows == other._rows)

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self._rows]!r})"


def _det_bareiss(rows) -> Fraction:
    """Fraction-free elimination; exact for integer or rational entries."""
    n = len(rows)
    a = [list(map(Fraction, row)) for row in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def _det_int_bareiss(rows) -> int:
    """Bareiss over python ints (all divisions are exact)."""
    n = len(rows)
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_raw(rows, mode: str):
    """Determinant on raw row data; returns a raw Fraction or float."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if mode == FLOAT:
        if n == 1:
            return float(rows[0][0])
        if n == 2:
            return float(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])
        return float(np.linalg.det(np.array(rows, dtype=float)))
    if all(isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
           for row in rows for x in row):
        return Fraction(_det_int_bareiss([[int(x) for x in row] for row in rows]))
    return _det_bareiss(rows)


def det(m: Matrix) -> Scalar:
    """Determinant of a square matrix, in the matrix's own mode."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a {m.rows} x {m.cols} matrix")
    return Scalar(det_raw(m._rows, m.mode))


def ext_binomial(n: int, p: int) -> Scalar:
    """Binomial coefficient extended by 0 outside the range 0 <= p <= n."""
    if 0 <= p <= n:
        return Scalar(Fraction(math.comb(n, p)))
    return Scalar(Fraction(0))


def wedge_coeff(vectors, basis) -> Scalar:
    """The scalar c with v_1 ^ ... ^ v_n = c * (b_1 ^ ... ^ b_n).

    Both arguments are sequences of n coordinate vectors in the same
    n-dimensional coordinate system; ``basis`` must be invertible.  The
    coefficient is Det(V) / Det(B) for the stacked row matrices.
    """
    n = len(basis)
    if len(vectors) != n or any(len(v) != n for v in list(vectors) + list(basis)):
        raise ValueError("wedge_coeff needs n vectors of length n and an n-vector basis")
    vm = Matrix(vectors)
    bm = Matrix(basis)
    join_mode(vm.mode, bm.mode)
    db = det(bm)
    if not db:
        raise ValueError("singular basis in wedge_coeff")
    return det(vm) / db


# ---------------------------------------------------------------------------
# binomial determinants


def band_matrix(p: int, q: int, r: int) -> Matrix:
    """q x q matrix, entry (i, j) = ext_binomial(p + r, p + i - j), 0-indexed."""
    if p < 0 or q < 1 or r < 0:
        raise ValueError("band determinant needs p, r >= 0 and q >= 1")
    return Matrix([[ext_binomial(p + r, p + i - j).value for j in range(q)]
                   for i in range(q)])


def band_det_bruteforce(p: int, q: int, r: int) -> Scalar:
    return det(band_matrix(p, q, r))


def band_det_formula(n: int, p: int, q: int, r: int) -> Scalar:
    """Closed form for the band determinant, evaluated literally.

    sign (-1)^(q-1)q/2 times
    (n-q)! (n-q+1)! ... (n-1)! 1! 2! ... (q-1)!
    over (n-r-q)! ... (n-r-1)! r! (r+1)! ... (r+q-1)!
    """
    if p + q + r != n:
        raise ValueError(f"require p + q + r = n, got {p}+{q}+{r} != {n}")
    if p < 0 or q < 1 or r < 0:
        raise ValueError("band determinant needs p, r >= 0 and q >= 1")
    if n - r - q < 0:
        raise ValueError("negative factorial argument in band closed form")
    num = 1
    for m in range(n - q, n):
        num *= math.factorial(m)
    for m in range(1, q):
        num *= math.factorial(m)
    den = 1
    for m in range(n - r - q, n - r):
        den *= math.factorial(m)
    for m in range(r, r + q):
        den *= math.factorial(m)
    sign = -1 if ((q - 1) * q // 2) % 2 else 1
    return Scalar(Fraction(sign * num, den))


def rhombus_matrix(n: int, k: int, l: int) -> Matrix:
    """(l+1) x (l+1) matrix, entry (i, j) = ext_binomial(n + i + j, k + j)."""
    if n < 0 or l < 0:
        raise ValueError("rhombus determinant needs n, l >= 0")
    if not 0 <= k <= n:
        raise ValueError(f"rhombus determinant needs 0 <= k <= n, got k={k}, n={n}")
    return Matrix([[ext_binomial(n + i + j, k + j).value for j in range(l + 1)]
                   for i in range(l + 1)])


def rhombus_det_bruteforce(n: int, k: int, l: int) -> Scalar:
    return det(rhombus_matrix(n, k, l))


def rhombus_det_formula(n: int, k: int, l: int) -> Scalar:
    """Closed form for the rhombus determinant, evaluated literally.

    n! (n+1)! ... (n+l)! over k! ... (k+l)! (n-k)! ... (n-k+l)!,
    times (-1)^(l(l+1)/2) 1! ... l!.
    """
    if n < 0 or l < 0:
        raise ValueError("rhombus determinant needs n, l >= 0")
    if not 0 <= k <= n:
        raise ValueError(f"rhombus determinant needs 0 <= k <= n, got k={k}, n={n}")
    num = 1
    for m in range(l + 1):
        num *= math.factorial(n + m)
    den = 1
    for m in range(l + 1):
        den *= math.factorial(k + m) * math.factorial(n - k + m)
    superfact = 1
    for m in range(1, l + 1):
        superfact *= math.factorial(m)
    sign = -1 if (l * (l + 1) // 2) % 2 else 1
    return Scalar(Fraction(sign * num * superfact, den))


def compare_band(n: int, p: int, q: int, r: int) -> dict:
    """Brute force vs closed form for the band determinant (comparison layer)."""
    brute = band_det_bruteforce(p, q, r)
    formula = band_det_formula(n, p, q, r)
    return {
        "args": (n, p, q, r),
        "bruteforce": brute,
        "formula": formula,
        "abs_equal": abs(brute.value) == abs(formula.value),
        "sign_agree": brute.value == formula.value,
    }


def compare_rhombus(n: int, k: int, l: int) -> dict:
    """Brute force vs closed form for the rhombus determinant."""
    brute = rhombus_det_bruteforce(n, k, l)
    formula = rhombus_det_formula(n, k, l)
    return {
        "args": (n, k, l),
        "bruteforce": brute,
        "formula": formula,
        "abs_equal": abs(brute.value) == abs(formula.value),
        "sign_agree": brute.value == formula.value,
    }
