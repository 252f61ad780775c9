"""Bonahon-Dreyer invariants of developed surfaces and the Fuchsian slice.

For a hyperbolic surface developed from shear and twist data, the invariants
of the induced representation into PSL(n, R) are computed through the
Veronese flag curve: triangle invariants are logs of triple ratios at ideal
triangle vertices, shearing invariants are logs of double ratios at leaf
quadruples, gluing invariants are logs of double ratios at the short-arc
quadruples of the decomposing curves.

The closed leaf condition ties these to the length spectrum: for each curve
and each index p, the right and left spiral sums R_p and L_p both equal the
p-th eigenvalue-gap length of the curve's holonomy.  The slice of the
parameter polytope carved out by vanishing triangle invariants and
index-independent shearing/gluing invariants is exactly the image of the
hyperbolic structures, and ``realize_slice`` constructs the hyperbolic
surface realizing any point of it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import Scalar, serialize_value
from .flags import double_ratio, triple_ratio
from .veronese import irrep_n, length_spectrum, veronese_flag
from .surfaces import (AssemblyError, DevelopedSurface, LaminationError,
                       PantsShearing, SurfaceSpec, SLOTS, assemble_surface,
                       boundary_lengths, fan_cycle, solve_twist,
                       validate_shears)

DEFAULT_TOL = 1e-9

# corners of a placed triangle in clockwise order starting at the canonical
# vertex (placements are counterclockwise in local order (0, 1, 2))
_CW_ORDER = (0, 2, 1)


def _rotate_indices(pqr, steps: int):
    p, q, r = pqr
    for _ in range(steps % 3):
        p, q, r = r, p, q
    return p, q, r


def triple_indices(n: int):
    """All (p, q, r) with p, q, r >= 1 and p + q + r = n."""
    return [(p, q, n - p - q)
            for p in range(1, n - 1) for q in range(1, n - p)]


def _flags_at(points, n: int):
    return [veronese_flag(pt, n) for pt in points]


def triangle_invariant(ds: DevelopedSurface, pants_id: str, tri: int,
                       vertex: int, p: int, q: int, r: int, n: int) -> Scalar:
    """log of the (p, q, r) triple ratio at an ideal triangle's flags,
    vertices taken clockwise from the chosen one."""
    placed = ds.pants[pants_id].triangles[tri]
    # rotate the fixed clockwise cycle to start at the chosen vertex
    k = _CW_ORDER.index(vertex)
    order = [_CW_ORDER[(k + m) % 3] for m in range(3)]
    pts = [placed.pts[c] for c in order]
    fE, fF, fG = _flags_at(pts, n)
    value = triple_ratio(fE, fF, fG, p, q, r)
    v = float(value.value)
    if v <= 0:
        raise AssemblyError("triple ratio not positive at a developed triangle")
    return Scalar(math.log(v))


def _log_double_ratio(quad, p: int, n: int) -> Scalar:
    fE, fF, fG, fGp = _flags_at(quad, n)
    value = double_ratio(fE, fF, fG, fGp, p)
    v = float(value.value)
    if v <= 0:
        raise AssemblyError("double ratio not positive at a developed quadruple")
    return Scalar(math.log(v))


def shearing_invariant(ds: DevelopedSurface, pants_id: str, leaf: str,
                       p: int, n: int) -> Scalar:
    """log D_p at the leaf quadruple (x, y, z_left, z_right)."""
    q = ds.pants[pants_id].leaf_quadruples[leaf]
    return _log_double_ratio((q.x, q.y, q.zl, q.zr), p, n)


def gluing_invariant(ds: DevelopedSurface, curve_id: str, p: int, n: int) -> Scalar:
    """log D_p at the curve's short-arc quadruple (x, y, z_left, z_right)."""
    c = ds.curves[curve_id]
    return _log_double_ratio((c.x, c.y, c.zl, c.zr), p, n)


@dataclass(frozen=True)
class BDVector:
    """The full invariant tuple of a developed surface for one n.

    tau is keyed by (pants_id, triangle, (p, q, r)) with the triangle
    invariant taken at the canonical vertex (local corner 0); sigma by
    (pants_id, leaf, p); theta by (curve_id, p).
    """

    n: int
    tau: dict
    sigma: dict
    theta: dict

    def size(self) -> int:
        return len(self.tau) + len(self.sigma) + len(self.theta)

    def tau_at(self, pants_id: str, tri: int, vertex: int, pqr) -> float:
        """Triangle invariant at an arbitrary vertex, by index rotation."""
        steps = _CW_ORDER.index(vertex)
        return self.tau[(pants_id, tri, _rotate_indices(pqr, steps))]

    def rows(self):
        """Canonically ordered (block, object, p, q, r, value) rows."""
        out = []
        for (pid, tri, (p, q, r)), v in sorted(self.tau.items()):
            out.append(("tau", f"{pid}/T{tri}", p, q, r, v))
        for (pid, leaf, p), v in sorted(self.sigma.items()):
            out.append(("sigma", f"{pid}/{leaf}", p, "", "", v))
        for (cid, p), v in sorted(self.theta.items()):
            out.append(("theta", cid, p, "", "", v))
        return out

    def to_json_dict(self):
        return {
            "n": self.n,
            "tau": [{"pants": pid, "triangle": tri, "p": p, "q": q, "r": r,
                     "value": serialize_value(v)}
                    for (pid, tri, (p, q, r)), v in sorted(self.tau.items())],
            "sigma": [{"pants": pid, "leaf": leaf, "p": p, "value": serialize_value(v)}
                      for (pid, leaf, p), v in sorted(self.sigma.items())],
            "theta": [{"curve": cid, "p": p, "value": serialize_value(v)}
                      for (cid, p), v in sorted(self.theta.items())],
        }


def expected_size(spec: SurfaceSpec, n: int) -> int:
    """3|chi|/2 gluing + 3|chi| shearing blocks of size n-1, plus 2|chi|
    triangle blocks of size (n-1 choose 2)."""
    chi = 2 * (spec.genus - 1)
    return (3 * chi // 2) * (n - 1) + 3 * chi * (n - 1) + 2 * chi * math.comb(n - 1, 2)


def bd_vector(ds: DevelopedSurface, n: int) -> BDVector:
    """All invariants of the developed surface at rank n."""
    if n < 2:
        raise ValueError("need n >= 2")
    tau = {}
    sigma = {}
    theta = {}
    for pid, dev in ds.pants.items():
        for tri in (0, 1):
            for pqr in triple_indices(n):
                tau[(pid, tri, pqr)] = float(
                    triangle_invariant(ds, pid, tri, 0, *pqr, n).value)
        for leaf in dev.lam.leaves():
            for p in range(1, n):
                sigma[(pid, leaf, p)] = float(
                    shearing_invariant(ds, pid, leaf, p, n).value)
    for cid in ds.curves:
        for p in range(1, n):
            theta[(cid, p)] = float(gluing_invariant(ds, cid, p, n).value)
    vec = BDVector(n=n, tau=tau, sigma=sigma, theta=theta)
    if vec.size() != expected_size(ds.spec, n):
        raise AssemblyError("invariant count does not match the surface combinatorics")
    return vec


# ---------------------------------------------------------------------------
# closed leaf condition


def _side_direction(spec: SurfaceSpec, curve_id: str, side: str) -> bool:
    """True if that side's leaves spiral in the direction of the curve.

    The spiral wraps against the induced boundary orientation for positive
    spiraling; the left pants walks the curve forward, the right one
    backward (convention 3 of the surfaces module).
    """
    pid, slot, _ = spec.side(curve_id, side)
    sgn = spec.pants[pid].spiral_signs[slot]
    return (side == "right") == (sgn == 1)


def closed_leaf_sums(v: BDVector, spec: SurfaceSpec, curve_id: str, p: int,
                     side: str, vertex_rule: str = "verbatim") -> Scalar:
    """The spiral sum R_p (side="right") or L_p (side="left") of a curve.

    Sums run over the spiral crossings of the side's fan: each leaf end
    contributes its shearing invariant (index p or n-p according to whether
    the leaf is oriented toward the curve), and each spike triangle
    contributes a partial row of triangle invariants evaluated at the spike
    vertex.  The two displayed variants (spiraling with or against the
    curve's orientation) differ by global sign and by the index block.

    vertex_rule selects the pairing of the triangle-term index blocks with
    the spike vertex: "verbatim" follows the displayed formulas; "swapped"
    exchanges the two tau blocks (the two readings agree wherever triangle
    invariants vanish, in particular on the whole Fuchsian locus).
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if not 1 <= p <= v.n - 1:
        raise ValueError(f"index p must be in 1..{v.n - 1}")
    if vertex_rule not in ("verbatim", "swapped"):
        raise ValueError("vertex_rule must be 'verbatim' or 'swapped'")
    n = v.n
    pid, slot, _ = spec.side(curve_id, side)
    lam = spec.pants[pid]
    with_direction = _side_direction(spec, curve_id, side)

    use_first_block = with_direction if vertex_rule == "verbatim" else not with_direction
    if use_first_block:
        tau_terms = [(p, q, n - p - q) for q in range(1, n - p)]
    else:
        tau_terms = [(n - p, q, p - q) for q in range(1, p)]

    total = 0.0
    for step in fan_cycle(lam, slot):
        toward = lam.forward_end(step.leaf) == step.fan_end
        if with_direction:
            idx = p if toward else n - p
        else:
            idx = (n - p) if toward else p
        total += v.sigma[(pid, step.leaf, idx)]
        for pqr in tau_terms:
            total += v.tau_at(pid, step.tri, step.corner, pqr)

    sign = 1.0 if (side == "right") == with_direction else -1.0
    return Scalar(sign * total)


@dataclass(frozen=True)
class ClosedLeafReport:
    """Per curve and index: spiral sums from both sides and the length."""

    n: int
    entries: tuple  # (curve_id, p, R_p, L_p, l_p)

    def max_deviation(self) -> float:
        dev = 0.0
        for _, _, r, l, lp in self.entries:
            dev = max(dev, abs(r - l), abs(r - lp), abs(l - lp))
        return dev

    def to_json_dict(self):
        return {
            "n": self.n,
            "entries": [
                {"curve": cid, "p": p, "R": serialize_value(r),
                 "L": serialize_value(l), "length": serialize_value(lp)}
                for cid, p, r, l, lp in self.entries],
            "max_deviation": serialize_value(self.max_deviation()),
        }


def closed_leaf_report(v: BDVector, ds: DevelopedSurface,
                       vertex_rule: str = "verbatim") -> ClosedLeafReport:
    """R_p, L_p and the symmetric-power length l_p for every curve and p."""
    entries = []
    for cid in sorted(ds.curves):
        spectrum = length_spectrum(irrep_n(ds.curves[cid].holonomy, v.n))
        for p in range(1, v.n):
            r = float(closed_leaf_sums(v, ds.spec, cid, p, "right", vertex_rule).value)
            l = float(closed_leaf_sums(v, ds.spec, cid, p, "left", vertex_rule).value)
            entries.append((cid, p, r, l, float(spectrum[p - 1].value)))
    return ClosedLeafReport(n=v.n, entries=tuple(entries))


def polytope_membership(v: BDVector, spec: SurfaceSpec, tol: float = DEFAULT_TOL):
    """Closed leaf condition: R_p = L_p (within tol) and R_p > 0, every curve.

    Returns (ok, diagnostics); diagnostics name each violated constraint.
    """
    if v.size() != expected_size(spec, v.n):
        raise ValueError(
            f"invariant vector has {v.size()} coordinates, surface needs "
            f"{expected_size(spec, v.n)} at n = {v.n}")
    problems = []
    for cid in sorted(spec.curves):
        for p in range(1, v.n):
            r = float(closed_leaf_sums(v, spec, cid, p, "right").value)
            l = float(closed_leaf_sums(v, spec, cid, p, "left").value)
            if abs(r - l) > tol:
                problems.append(f"{cid}: R_{p} = {r:.12g} != L_{p} = {l:.12g}")
            if r <= 0:
                problems.append(f"{cid}: R_{p} = {r:.12g} is not positive")
    return (not problems), problems


def slice_membership(v: BDVector, tol: float = DEFAULT_TOL) -> bool:
    """Vanishing triangle block; index-independent shearing and gluing blocks."""
    if any(abs(x) > tol for x in v.tau.values()):
        return False
    by_leaf = {}
    for (pid, leaf, _p), x in v.sigma.items():
        by_leaf.setdefault((pid, leaf), []).append(x)
    for values in by_leaf.values():
        if max(values) - min(values) > tol:
            return False
    by_curve = {}
    for (cid, _p), x in v.theta.items():
        by_curve.setdefault(cid, []).append(x)
    for values in by_curve.values():
        if max(values) - min(values) > tol:
            return False
    return True


# ---------------------------------------------------------------------------
# the Fuchsian slice


@dataclass(frozen=True)
class SlicePoint:
    """One shear per biinfinite leaf and one gluing value per curve."""

    shears: dict   # pants_id -> {leaf: float}
    gluing: dict   # curve_id -> float


def slice_point_of(v: BDVector, spec: SurfaceSpec) -> SlicePoint:
    """Read a slice point off an invariant vector (p-averaged blocks)."""
    shears = {pid: {} for pid in spec.pants}
    counts = {}
    for (pid, leaf, _p), x in v.sigma.items():
        shears[pid][leaf] = shears[pid].get(leaf, 0.0) + x
        counts[(pid, leaf)] = counts.get((pid, leaf), 0) + 1
    for pid in shears:
        for leaf in shears[pid]:
            shears[pid][leaf] /= counts[(pid, leaf)]
    gluing = {}
    gcounts = {}
    for (cid, _p), x in v.theta.items():
        gluing[cid] = gluing.get(cid, 0.0) + x
        gcounts[cid] = gcounts.get(cid, 0) + 1
    for cid in gluing:
        gluing[cid] /= gcounts[cid]
    return SlicePoint(shears=shears, gluing=gluing)


def realize_slice(sp: SlicePoint, spec: SurfaceSpec, n: int,
                  tol: float = DEFAULT_TOL) -> DevelopedSurface:
    """Construct a developed surface whose rank-n invariants realize sp.

    Each pants gets the hyperbolic structure with the prescribed shears (the
    per-pants ranges are checked and violations named); matching boundary
    lengths let the pants glue, and each curve's twist is then solved so the
    gluing invariant hits the prescribed value.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    shearings = {}
    for pid, lam in spec.pants.items():
        shearing = PantsShearing.for_lamination(lam, sp.shears[pid])
        if not validate_shears(lam, shearing):
            raise LaminationError(
                f"slice point violates the shear range of pants {pid}: "
                f"need sign * (spiral sums) > 0, got sums "
                f"{ {s: sum(shearing[st.leaf] for st in fan_cycle(lam, s)) for s in SLOTS} }")
        shearings[pid] = shearing
    for cid in spec.curves:
        (pl, sl, _), (pr, sr, _) = (spec.side(cid, "left"), spec.side(cid, "right"))
        ll = float(boundary_lengths(spec.pants[pl], shearings[pl])[sl].value)
        lr = float(boundary_lengths(spec.pants[pr], shearings[pr])[sr].value)
        if abs(ll - lr) > tol * max(1.0, ll):
            raise AssemblyError(
                f"slice point mismatches lengths across {cid}: {ll:.12g} vs {lr:.12g}")
    base = assemble_surface(spec, shearings, {cid: 0.0 for cid in spec.curves})
    twists = {cid: float(solve_twist(base, cid, sp.gluing[cid]).value)
              for cid in spec.curves}
    return assemble_surface(spec, shearings, twists)


def dimension_counts(spec: SurfaceSpec, n: int) -> dict:
    """Integer bookkeeping: vector size, constraint count, slice dimensions."""
    chi = 2 * (spec.genus - 1)
    curves = len(spec.curves)
    leaves = 3 * chi
    return {
        "N": expected_size(spec, n),
        "closed_leaf_equalities": curves * (n - 1),
        "hitchin_dimension": expected_size(spec, n) - curves * (n - 1),
        "slice_coordinates": leaves + curves,
        "slice_equalities": curves,
        "slice_dimension": leaves + curves - curves,
        "teichmueller_dimension": 6 * spec.genus - 6,
    }
