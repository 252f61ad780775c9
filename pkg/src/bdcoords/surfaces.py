"""Pants decompositions, shear developing, and twist gluing.

A pair of pants carries a maximal geodesic lamination of one of two kinds:

* kind I: three biinfinite leaves B12, B13, B23, leaf Bij spiraling into the
  boundaries i and j; the two complementary ideal triangles each touch all
  three boundaries;
* kind II: a distinguished boundary i and leaves Bii (both ends spiraling
  into i), Bij, Bik; one triangle carries both sides of Bij, the other both
  sides of Bik, and Bii separates them.

Everything combinatorial is encoded in small tables: each triangle's corners
(0, 1, 2) are listed in counterclockwise order as developed, sides are
ordered corner pairs (u, w) along the boundary walk, and a leaf's two sides
are glued orientation-reversingly (u_A <-> w_B, w_A <-> u_B).  Leaf ends are
named end0 (at u of the first side) and end1 (at w of the first side).

Developing places a base ideal triangle at (0, 1, oo) and crosses leaves by
the cross-ratio rule for the shear x along the leaf: the quadruple
(y, z_new, x, z_known) with counterclockwise (x, z_known, y) satisfies
z(y, z_new, x, z_known) = -exp(-x).

Convention notes (load-bearing, referenced throughout):

1. Placed corner cycles (0, 1, 2) are counterclockwise on the circle.
2. Walking a spike fan by always crossing the side that *ends* at the spike
   corner advances counterclockwise around the spike; the deck map of one
   full period is the inverse of the boundary holonomy induced by the pants
   orientation (region-on-the-left convention).
3. Each decomposing curve is oriented so that the pants of ends[0] lies on
   its left; equivalently the induced boundary orientation of the ends[0]
   pants agrees with the curve's.  In the normalized curve chart the
   repelling fixed point sits at 0, the attracting one at oo, the left side
   develops into the negative half-line and the right side into the positive
   one.
4. Boundary translation lengths are |sum of shears over spiral crossings|,
   counting a leaf once per end spiraling into the boundary (so the doubled
   leaf of kind II counts twice at the distinguished boundary).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import Scalar
from .halfplane import (Mobius, ProjPoint, axis_data, cross_ratio, fourth_point,
                        mobius_to_standard, orientation, twist_map, wedge)

_LENGTH_MATCH_RTOL = 1e-9   # relative tolerance for lengths across a curve
_INTERNAL_RTOL = 1e-8       # developed length vs shear sum self-check


class LaminationError(ValueError):
    """Malformed lamination or shear data."""


class SurfaceSpecError(ValueError):
    """Malformed surface gluing data."""


class AssemblyError(ValueError):
    """A developing or gluing step degenerated."""


class UnreachableTwistError(ValueError):
    """A twist solve hit a degenerate configuration."""


SLOTS = (1, 2, 3)


def leaf_name(i: int, j: int) -> str:
    a, b = sorted((i, j))
    return f"B{a}{b}"


def _cyclic_pair(i: int) -> tuple[int, int]:
    return (i % 3) + 1, ((i + 1) % 3) + 1


@dataclass(frozen=True)
class PantsLamination:
    """Lamination kind, spiraling signs per boundary, leaf orientations.

    ``spiral_signs[slot]`` is +1 for positive spiraling (the leaves wind
    against the induced boundary orientation) and -1 otherwise.

    ``leaf_orientations`` orients each biinfinite leaf: for a leaf joining
    two distinct boundaries the value is the boundary slot its forward end
    spirals into; for the doubled leaf of kind II it is 0 or 1, naming the
    forward end (end0/end1 as in the side tables).
    """

    kind: str
    spiral_signs: dict
    leaf_orientations: dict
    distinguished: int | None = None

    def __post_init__(self):
        if self.kind not in ("I", "II"):
            raise LaminationError(f"unknown lamination kind {self.kind!r}")
        if self.kind == "II":
            if self.distinguished not in SLOTS:
                raise LaminationError("kind II needs a distinguished boundary 1, 2 or 3")
        elif self.distinguished is not None:
            raise LaminationError("kind I has no distinguished boundary")
        signs = dict(self.spiral_signs)
        if set(signs) != set(SLOTS) or any(s not in (1, -1) for s in signs.values()):
            raise LaminationError("spiral_signs must map slots 1, 2, 3 to +-1")
        orient = dict(self.leaf_orientations)
        for leaf in self.leaves():
            orient.setdefault(leaf, self._default_orientation(leaf))
        if set(orient) != set(self.leaves()):
            unknown = set(orient) - set(self.leaves())
            raise LaminationError(f"orientations for unknown leaves {sorted(unknown)}")
        for leaf, value in orient.items():
            ends = self.leaf_end_slots(leaf)
            if ends[0] == ends[1]:
                if value not in (0, 1):
                    raise LaminationError(f"{leaf} orientation must be an end id 0 or 1")
            elif value not in ends:
                raise LaminationError(f"{leaf} orientation must be one of {ends}")
        object.__setattr__(self, "spiral_signs", signs)
        object.__setattr__(self, "leaf_orientations", orient)

    def _default_orientation(self, leaf: str):
        ends = self.leaf_end_slots(leaf)
        return 0 if ends[0] == ends[1] else min(ends)

    def leaves(self) -> tuple:
        if self.kind == "I":
            return (leaf_name(1, 2), leaf_name(1, 3), leaf_name(2, 3))
        i = self.distinguished
        j, k = _cyclic_pair(i)
        return (leaf_name(i, i), leaf_name(i, j), leaf_name(i, k))

    def leaf_end_slots(self, leaf: str) -> tuple[int, int]:
        """(slot of end0, slot of end1), following the side tables."""
        return tables_for(self).leaf_end_slots[leaf]

    def forward_end(self, leaf: str) -> int:
        """End id (0 or 1) of the leaf's forward end under its orientation."""
        value = self.leaf_orientations[leaf]
        ends = self.leaf_end_slots(leaf)
        if ends[0] == ends[1]:
            return value
        return ends.index(value)


@dataclass(frozen=True)
class LeafSide:
    tri: int
    corners: tuple[int, int]  # (u, w), the boundary-walk direction in `tri`


@dataclass(frozen=True)
class LaminationTables:
    corner_slot: dict        # (tri, corner) -> boundary slot
    leaf_sides: dict         # leaf -> (LeafSide A, LeafSide B)
    side_leaf: dict          # (tri, (u, w)) -> (leaf, side index)
    leaf_end_slots: dict     # leaf -> (slot of end0, slot of end1)


_TABLES_CACHE: dict = {}


def tables_for(lam: PantsLamination) -> LaminationTables:
    key = (lam.kind, lam.distinguished)
    if key not in _TABLES_CACHE:
        _TABLES_CACHE[key] = _build_tables(*key)
    return _TABLES_CACHE[key]


def _build_tables(kind: str, distinguished) -> LaminationTables:
    if kind == "I":
        corner_slot = {(0, 0): 1, (0, 1): 2, (0, 2): 3,
                       (1, 0): 1, (1, 1): 3, (1, 2): 2}
        leaf_sides = {
            leaf_name(1, 2): (LeafSide(0, (0, 1)), LeafSide(1, (2, 0))),
            leaf_name(2, 3): (LeafSide(0, (1, 2)), LeafSide(1, (1, 2))),
            leaf_name(1, 3): (LeafSide(0, (2, 0)), LeafSide(1, (0, 1))),
        }
    else:
        i = distinguished
        j, k = _cyclic_pair(i)
        corner_slot = {(0, 0): j, (0, 1): i, (0, 2): i,
                       (1, 0): k, (1, 1): i, (1, 2): i}
        leaf_sides = {
            leaf_name(i, j): (LeafSide(0, (0, 1)), LeafSide(0, (2, 0))),
            leaf_name(i, i): (LeafSide(0, (1, 2)), LeafSide(1, (1, 2))),
            leaf_name(i, k): (LeafSide(1, (0, 1)), LeafSide(1, (2, 0))),
        }
    side_leaf = {}
    end_slots = {}
    for leaf, (sa, sb) in leaf_sides.items():
        side_leaf[(sa.tri, sa.corners)] = (leaf, 0)
        side_leaf[(sb.tri, sb.corners)] = (leaf, 1)
        end_slots[leaf] = (corner_slot[(sa.tri, sa.corners[0])],
                           corner_slot[(sa.tri, sa.corners[1])])
    return LaminationTables(corner_slot=corner_slot, leaf_sides=leaf_sides,
                            side_leaf=side_leaf, leaf_end_slots=end_slots)


@dataclass(frozen=True)
class FanStep:
    """One spike corner of a boundary fan and the leaf crossed leaving it."""

    tri: int
    corner: int
    leaf: str
    side: tuple[int, int]
    fan_end: int    # which end of the crossed leaf sits at the spike


def fan_cycle(lam: PantsLamination, slot: int) -> list[FanStep]:
    """The period of spike corners around a boundary, in counterclockwise order.

    At each corner the traversal crosses the triangle side that ends at the
    corner; the glue tables carry it to the next spike corner.
    """
    tables = tables_for(lam)
    corners = sorted(c for c, s in tables.corner_slot.items() if s == slot)
    if not corners:
        raise LaminationError(f"no spikes at boundary {slot}")
    start = corners[0]
    steps = []
    cur = start
    while True:
        tri, c = cur
        side = ((c + 2) % 3, c)
        leaf, which = tables.side_leaf[(tri, side)]
        other = tables.leaf_sides[leaf][1 - which]
        steps.append(FanStep(tri=tri, corner=c, leaf=leaf, side=side,
                             fan_end=1 - which))
        cur = (other.tri, other.corners[0])
        if cur == start:
            break
        if len(steps) > len(tables.corner_slot):
            raise LaminationError("fan traversal does not close up")
    if len(steps) != len(corners):
        raise LaminationError("fan traversal missed spike corners")
    return steps


# ---------------------------------------------------------------------------
# shears: validity ranges and boundary lengths


@dataclass(frozen=True)
class PantsShearing:
    """One shear value per biinfinite leaf, keyed by leaf name."""

    values: dict

    def __getitem__(self, leaf: str) -> float:
        return self.values[leaf]

    @staticmethod
    def for_lamination(lam: PantsLamination, values: dict) -> "PantsShearing":
        values = {leaf: float(v) for leaf, v in values.items()}
        if set(values) != set(lam.leaves()):
            raise LaminationError(
                f"shears keyed {sorted(values)}, lamination has leaves {sorted(lam.leaves())}")
        return PantsShearing(values)


def signed_boundary_sums(lam: PantsLamination, s: PantsShearing) -> dict:
    """Per boundary slot, the sum of shears over all ends spiraling into it."""
    sums = {}
    for slot in SLOTS:
        sums[slot] = sum(s[step.leaf] for step in fan_cycle(lam, slot))
    return sums


def validate_shears(lam: PantsLamination, s: PantsShearing) -> bool:
    """Whether the shears lie in the valid range for this lamination.

    Every boundary needs sign(C) * (sum of shears over ends spiraling to C)
    positive; kind II additionally needs the two simple leaves positive
    (equivalently, positive spiraling at the two plain boundaries).
    """
    s = PantsShearing.for_lamination(lam, s.values)
    sums = signed_boundary_sums(lam, s)
    if any(lam.spiral_signs[slot] * sums[slot] <= 0 for slot in SLOTS):
        return False
    if lam.kind == "II":
        i = lam.distinguished
        j, k = _cyclic_pair(i)
        if s[leaf_name(i, j)] <= 0 or s[leaf_name(i, k)] <= 0:
            return False
    return True


def boundary_lengths(lam: PantsLamination, s: PantsShearing) -> dict:
    """Hyperbolic boundary lengths {slot: Scalar}, |signed spiral sums|."""
    if not validate_shears(lam, s):
        raise LaminationError("shears outside the valid range for this lamination")
    return {slot: Scalar(abs(v)) for slot, v in signed_boundary_sums(lam, s).items()}


# ---------------------------------------------------------------------------
# developing


@dataclass(frozen=True)
class Placed:
    """A lift of one ideal triangle: its corners placed on the circle."""

    tri: int
    pts: tuple


def _solve_across(e1: ProjPoint, e2: ProjPoint, known: ProjPoint, shear: float) -> ProjPoint:
    """New vertex across the edge (e1, e2) from `known`, at the given shear."""
    if orientation(e1, known, e2) > 0:
        x, y = e1, e2
    else:
        x, y = e2, e1
    r = -math.exp(-float(shear))
    new = fourth_point(y, x, known, r)
    if wedge(new, e1) == 0 or wedge(new, e2) == 0:
        raise AssemblyError("developed vertex collapsed onto the crossed edge")
    return new


def _cross(tables: LaminationTables, placed: Placed, side: tuple[int, int],
           s: PantsShearing) -> Placed:
    u, w = side
    leaf, which = tables.side_leaf[(placed.tri, side)]
    other = tables.leaf_sides[leaf][1 - which]
    uo, wo = other.corners
    third = 3 - u - w
    third_o = 3 - uo - wo
    new_vertex = _solve_across(placed.pts[u], placed.pts[w], placed.pts[third],
                               s[leaf])
    pts = [None, None, None]
    pts[wo] = placed.pts[u]
    pts[uo] = placed.pts[w]
    pts[third_o] = new_vertex
    return Placed(other.tri, tuple(pts))


@dataclass(frozen=True)
class FanData:
    """A developed boundary fan: one period of spiraling plaques."""

    slot: int
    steps: tuple            # FanStep per plaque of the period
    placed: tuple           # Placed, length period + 1 (last = deck image of first)
    deck: Mobius            # boundary holonomy, induced orientation
    attracting: ProjPoint
    repelling: ProjPoint
    length: float
    shear_sum: float        # signed sum over the period's crossings

    def plaque_vertex_for_arc(self, triangle: int) -> ProjPoint:
        """The short-arc vertex: for the first fan plaque that is a lift of
        `triangle`, the vertex whose side toward the spike does not separate
        the plaque from the axis (the trailing vertex of the spiral)."""
        for k, step in enumerate(self.steps):
            if step.tri == triangle:
                c = step.corner
                pts = self.placed[k].pts
                # spiral runs toward the non-spike axis end; with positive
                # period sum the traversal runs away from it, so the trailing
                # vertex is on the exit side, otherwise on the entry side
                return pts[(c + 2) % 3] if self.shear_sum > 0 else pts[(c + 1) % 3]
        raise SurfaceSpecError(
            f"triangle {triangle} has no spike at boundary {self.slot}")

    def fan_vertex(self) -> ProjPoint:
        """The common spike point of the fan (an axis endpoint)."""
        return self.placed[0].pts[self.steps[0].corner]


@dataclass(frozen=True)
class LeafQuadruple:
    """Developed data of one biinfinite leaf: axis ends and side vertices.

    x is the forward endpoint of the oriented leaf, y the backward one;
    zl and zr are the third vertices of the plaques on its left and right.
    """

    x: ProjPoint
    y: ProjPoint
    zl: ProjPoint
    zr: ProjPoint


@dataclass(frozen=True)
class DevelopedPants:
    lam: PantsLamination
    shears: PantsShearing
    triangles: dict          # tri -> Placed (one lift of each triangle)
    leaf_quadruples: dict    # leaf -> LeafQuadruple
    fans: dict               # slot -> FanData

    def boundary_holonomy(self, slot: int) -> Mobius:
        return self.fans[slot].deck


_BASE_POINTS = (ProjPoint(0.0, 1.0), ProjPoint(1.0, 1.0), ProjPoint(1.0, 0.0))


def develop_pants(lam: PantsLamination, s: PantsShearing,
                  base_points=None) -> DevelopedPants:
    """Develop one pair of pants from its shear coordinates.

    Places a base lift of triangle 0 at (0, 1, oo) (or at the given
    counterclockwise base_points), develops one neighboring lift of triangle
    1 and one full fan period around each boundary, and reads off the
    boundary holonomies as the deck maps of the fans.
    """
    s = PantsShearing.for_lamination(lam, s.values)
    if not validate_shears(lam, s):
        raise LaminationError("shears outside the valid range for this lamination")
    tables = tables_for(lam)
    pts = tuple(base_points) if base_points is not None else _BASE_POINTS
    if len(pts) != 3 or orientation(*pts) <= 0:
        raise AssemblyError("base triangle must be three counterclockwise points")
    base = Placed(0, pts)

    triangles = {0: base}
    for side in ((0, 1), (1, 2), (2, 0)):
        leaf, which = tables.side_leaf[(0, side)]
        if tables.leaf_sides[leaf][1 - which].tri == 1:
            triangles[1] = _cross(tables, base, side, s)
            break
    if 1 not in triangles:
        raise LaminationError("triangle 1 unreachable from triangle 0")

    quadruples = {}
    for leaf, (side_a, side_b) in tables.leaf_sides.items():
        plaque = triangles[side_a.tri]
        neighbor = _cross(tables, plaque, side_a.corners, s)
        u, w = side_a.corners
        end_pts = (plaque.pts[u], plaque.pts[w])   # end0, end1
        fwd = lam.forward_end(leaf)
        x, y = end_pts[fwd], end_pts[1 - fwd]
        s_a = plaque.pts[3 - u - w]
        ou, ow = side_b.corners
        s_b = neighbor.pts[3 - ou - ow]
        if orientation(x, s_a, y) > 0:
            zl, zr = s_a, s_b
        else:
            zl, zr = s_b, s_a
        if orientation(x, zl, y) <= 0 or orientation(x, zr, y) >= 0:
            raise AssemblyError(f"leaf {leaf}: side vertices not separated by the leaf")
        quadruples[leaf] = LeafQuadruple(x=x, y=y, zl=zl, zr=zr)

    fans = {}
    for slot in SLOTS:
        steps = fan_cycle(lam, slot)
        placed = [triangles[steps[0].tri]]
        for step in steps:
            placed.append(_cross(tables, placed[-1], step.side, s))
        first, last = placed[0], placed[-1]
        # convention 2: one period of counterclockwise fan traversal is the
        # inverse of the induced-orientation boundary holonomy
        deck = (mobius_to_standard(*first.pts).inverse()
                @ mobius_to_standard(*last.pts))
        shear_sum = sum(s[step.leaf] for step in steps)
        try:
            att, rep, length = axis_data(deck)
        except ValueError as exc:
            raise AssemblyError(f"boundary {slot} holonomy is not hyperbolic: {exc}")
        if abs(float(length.value) - abs(shear_sum)) > _INTERNAL_RTOL * max(1.0, abs(shear_sum)):
            raise AssemblyError(
                f"developed length {float(length.value)} of boundary {slot} "
                f"does not match shear sum {shear_sum}")
        fans[slot] = FanData(slot=slot, steps=tuple(steps), placed=tuple(placed),
                             deck=deck, attracting=att, repelling=rep,
                             length=float(length.value), shear_sum=shear_sum)
    return DevelopedPants(lam=lam, shears=s, triangles=triangles,
                          leaf_quadruples=quadruples, fans=fans)


# ---------------------------------------------------------------------------
# closed surfaces


@dataclass(frozen=True)
class CurveData:
    """One decomposing curve: its two (pants, slot) ends and short-arc hosts.

    ends[0] is the left side of the oriented curve (convention 3); the
    short-arc triangles name which complementary triangle of each side's
    pants hosts the corresponding arc endpoint.
    """

    ends: tuple              # ((pants_id, slot), (pants_id, slot))
    left_triangle: int = 0
    right_triangle: int = 0


@dataclass(frozen=True)
class SurfaceSpec:
    """A closed genus >= 2 surface glued from pairs of pants."""

    genus: int
    pants: dict              # pants_id -> PantsLamination
    curves: dict             # curve_id -> CurveData

    def __post_init__(self):
        if self.genus < 2:
            raise SurfaceSpecError("closed hyperbolic surfaces need genus >= 2")
        expected_pants = 2 * (self.genus - 1)
        expected_curves = 3 * (self.genus - 1)
        if len(self.pants) != expected_pants:
            raise SurfaceSpecError(
                f"genus {self.genus} needs {expected_pants} pants, got {len(self.pants)}")
        if len(self.curves) != expected_curves:
            raise SurfaceSpecError(
                f"genus {self.genus} needs {expected_curves} curves, got {len(self.curves)}")
        used = {}
        for cid, curve in self.curves.items():
            if len(curve.ends) != 2:
                raise SurfaceSpecError(f"curve {cid} must have exactly two ends")
            for pid, slot in curve.ends:
                if pid not in self.pants:
                    raise SurfaceSpecError(f"curve {cid} references unknown pants {pid!r}")
                if slot not in SLOTS:
                    raise SurfaceSpecError(f"curve {cid} references slot {slot!r}")
                if (pid, slot) in used:
                    raise SurfaceSpecError(
                        f"pants boundary ({pid}, {slot}) glued by both "
                        f"{used[(pid, slot)]} and {cid}")
                used[(pid, slot)] = cid
            for tri, side in ((curve.left_triangle, "left"), (curve.right_triangle, "right")):
                if tri not in (0, 1):
                    raise SurfaceSpecError(f"curve {cid}: {side} triangle must be 0 or 1")
        for pid in self.pants:
            for slot in SLOTS:
                if (pid, slot) not in used:
                    raise SurfaceSpecError(f"pants boundary ({pid}, {slot}) is unglued")

    def side(self, curve_id: str, side: str):
        """(pants_id, slot, arc triangle) of the named side of a curve."""
        curve = self.curves[curve_id]
        if side == "left":
            return (*curve.ends[0], curve.left_triangle)
        if side == "right":
            return (*curve.ends[1], curve.right_triangle)
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


@dataclass(frozen=True)
class CurveChart:
    """One decomposing curve in its normalized chart.

    The curve's axis is (0, oo) with the repelling point x at 0 and the
    attracting point y at oo.  The right side is scaled so its short-arc
    vertex zr sits at 1; the left side so that at twist 0 its vertex zl sits
    at -1, and the twist then moves zl to -exp(2t).
    """

    curve_id: str
    length: float
    twist: float
    x: ProjPoint
    y: ProjPoint
    zl: ProjPoint
    zr: ProjPoint
    holonomy: Mobius
    left_map: Mobius          # left pants chart -> curve chart (twist included)
    right_map: Mobius
    fan_vertex_attracting: dict   # side -> bool: spike point of that side's fan

    def gluing_cross_ratio(self) -> Scalar:
        return cross_ratio(self.y, self.zr, self.x, self.zl)


@dataclass(frozen=True)
class DevelopedSurface:
    spec: SurfaceSpec
    shears: dict             # pants_id -> PantsShearing
    twists: dict             # curve_id -> float
    pants: dict              # pants_id -> DevelopedPants
    curves: dict             # curve_id -> CurveChart


def _normalizer_to_axis(att: ProjPoint, rep: ProjPoint) -> Mobius:
    """An orientation-preserving map sending rep -> 0, att -> oo."""
    det = wedge(rep, att)
    if det == 0:
        raise AssemblyError("axis normalization needs distinct endpoints")
    if det > 0:
        return Mobius([[rep.b, -rep.a], [att.b, -att.a]])
    return Mobius([[-rep.b, rep.a], [att.b, -att.a]])


def _affine_value(p: ProjPoint) -> float:
    if p.is_infinity:
        raise AssemblyError("short-arc vertex landed on the curve axis")
    return float(p.a) / float(p.b)


def assemble_surface(spec: SurfaceSpec, shears: dict, twists: dict,
                     base_points: dict | None = None) -> DevelopedSurface:
    """Develop every pants and glue them with the given twists.

    Both sides of each curve must develop the same boundary length (relative
    tolerance 1e-9).  Per curve, both sides are normalized onto the axis
    (0, oo) with matching translation direction and the left side is
    post-composed with the twist along the axis.

    base_points optionally places each pants' base triangle elsewhere; all
    invariants are unchanged (the per-curve normalization eats the chart).
    """
    shears = {pid: PantsShearing.for_lamination(spec.pants[pid], shears[pid].values
                                                if isinstance(shears[pid], PantsShearing)
                                                else shears[pid])
              for pid in spec.pants}
    twists = {cid: float(twists.get(cid, 0.0)) for cid in spec.curves}
    base_points = base_points or {}
    developed = {pid: develop_pants(spec.pants[pid], shears[pid],
                                    base_points=base_points.get(pid))
                 for pid in spec.pants}

    charts = {}
    for cid in spec.curves:
        (pid_l, slot_l, tri_l) = spec.side(cid, "left")
        (pid_r, slot_r, tri_r) = spec.side(cid, "right")
        fan_l = developed[pid_l].fans[slot_l]
        fan_r = developed[pid_r].fans[slot_r]
        if abs(fan_l.length - fan_r.length) > _LENGTH_MATCH_RTOL * max(1.0, fan_l.length):
            raise AssemblyError(
                f"curve {cid}: boundary lengths differ across the gluing "
                f"({fan_l.length:.17g} left vs {fan_r.length:.17g} right)")
        length = fan_l.length

        # convention 3: ends[0] is the left side, whose induced boundary
        # orientation agrees with the curve's; the right side opposes it.
        rho_left = fan_l.deck
        rho_right = fan_r.deck.inverse()

        maps = {}
        fan_vertex_att = {}
        raw_vertex = {}
        for side, fan, rho, tri in (("left", fan_l, rho_left, tri_l),
                                    ("right", fan_r, rho_right, tri_r)):
            att, rep, _ = axis_data(rho)
            norm = _normalizer_to_axis(att, rep)
            z_raw = fan.plaque_vertex_for_arc(tri)
            z0 = _affine_value(norm(z_raw))
            if z0 == 0.0:
                raise AssemblyError(f"curve {cid}: short-arc vertex degenerated to 0")
            expected_negative = side == "left"
            if (z0 < 0.0) != expected_negative:
                raise AssemblyError(
                    f"curve {cid}: {side} side developed on the wrong side of the axis")
            maps[side] = Mobius.scaling(1.0 / abs(z0)) @ norm
            v = fan.fan_vertex()
            fan_vertex_att[side] = abs(wedge(v, att)) < abs(wedge(v, rep))
            raw_vertex[side] = z_raw

        t = twists[cid]
        left_map = twist_map(ProjPoint.infinity("float"), ProjPoint(0.0, 1.0), t) @ maps["left"]
        right_map = maps["right"]
        zl = left_map(raw_vertex["left"])
        zr = right_map(raw_vertex["right"])
        half = math.exp(length / 2.0)
        charts[cid] = CurveChart(
            curve_id=cid, length=length, twist=t,
            x=ProjPoint(0.0, 1.0), y=ProjPoint.infinity("float"),
            zl=zl, zr=zr,
            holonomy=Mobius([[half, 0.0], [0.0, 1.0 / half]]),
            left_map=left_map, right_map=right_map,
            fan_vertex_attracting=fan_vertex_att)

    return DevelopedSurface(spec=spec, shears=shears, twists=twists,
                            pants=developed, curves=charts)


def twist_deform(ds: DevelopedSurface, curve_id: str, t) -> DevelopedSurface:
    """Re-glue with the named curve's twist incremented by t."""
    if curve_id not in ds.curves:
        raise KeyError(f"unknown curve {curve_id!r}")
    twists = dict(ds.twists)
    twists[curve_id] = twists[curve_id] + float(t)
    return assemble_surface(ds.spec, ds.shears, twists)


def solve_twist(ds: DevelopedSurface, curve_id: str, target_w) -> Scalar:
    """The twist increment t0 after which the curve's gluing cross ratio is
    -exp(-target_w).

    In the normalized chart the cross ratio is a strictly monotone Moebius
    function of exp(2t), so the solve is closed-form; the result is checked
    by re-evaluation to 1e-9.
    """
    if curve_id not in ds.curves:
        raise KeyError(f"unknown curve {curve_id!r}")
    chart = ds.curves[curve_id]
    r = -math.exp(-float(target_w))
    # solve z(y, zr, x, zeta) = r for the twisted image zeta of zl
    y, zr, x = chart.y, chart.zr, chart.x
    byc = wedge(zr, x)
    bya = wedge(zr, y)
    zeta = ProjPoint(y.a * byc - r * x.a * bya, y.b * byc - r * x.b * bya)
    if zeta.is_infinity or zeta.b == 0 or chart.zl.is_infinity:
        raise UnreachableTwistError(f"curve {curve_id}: degenerate twist solve")
    ratio = _affine_value(zeta) / _affine_value(chart.zl)
    if ratio <= 0.0:
        raise UnreachableTwistError(
            f"curve {curve_id}: target cross ratio {r} not on the twist orbit")
    t0 = 0.5 * math.log(ratio)
    check = twist_deform(ds, curve_id, t0).curves[curve_id].gluing_cross_ratio()
    if abs(float(check.value) - r) > 1e-9 * max(1.0, abs(r)):
        raise UnreachableTwistError(
            f"curve {curve_id}: twist solve residual {abs(float(check.value) - r)}")
    return Scalar(t0)


# ---------------------------------------------------------------------------
# the canonical two-pants genus-2 surface


def genus2_spec(signs=(1, 1, 1), leaf_orientations=None) -> SurfaceSpec:
    """Two kind-I pants sharing all three curves: the canonical test surface."""
    orient = leaf_orientations or {}
    pants = {}
    for pid in ("P0", "P1"):
        pants[pid] = PantsLamination(
            kind="I",
            spiral_signs={slot: signs[slot - 1] for slot in SLOTS},
            leaf_orientations=dict(orient.get(pid, {})))
    curves = {f"C{i}": CurveData(ends=(("P0", i), ("P1", i))) for i in SLOTS}
    return SurfaceSpec(genus=2, pants=pants, curves=curves)
