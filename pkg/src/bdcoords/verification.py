"""Seeded identity suites: projective-invariant laws at scale.

All randomness flows through ``random.Random(seed)`` (Python's Mersenne
Twister), drawing only integers via ``randint``; reports are therefore
reproducible bit for bit from (suite, parameters, seed).

Exact-mode suites assert identities with rational arithmetic and report the
number of failing cases (the worst deviation is then 0 or 1); float-mode
suites report the worst absolute deviation against the stated tolerance.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .flags import Flag, FlagTuple, is_generic, triple_ratio, double_ratio
from .halfplane import ProjPoint, cross_ratio, is_clockwise, shear_from_quadruple, sort_ccw
from .veronese import veronese_flag
from .multilinear import compare_band, compare_rhombus
from .surfaces import (CurveData, PantsLamination, PantsShearing, SLOTS,
                       SurfaceSpec, assemble_surface, boundary_lengths,
                       develop_pants, leaf_name, validate_shears, _cyclic_pair)
from . import bd

DEFAULT_SAMPLES = 200
DEFAULT_SEED = 1


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    worst: float = 0.0
    sign_mismatches: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, deviation: float, label: str, tol: float = 0.0):
        self.cases += 1
        self.worst = max(self.worst, deviation)
        if deviation > tol:
            if len(self.failures) < 20:
                self.failures.append(f"{label}: deviation {deviation:.6g}")
            else:
                self.failures.append("...")

    def lines(self):
        status = "PASS" if self.passed else "FAIL"
        head = (f"[{status}] {self.suite} cases={self.cases} "
                f"worst={self.worst:.6g}")
        if self.sign_mismatches is not None:
            head += f" sign_mismatches={self.sign_mismatches} (informational)"
        out = [head]
        out.extend(f"    {f}" for f in self.failures[:20])
        return out

    def to_json_dict(self):
        return {
            "suite": self.suite,
            "params": {k: v for k, v in sorted(self.params.items())},
            "cases": self.cases,
            "passed": self.passed,
            "worst_deviation": format(self.worst, ".17g"),
            "sign_mismatches": self.sign_mismatches,
            "failures": list(self.failures),
        }


# ---------------------------------------------------------------------------
# samplers


def sample_points(rng: random.Random, count: int, span: int = 40,
                  with_infinity: bool = False, min_separation: float = 0.0) -> list:
    """Distinct exact boundary points with small integer homogeneous coords.

    min_separation > 0 additionally enforces a chordal gap between the
    normalized points; float-mode suites need it because determinants of
    nearly-coincident high-degree Veronese flags are below double precision.
    """
    points = []
    if with_infinity:
        points.append(ProjPoint(1, 0))

    def separated(p: ProjPoint, q: ProjPoint) -> bool:
        if min_separation <= 0.0:
            return p != q
        num = abs(float(p.a) * float(q.b) - float(p.b) * float(q.a))
        scale = math.hypot(float(p.a), float(p.b)) * math.hypot(float(q.a), float(q.b))
        return num > min_separation * scale

    tries = 0
    while len(points) < count:
        tries += 1
        if tries > 10000:
            raise RuntimeError("point sampling stalled")
        a = rng.randint(-span, span)
        b = rng.randint(1, span)
        p = ProjPoint(a, b)
        if all(separated(p, q) for q in points):
            points.append(p)
    return points


def sample_float(rng: random.Random, lo: float, hi: float) -> float:
    """Uniform float from integer draws (keeps the RNG protocol int-only)."""
    return lo + (hi - lo) * rng.randint(0, 10 ** 9) / 10 ** 9


def random_unimodular(rng: random.Random, n: int, steps: int = 12) -> list:
    """Random integer matrix of determinant 1, via elementary shears."""
    m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randint(0, n - 1), rng.randint(0, n - 1)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


def random_generic_flags(rng: random.Random, n: int, count: int) -> list:
    """Random exact flags forming a generic tuple (rejection sampled)."""
    for _ in range(200):
        flags = []
        try:
            for _ in range(count):
                basis = [[Fraction(rng.randint(-9, 9)) for _ in range(n)]
                         for _ in range(n)]
                flags.append(Flag(basis))
        except ValueError:
            continue
        if is_generic(FlagTuple(flags)):
            return flags
    raise RuntimeError("generic flag sampling stalled")


# ---------------------------------------------------------------------------
# flag identity suites


def run_triple_ratio(n: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                     mode: str = "exact", tol: float = 1e-9) -> SuiteReport:
    """Triple ratios of Veronese flags at clockwise triples all equal 1."""
    rng = random.Random(seed)
    report = SuiteReport("triple-ratio", dict(n=n, samples=samples, seed=seed, mode=mode))
    min_sep = 0.2 if mode == "float" else 0.0
    for case in range(samples):
        pts = sample_points(rng, 3, with_infinity=(case % 7 == 0),
                            min_separation=min_sep)
        a, b, c = sort_ccw(pts)
        triple = (c, b, a)   # clockwise
        assert is_clockwise(*triple)
        if mode == "float":
            triple = tuple(p.to_float() for p in triple)
        flags = [veronese_flag(p, n) for p in triple]
        for p, q, r in bd.triple_indices(n):
            value = triple_ratio(*flags, p, q, r)
            if mode == "exact":
                dev = 0.0 if value == 1 else 1.0
            else:
                dev = abs(float(value.value) - 1.0)
            report.record(dev, f"case {case} T_{p}{q}{r}", tol if mode == "float" else 0.0)
    return report


def run_double_ratio(n: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED,
                     mode: str = "exact", tol: float = 1e-9) -> SuiteReport:
    """Double ratios of Veronese flags against -1/(cross ratio)."""
    rng = random.Random(seed)
    report = SuiteReport("double-ratio", dict(n=n, samples=samples, seed=seed, mode=mode))
    min_sep = 0.2 if mode == "float" else 0.0
    for case in range(samples):
        pts = sample_points(rng, 4, with_infinity=(case % 5 == 0),
                            min_separation=min_sep)
        a, b, c, d = sort_ccw(pts)   # counterclockwise quadruple
        z = cross_ratio(c, d, a, b)
        expected = -1 / z
        if mode == "float":
            a, b, c, d = (p.to_float() for p in (a, b, c, d))
        fa, fb, fc, fd = (veronese_flag(p, n) for p in (a, b, c, d))
        for p in range(1, n):
            value = double_ratio(fa, fc, fb, fd, p)
            if mode == "exact":
                dev = 0.0 if value == expected else 1.0
                report.record(dev, f"case {case} D_{p}")
            else:
                e = float(expected.value)
                dev = abs(float(value.value) - e) / max(1.0, abs(e))
                report.record(dev, f"case {case} D_{p}", tol)
    return report


def run_permutation(n: int, samples: int = 100, seed: int = DEFAULT_SEED) -> SuiteReport:
    """The triple-ratio permutation laws on random generic exact flags."""
    rng = random.Random(seed)
    report = SuiteReport("permutation", dict(n=n, samples=samples, seed=seed))
    for case in range(samples):
        E, F, G = random_generic_flags(rng, n, 3)
        for p, q, r in bd.triple_indices(n):
            t = triple_ratio(E, F, G, p, q, r)
            ok = (t == triple_ratio(F, G, E, q, r, p)
                  and t * triple_ratio(F, E, G, q, p, r) == 1)
            report.record(0.0 if ok else 1.0, f"case {case} T_{p}{q}{r}")
    return report


# ---------------------------------------------------------------------------
# binomial determinant suites


def run_rhombus(max_n: int = 10, max_l: int | None = None) -> SuiteReport:
    """|closed form| equals |brute force| for the rhombus determinants."""
    max_l = max_n if max_l is None else max_l
    report = SuiteReport("rhombus", dict(max_n=max_n, max_l=max_l))
    mismatches = 0
    for n in range(max_n + 1):
        for k in range(n + 1):
            for l in range(max_l + 1):
                r = compare_rhombus(n, k, l)
                report.record(0.0 if r["abs_equal"] else 1.0, f"rhombus{(n, k, l)}")
                mismatches += not r["sign_agree"]
    report.sign_mismatches = mismatches
    return report


def run_band(max_index: int = 10) -> SuiteReport:
    """|closed form| equals |brute force| for the band determinants."""
    report = SuiteReport("band", dict(max_index=max_index))
    mismatches = 0
    for p in range(max_index + 1):
        for q in range(1, max_index + 1):
            for r in range(max_index + 1):
                n = p + q + r
                res = compare_band(n, p, q, r)
                report.record(0.0 if res["abs_equal"] else 1.0, f"band{(p, q, r)}")
                mismatches += not res["sign_agree"]
    report.sign_mismatches = mismatches
    return report


# ---------------------------------------------------------------------------
# pants suites


def lamination_variants():
    """Every lamination kind and spiraling sign pattern with nonempty range."""
    out = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                out.append(PantsLamination(
                    kind="I", spiral_signs={1: s1, 2: s2, 3: s3},
                    leaf_orientations={}))
    for dist in SLOTS:
        j, k = _cyclic_pair(dist)
        for sd in (1, -1):
            signs = {dist: sd, j: 1, k: 1}
            out.append(PantsLamination(kind="II", spiral_signs=signs,
                                       leaf_orientations={}, distinguished=dist))
    return out


def sample_valid_shears(rng: random.Random, lam: PantsLamination,
                        lo: float = 0.05, hi: float = 2.5) -> PantsShearing:
    """Rejection-sample shears in the lamination's valid range."""
    leaves = lam.leaves()
    for _ in range(10000):
        values = {}
        for leaf in leaves:
            mag = sample_float(rng, lo, hi)
            if lam.kind == "II" and leaf != leaf_name(lam.distinguished, lam.distinguished):
                values[leaf] = mag
            else:
                values[leaf] = mag if rng.randint(0, 1) else -mag
        s = PantsShearing.for_lamination(lam, values)
        if validate_shears(lam, s):
            return s
    raise RuntimeError("shear sampling stalled")


def run_pants(samples: int = 100, seed: int = DEFAULT_SEED, tol: float = 1e-9) -> SuiteReport:
    """Developed boundary lengths against signed spiral shear sums, and the
    shear round trip through the developed leaf quadruples."""
    rng = random.Random(seed)
    report = SuiteReport("pants", dict(samples=samples, seed=seed))
    for lam in lamination_variants():
        tag = f"{lam.kind}/{lam.distinguished}/{tuple(lam.spiral_signs.values())}"
        for case in range(samples):
            s = sample_valid_shears(rng, lam)
            dev_pants = develop_pants(lam, s)
            expected = boundary_lengths(lam, s)
            for slot in SLOTS:
                fan = dev_pants.fans[slot]
                dev = abs(fan.length - float(expected[slot].value))
                report.record(dev, f"{tag} case {case} length slot {slot}", tol)
                signed = lam.spiral_signs[slot] * fan.shear_sum
                report.record(0.0 if signed > 0 else 1.0,
                              f"{tag} case {case} spiral sign slot {slot}")
            for leaf, quad in dev_pants.leaf_quadruples.items():
                back = shear_from_quadruple(quad.y, quad.zr, quad.x, quad.zl)
                dev = abs(float(back.value) - s[leaf])
                report.record(dev, f"{tag} case {case} shear {leaf}", tol)
    return report


# ---------------------------------------------------------------------------
# genus-2 suites


def sample_sign_pattern(rng: random.Random):
    return tuple(1 if rng.randint(0, 1) else -1 for _ in SLOTS)


def shears_from_lengths(signs, lengths) -> dict:
    """Kind-I shears realizing given boundary lengths with given spiraling.

    The spiral sums are (x12 + x13, x12 + x23, x13 + x23); they must equal
    sign_i * length_i, which pins the three shears linearly.
    """
    t1, t2, t3 = (s * l for s, l in zip(signs, lengths))
    x12 = (t1 + t2 - t3) / 2.0
    x13 = (t1 - t2 + t3) / 2.0
    x23 = (-t1 + t2 + t3) / 2.0
    return {leaf_name(1, 2): x12, leaf_name(1, 3): x13, leaf_name(2, 3): x23}


def sample_genus2(rng: random.Random, twist_span: float = 1.5):
    """A random genus-2 instance: spec, shears, twists with matching lengths.

    Lengths and twists stay in a moderate band: double precision cannot
    resolve the stacked Veronese determinants once developed vertices
    approach each other exponentially fast in the shear magnitudes.
    """
    signs0 = sample_sign_pattern(rng)
    signs1 = sample_sign_pattern(rng)
    lengths = [sample_float(rng, 0.8, 1.6) for _ in SLOTS]
    pants = {"P0": PantsLamination(kind="I", spiral_signs={s: signs0[s - 1] for s in SLOTS},
                                   leaf_orientations={}),
             "P1": PantsLamination(kind="I", spiral_signs={s: signs1[s - 1] for s in SLOTS},
                                   leaf_orientations={})}
    spec = SurfaceSpec(genus=2, pants=pants,
                       curves={f"C{i}": CurveData(ends=(("P0", i), ("P1", i)))
                               for i in SLOTS})
    shears = {"P0": shears_from_lengths(signs0, lengths),
              "P1": shears_from_lengths(signs1, lengths)}
    twists = {f"C{i}": sample_float(rng, -twist_span, twist_span) for i in SLOTS}
    return spec, shears, twists


def run_genus2_invariants(n_values=(3, 4, 5), seeds: int = 50,
                          seed: int = DEFAULT_SEED, tol: float = 1e-9) -> SuiteReport:
    """Vanishing triangle block, index independence, shear recovery, and the
    closed leaf condition on random genus-2 assemblies."""
    report = SuiteReport("genus2-invariants",
                         dict(n_values=list(n_values), seeds=seeds, seed=seed))
    rng = random.Random(seed)
    for case in range(seeds):
        spec, shears, twists = sample_genus2(rng)
        ds = assemble_surface(spec, shears, twists)
        for n in n_values:
            vec = bd.bd_vector(ds, n)
            for key, value in vec.tau.items():
                report.record(abs(value), f"case {case} n={n} tau{key}", tol)
            for (pid, leaf), _ in {(k[0], k[1]): None for k in vec.sigma}.items():
                values = [vec.sigma[(pid, leaf, p)] for p in range(1, n)]
                report.record(max(values) - min(values),
                              f"case {case} n={n} sigma spread {pid}/{leaf}", tol)
                report.record(abs(values[0] - shears[pid][leaf]),
                              f"case {case} n={n} shear recovery {pid}/{leaf}", tol)
                quad = ds.pants[pid].leaf_quadruples[leaf]
                classical = float(shear_from_quadruple(quad.y, quad.zr, quad.x, quad.zl).value)
                report.record(abs(values[0] - classical),
                              f"case {case} n={n} classical shear {pid}/{leaf}", tol)
            for cid in spec.curves:
                values = [vec.theta[(cid, p)] for p in range(1, n)]
                report.record(max(values) - min(values),
                              f"case {case} n={n} theta spread {cid}", tol)
            rep = bd.closed_leaf_report(vec, ds)
            report.record(rep.max_deviation(), f"case {case} n={n} closed leaf", tol)
            ok, problems = bd.polytope_membership(vec, spec, tol)
            report.record(0.0 if ok else 1.0, f"case {case} n={n} polytope {problems[:2]}")
            report.record(0.0 if bd.slice_membership(vec, tol) else 1.0,
                          f"case {case} n={n} slice membership")
    return report


def run_roundtrip(n_values=(3, 4, 5), seeds: int = 50, seed: int = DEFAULT_SEED,
                  tol: float = 1e-9) -> SuiteReport:
    """Slice realization round trip: realize a random slice point, recompute
    invariants, compare coordinatewise; plus the twist-solve residuals."""
    report = SuiteReport("roundtrip", dict(n_values=list(n_values), seeds=seeds, seed=seed))
    rng = random.Random(seed)
    for case in range(seeds):
        spec, shears, _ = sample_genus2(rng)
        gluing = {cid: sample_float(rng, -1.5, 1.5) for cid in spec.curves}
        sp = bd.SlicePoint(shears=shears, gluing=gluing)
        for n in n_values:
            ds = bd.realize_slice(sp, spec, n)
            vec = bd.bd_vector(ds, n)
            dev = 0.0
            for key, value in vec.tau.items():
                dev = max(dev, abs(value))
            for (pid, leaf, _p), value in vec.sigma.items():
                dev = max(dev, abs(value - shears[pid][leaf]))
            for (cid, _p), value in vec.theta.items():
                dev = max(dev, abs(value - gluing[cid]))
            report.record(dev, f"case {case} n={n} roundtrip", tol)
            residual = abs(float(ds.curves[next(iter(ds.curves))].gluing_cross_ratio().value)
                           + math.exp(-gluing[next(iter(ds.curves))]))
            report.record(residual, f"case {case} n={n} solve residual", tol)
    return report


SUITES = {
    "triple-ratio": lambda cfg: run_triple_ratio(cfg.n, cfg.samples, cfg.seed, cfg.mode),
    "double-ratio": lambda cfg: run_double_ratio(cfg.n, cfg.samples, cfg.seed, cfg.mode),
    "permutation": lambda cfg: run_permutation(cfg.n, cfg.samples, cfg.seed),
    "rhombus": lambda cfg: run_rhombus(cfg.max_index),
    "band": lambda cfg: run_band(cfg.max_index),
    "pants": lambda cfg: run_pants(cfg.samples, cfg.seed),
    "genus2": lambda cfg: run_genus2_invariants(seeds=cfg.samples, seed=cfg.seed),
    "roundtrip": lambda cfg: run_roundtrip(seeds=cfg.samples, seed=cfg.seed),
}
