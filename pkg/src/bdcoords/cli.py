"""Command-line entry point.

Three subcommands:

* ``verify``      runs a seeded identity suite and exits 0 iff it passes;
* ``invariants``  computes the invariant vector of a surface JSON file;
* ``realize``     realizes a slice-point JSON file as a hyperbolic surface
                  and reports the round-trip invariants.

Exit codes: 0 success, 1 verification failure, 2 input error.  Reports are
deterministic functions of (arguments, input files): floats are printed with
17 significant digits and the only randomness is Python's Mersenne Twister
seeded from --seed.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .scalars import serialize_value
from .surfaces import (CurveData, LaminationError, PantsLamination, PantsShearing,
                       AssemblyError, SurfaceSpec, SurfaceSpecError, SLOTS,
                       assemble_surface)
from . import bd
from . import verification

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


@dataclass
class RunConfig:
    command: str
    suite: str | None = None
    n: int = 3
    samples: int = verification.DEFAULT_SAMPLES
    seed: int = verification.DEFAULT_SEED
    mode: str = "exact"
    max_index: int = 10
    tol: float = bd.DEFAULT_TOL
    input_path: str | None = None
    out: str | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.samples < 1:
            raise ValueError("need samples >= 1")


# ---------------------------------------------------------------------------
# JSON codecs


def spec_from_dict(data: dict):
    """Parse {genus, pants, curves} (+ shears/twists/gluing) from JSON data."""
    try:
        genus = int(data["genus"])
        pants = {}
        for entry in data["pants"]:
            pid = entry["id"]
            lam = PantsLamination(
                kind=entry["type"],
                spiral_signs={int(k): int(v)
                              for k, v in entry.get("spiral_signs",
                                                    {s: 1 for s in SLOTS}).items()},
                leaf_orientations={k: int(v)
                                   for k, v in entry.get("leaf_orientations", {}).items()},
                distinguished=entry.get("distinguished"))
            if pid in pants:
                raise SurfaceSpecError(f"duplicate pants id {pid!r}")
            pants[pid] = lam
        curves = {}
        for entry in data["curves"]:
            cid = entry["id"]
            ends = tuple((end[0], int(end[1])) for end in entry["ends"])
            arc = entry.get("short_arc", {})
            if cid in curves:
                raise SurfaceSpecError(f"duplicate curve id {cid!r}")
            curves[cid] = CurveData(ends=ends,
                                    left_triangle=int(arc.get("left_triangle", 0)),
                                    right_triangle=int(arc.get("right_triangle", 0)))
        spec = SurfaceSpec(genus=genus, pants=pants, curves=curves)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, (SurfaceSpecError, LaminationError)):
            raise
        raise SurfaceSpecError(f"malformed surface data: {exc}")
    return spec


def shears_from_dict(spec: SurfaceSpec, data: dict) -> dict:
    shears = {}
    for pid, lam in spec.pants.items():
        if pid not in data:
            raise SurfaceSpecError(f"missing shears for pants {pid!r}")
        shears[pid] = PantsShearing.for_lamination(
            lam, {leaf: float(v) for leaf, v in data[pid].items()})
    return shears


def spec_to_dict(spec: SurfaceSpec) -> dict:
    return {
        "genus": spec.genus,
        "pants": [
            {"id": pid, "type": lam.kind,
             **({"distinguished": lam.distinguished} if lam.kind == "II" else {}),
             "spiral_signs": {str(s): lam.spiral_signs[s] for s in SLOTS},
             "leaf_orientations": dict(sorted(lam.leaf_orientations.items()))}
            for pid, lam in sorted(spec.pants.items())],
        "curves": [
            {"id": cid, "ends": [list(end) for end in curve.ends],
             "short_arc": {"left_triangle": curve.left_triangle,
                           "right_triangle": curve.right_triangle}}
            for cid, curve in sorted(spec.curves.items())],
    }


def _dump_json(data, path: str | None):
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_csv(vec: bd.BDVector, path: str):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["block", "object", "p", "q", "r", "value"])
        for block, obj, p, q, r, value in vec.rows():
            writer.writerow([block, obj, p, q, r, serialize_value(value)])


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(config: RunConfig) -> int:
    if config.suite == "all":
        suites = list(verification.SUITES)
    elif config.suite in verification.SUITES:
        suites = [config.suite]
    else:
        print(f"unknown suite {config.suite!r}; known: "
              f"{', '.join(sorted(verification.SUITES))} or 'all'", file=sys.stderr)
        return EXIT_INPUT_ERROR
    reports = []
    for name in suites:
        report = verification.SUITES[name](config)
        reports.append(report)
        for line in report.lines():
            print(line)
    if config.out:
        _dump_json([r.to_json_dict() for r in reports], config.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def cmd_invariants(config: RunConfig) -> int:
    with open(config.input_path) as fh:
        data = json.load(fh)
    spec = spec_from_dict(data)
    shears = shears_from_dict(spec, data.get("shears", {}))
    twists = {cid: float(v) for cid, v in data.get("twists", {}).items()}
    ds = assemble_surface(spec, shears, twists)
    vec = bd.bd_vector(ds, config.n)
    report = bd.closed_leaf_report(vec, ds)
    ok, problems = bd.polytope_membership(vec, spec, config.tol)
    payload = {
        "surface": spec_to_dict(spec),
        "n": config.n,
        "invariants": vec.to_json_dict(),
        "closed_leaf": report.to_json_dict(),
        "polytope_membership": ok,
        "polytope_violations": problems,
        "slice_membership": bd.slice_membership(vec, config.tol),
    }
    prefix = config.out or "invariants"
    _dump_json(payload, f"{prefix}.json")
    _write_csv(vec, f"{prefix}.csv")
    print(f"wrote {prefix}.json and {prefix}.csv "
          f"({vec.size()} invariants, slice={payload['slice_membership']})")
    return EXIT_OK


def cmd_realize(config: RunConfig) -> int:
    with open(config.input_path) as fh:
        data = json.load(fh)
    spec = spec_from_dict(data)
    shears = {pid: dict(data["shears"][pid]) for pid in spec.pants}
    gluing = {cid: float(data["gluing"][cid]) for cid in spec.curves}
    sp = bd.SlicePoint(shears=shears, gluing=gluing)
    ds = bd.realize_slice(sp, spec, config.n, config.tol)
    vec = bd.bd_vector(ds, config.n)
    deviation = 0.0
    for value in vec.tau.values():
        deviation = max(deviation, abs(value))
    for (pid, leaf, _p), value in vec.sigma.items():
        deviation = max(deviation, abs(value - float(shears[pid][leaf])))
    for (cid, _p), value in vec.theta.items():
        deviation = max(deviation, abs(value - gluing[cid]))
    payload = {
        "surface": spec_to_dict(spec),
        "n": config.n,
        "shears": {pid: {leaf: serialize_value(float(v)) for leaf, v in sorted(m.items())}
                   for pid, m in sorted(shears.items())},
        "gluing_targets": {cid: serialize_value(v) for cid, v in sorted(gluing.items())},
        "twists": {cid: serialize_value(ds.twists[cid]) for cid in sorted(ds.twists)},
        "gluing_quadruples": {
            cid: {"x": "0", "y": "inf",
                  "zl": serialize_value(float(c.zl.a) / float(c.zl.b)),
                  "zr": serialize_value(float(c.zr.a) / float(c.zr.b)),
                  "length": serialize_value(c.length)}
            for cid, c in sorted(ds.curves.items())},
        "invariants": vec.to_json_dict(),
        "max_roundtrip_deviation": serialize_value(deviation),
    }
    prefix = config.out or "realize"
    _dump_json(payload, f"{prefix}.json")
    _write_csv(vec, f"{prefix}.csv")
    print(f"wrote {prefix}.json and {prefix}.csv "
          f"(max round-trip deviation {deviation:.3g})")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bdcoords",
        description="Bonahon-Dreyer coordinates of Fuchsian representations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a seeded identity suite")
    p_verify.add_argument("--suite", required=True,
                          help=f"one of {', '.join(sorted(verification.SUITES))}, or all")
    p_verify.add_argument("--n", type=int, default=3)
    p_verify.add_argument("--samples", type=int, default=verification.DEFAULT_SAMPLES)
    p_verify.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)
    p_verify.add_argument("--max", dest="max_index", type=int, default=10,
                          help="index bound for the determinant suites")
    group = p_verify.add_mutually_exclusive_group()
    group.add_argument("--exact", dest="mode", action="store_const", const="exact")
    group.add_argument("--float", dest="mode", action="store_const", const="float")
    p_verify.set_defaults(mode="exact")
    p_verify.add_argument("--out", help="also write the report as JSON")

    p_inv = sub.add_parser("invariants", help="invariants of a surface JSON file")
    p_inv.add_argument("--input", required=True)
    p_inv.add_argument("--n", type=int, required=True)
    p_inv.add_argument("--tol", type=float, default=bd.DEFAULT_TOL)
    p_inv.add_argument("--out", help="output path prefix (default 'invariants')")

    p_real = sub.add_parser("realize", help="realize a slice-point JSON file")
    p_real.add_argument("--input", required=True)
    p_real.add_argument("--n", type=int, required=True)
    p_real.add_argument("--tol", type=float, default=bd.DEFAULT_TOL)
    p_real.add_argument("--out", help="output path prefix (default 'realize')")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            suite=getattr(args, "suite", None),
            n=getattr(args, "n", 3),
            samples=getattr(args, "samples", verification.DEFAULT_SAMPLES),
            seed=getattr(args, "seed", verification.DEFAULT_SEED),
            mode=getattr(args, "mode", "exact"),
            max_index=getattr(args, "max_index", 10),
            tol=getattr(args, "tol", bd.DEFAULT_TOL),
            input_path=getattr(args, "input", None),
            out=getattr(args, "out", None))
        if config.command == "verify":
            return cmd_verify(config)
        if config.command == "invariants":
            return cmd_invariants(config)
        return cmd_realize(config)
    except (SurfaceSpecError, LaminationError, AssemblyError, ValueError,
            OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
