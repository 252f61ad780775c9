import json
import os

import pytest

from bdcoords.cli import main, spec_from_dict, spec_to_dict
from bdcoords.surfaces import SurfaceSpecError, genus2_spec

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")
SURFACE = os.path.join(DATA, "genus2_surface.json")
SLICE = os.path.join(DATA, "genus2_slice.json")


def test_verify_exact_suite_exits_zero(capsys):
    assert main(["verify", "--suite", "triple-ratio", "--n", "3",
                 "--samples", "25", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] triple-ratio" in out and "worst=0" in out


def test_verify_float_suite(capsys):
    assert main(["verify", "--suite", "double-ratio", "--n", "4",
                 "--samples", "20", "--seed", "3", "--float"]) == 0


def test_verify_rhombus_reports_sign_mismatches(capsys):
    assert main(["verify", "--suite", "rhombus", "--max", "6"]) == 0
    out = capsys.readouterr().out
    assert "sign_mismatches=" in out
    count = int(out.split("sign_mismatches=")[1].split()[0])
    assert count > 0


def test_verify_unknown_suite():
    assert main(["verify", "--suite", "no-such-suite"]) == 2


def test_invariants_command(tmp_path, capsys):
    prefix = str(tmp_path / "inv")
    assert main(["invariants", "--input", SURFACE, "--n", "3",
                 "--out", prefix]) == 0
    data = json.loads((tmp_path / "inv.json").read_text())
    assert len(data["invariants"]["tau"]) == 4
    assert len(data["invariants"]["sigma"]) == 12
    assert len(data["invariants"]["theta"]) == 6
    assert data["slice_membership"] is True
    assert data["polytope_membership"] is True
    csv_lines = (tmp_path / "inv.csv").read_text().strip().splitlines()
    assert len(csv_lines) == 1 + 22
    assert csv_lines[0] == "block,object,p,q,r,value"


def test_invariants_n2_has_no_triangle_block(tmp_path):
    prefix = str(tmp_path / "inv2")
    assert main(["invariants", "--input", SURFACE, "--n", "2", "--out", prefix]) == 0
    data = json.loads((tmp_path / "inv2.json").read_text())
    assert data["invariants"]["tau"] == []
    assert len(data["invariants"]["sigma"]) == 6
    assert len(data["invariants"]["theta"]) == 3


def test_invariants_malformed_input(tmp_path, capsys):
    bad = json.loads(open(SURFACE).read())
    bad["curves"][0]["ends"] = [["P0", 1], ["P0", 2]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    assert main(["invariants", "--input", str(path), "--n", "3",
                 "--out", str(tmp_path / "x")]) == 2
    err = capsys.readouterr().err
    assert "P0" in err  # names the offending slot


def test_realize_command(tmp_path):
    prefix = str(tmp_path / "real")
    assert main(["realize", "--input", SLICE, "--n", "3", "--out", prefix]) == 0
    data = json.loads((tmp_path / "real.json").read_text())
    assert float(data["max_roundtrip_deviation"]) < 1e-9
    assert set(data["twists"]) == {"C1", "C2", "C3"}


def test_realize_rejects_invalid_slice_point(tmp_path, capsys):
    bad = json.loads(open(SLICE).read())
    bad["shears"]["P0"]["B12"] = -5.0
    path = tmp_path / "bad_slice.json"
    path.write_text(json.dumps(bad))
    assert main(["realize", "--input", str(path), "--n", "3",
                 "--out", str(tmp_path / "x")]) == 2
    assert "P0" in capsys.readouterr().err


def test_outputs_are_deterministic(tmp_path):
    p1, p2 = str(tmp_path / "a"), str(tmp_path / "b")
    for prefix in (p1, p2):
        assert main(["realize", "--input", SLICE, "--n", "3", "--out", prefix]) == 0
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_verify_reports_are_deterministic(tmp_path):
    p1, p2 = str(tmp_path / "r1.json"), str(tmp_path / "r2.json")
    for out in (p1, p2):
        assert main(["verify", "--suite", "pants", "--samples", "3",
                     "--seed", "11", "--out", out]) == 0
    assert open(p1, "rb").read() == open(p2, "rb").read()


def test_spec_dict_round_trip():
    spec = genus2_spec()
    again = spec_from_dict(spec_to_dict(spec))
    assert spec_to_dict(again) == spec_to_dict(spec)


def test_spec_from_dict_rejects_missing_fields():
    with pytest.raises((SurfaceSpecError, KeyError)):
        spec_from_dict({"genus": 2, "pants": []})
