import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from hdruled.cli import SpecError, main, parse_curve_spec
from hdruled.curves import frame_field_curve, helix
from hdruled.mesh import read_obj_vertices


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_diff(capsys):
    assert run(capsys, "diff", "t^2", "--at", "3")[:2] == (0, "9 6 2\n")
    assert run(capsys, "diff", "sin(t)", "--at", "0")[1] == "0 1 0\n"
    code, _, err = run(capsys, "diff", "log(t)", "--at", "0")
    assert code != 0 and json.loads(err)["kind"] == "domain"
    code, _, err = run(capsys, "diff", "sin(")
    assert code != 0 and json.loads(err)["offset"] == 4


def test_check_frenet_passes(capsys, tmp_path):
    code, out, _ = run(capsys, "check", "--frame", "frenet", "--csv", str(tmp_path / "c.csv"))
    assert code == 0 and "FAIL" not in out
    assert {r["condition"] for r in rows(tmp_path / "c.csv")} >= {"|a0|=1", "a2.a3=0"}


def test_check_constants_pass(capsys):
    args = ["check", "--lane0", "const:1,0,0", "--lane1", "const:0,1,0", "--lane2", "const:0,0,1",
            "--lane3", "const:0,0,0", "--t0", "0", "--t1", "1"]
    assert run(capsys, *args)[0] == 0


def test_check_scaled_lane_fails(capsys):
    code, out, err = run(capsys, "check", "--lane0", "2*cos(t), 2*sin(t), 0", "--lane1", "const:0,0,0",
                         "--lane2", "const:0,0,1", "--lane3", "const:0,0,0")
    assert code == 1 and "FAIL" in out
    assert json.loads(err)["failures"] == ["explicit |a0|=1"]


def test_check_dual_sphere_only_looks_at_first_half(capsys):
    code, out, _ = run(capsys, "check", "--sphere", "dual", "--lane0", "const:1,0,0", "--lane1",
                       "const:0,1,0", "--lane2", "const:5,0,0", "--lane3", "const:0,0,0")
    assert code == 0 and "|a|=1" in out


def test_incomplete_explicit_gamma(capsys):
    code, _, err = run(capsys, "check", "--lane0", "const:1,0,0")
    assert code == 2 and json.loads(err)["kind"] == "SpecError"


def test_synthesize_frenet(capsys, tmp_path):
    code, out, _ = run(capsys, "synthesize", "--frame", "frenet", "--out-dir", str(tmp_path),
                       "--nt", "8", "--nu", "3", "--samples", "21")
    assert code == 0
    for name in ("I.obj", "congruence_base.csv", "pair_phi1.obj", "pair_phi2.obj", "base_k.csv", "report.txt"):
        assert (tmp_path / name).exists()
    h = helix(1, 1)
    b, t = frame_field_curve(h, "b"), frame_field_curve(h, "t")
    for r in rows(tmp_path / "base_k.csv"):
        s = float(r["t"])
        assert np.allclose([float(r[k]) for k in "xyz"], b(s) - t(s), atol=1e-12)
    assert "t,f,g" in (tmp_path / "report.txt").read_text()


def test_synthesize_adapted(capsys, tmp_path):
    code, out, _ = run(capsys, "synthesize", "--frame", "adapted", "--out-dir", str(tmp_path),
                       "--nt", "4", "--nu", "2", "--samples", "11")
    assert code == 0 and "PASS  pair rulings perpendicular" in out
    h = helix(1, 1)
    w, n = frame_field_curve(h, "w"), frame_field_curve(h, "n")
    for r in rows(tmp_path / "base_k.csv"):
        s = float(r["t"])
        assert np.allclose([float(r[k]) for k in "xyz"], w(s) - n(s), atol=1e-12)


def test_synthesize_off_unit_sphere_skips_pair(capsys, tmp_path):
    code, out, _ = run(capsys, "synthesize", "--lanes", "t,n,t,n", "--out-dir", str(tmp_path),
                       "--nt", "3", "--nu", "2", "--samples", "5")
    assert code == 0 and "skipped" in out and not (tmp_path / "pair_phi1.obj").exists()


def test_inverse(capsys, tmp_path):
    code, out, _ = run(capsys, "inverse", "--base", "helix", "--ruling1", "field:t", "--ruling2",
                       "field:n", "--out-dir", str(tmp_path), "--samples", "31")
    assert code == 0
    g1 = rows(tmp_path / "gamma1.csv")
    assert len(g1) == 31 and len(g1[0]) == 13


def test_inverse_precondition(capsys, tmp_path):
    code, _, err = run(capsys, "inverse", "--ruling1", "const:1,0,0", "--ruling2", "const:1,0,0",
                       "--out-dir", str(tmp_path))
    info = json.loads(err)
    assert code == 2 and info["kind"] == "precondition" and info["t"] == 0.0


def test_developable_modes(capsys, tmp_path):
    assert run(capsys, "developable", "--base", "helix", "--director", "field:t")[0] == 0
    code, out, _ = run(capsys, "developable", "--base", "helix", "--director", "field:n",
                       "--csv", str(tmp_path / "d.csv"))
    assert code == 1
    assert all(abs(float(r["residual"]) - 1) <= 1e-9 for r in rows(tmp_path / "d.csv"))
    const = ["--lane0", "const:1,0,0", "--lane1", "const:0,1,0", "--lane2", "const:0,0,1",
             "--lane3", "const:0,0,0"]
    assert run(capsys, "developable", *const)[0] == 0
    assert run(capsys, "developable", "--frame", "frenet")[0] == 1


@pytest.mark.parametrize("name", ["helix", "frenet", "adapted"])
def test_example(capsys, tmp_path, name):
    code, out, _ = run(capsys, "example", name, "--out-dir", str(tmp_path), "--nt", "5", "--nu", "3",
                       "--samples", "17")
    assert code == 0, out
    for f in ("phi1.obj", "phi2.obj", "base_k.csv", "report.txt", "delta.csv"):
        assert (tmp_path / f).exists()
    if name == "helix":
        assert np.allclose(read_obj_vertices(tmp_path / "phi2.obj")[1], [1, 0, 0])


def test_config_file_and_flag_override(capsys, tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[sampling]\nsamples = 7\n\n[gamma]\ncurve = helix:r=2,c=0.5\nframe = adapted\n")
    code, out, _ = run(capsys, "check", "--config", str(cfg))
    assert code == 0 and "over 7 samples" in out and "(n,c,w,c)[helix(r=2, c=0.5)]" in out
    code, out, _ = run(capsys, "check", "--config", str(cfg), "--samples", "9", "--frame", "frenet")
    assert "over 9 samples" in out and "(t,n,b,n)" in out


def test_curve_specs():
    dom = (0.0, 1.0)
    assert np.allclose(parse_curve_spec("circle:r=2", dom)(0.0), [2, 0, 0])
    assert np.allclose(parse_curve_spec("line:px=1,vz=2,vx=0", dom)(1.0), [1, 0, 2])
    assert np.allclose(parse_curve_spec("t, t^2, 1", dom)(2.0), [2, 4, 1])
    for bad in ("helix:q=1", "circle:r", "sin(t), 1", "const:1,2", "field:t"):
        with pytest.raises(SpecError):
            parse_curve_spec(bad, dom)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hdruled", "diff", "t^2", "--at", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "9 6 2\n"
