import json
import os

from click.testing import CliRunner

from tristrata.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_verify_single_beta():
    res = run("verify", "beta", "--id", "1")
    assert res.exit_code == 0
    assert "ok  " in res.output
    assert "FAIL" not in res.output


def test_verify_unknown_id():
    res = run("verify", "beta", "--id", "999")
    assert res.exit_code != 0


def test_strata_show():
    res = run("strata", "show", "--id", "183")
    assert res.exit_code == 0
    assert "beta = [" in res.output
    assert "Z (" in res.output and "W (" in res.output
    assert "rep R" in res.output


def test_expand_triangular_stratum():
    res = run("expand", "--id", "32")
    assert res.exit_code == 0
    assert "e567 : +1*u53 -1*u61" in res.output
    assert "ok  " in res.output


def test_expand_fixed_point_stratum():
    res = run("expand", "--id", "9")
    assert res.exit_code == 0
    assert "expansion is zero" in res.output


def test_empty_check():
    res = run("empty-check", "--id", "46")
    assert res.exit_code == 0
    assert "certificate verifies" in res.output
    assert "e678 : weight 1" in res.output


def test_tangent_named_case():
    res = run("tangent", "--case", "case1-m3x2")
    assert res.exit_code == 0
    assert "computed 4" in res.output
    assert "recorded 4" in res.output


def test_nearest_point_from_file(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text(
        "# two points straddling nothing\n"
        "[1,0,0,0,0,0,0,0]\n"
        "[0,1,0,0,0,0,0,0]\n"
    )
    res = run("nearest-point", "--points", str(pts))
    assert res.exit_code == 0
    assert "nearest point = [1/2,1/2,0,0,0,0,0,0]" in res.output
    assert "norm^2 = 1/2" in res.output


def test_nearest_point_bad_line(tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("[1,0]\n")
    res = run("nearest-point", "--points", str(pts))
    assert res.exit_code != 0


def test_report_text_and_figures(tmp_path):
    out = tmp_path / "report.txt"
    res = run("report", "--out", str(out))
    assert res.exit_code == 0
    assert "catalog verifies" in res.output
    body = out.read_text()
    assert "nonempty" in body
    pngs = sorted(p for p in os.listdir(tmp_path) if p.endswith(".png"))
    assert len(pngs) == 3
    for p in pngs:
        assert (tmp_path / p).stat().st_size > 0


def test_report_json(tmp_path):
    out = tmp_path / "report.json"
    res = run("report", "--out", str(out), "--format", "json")
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert data["ok"] is True
    assert data["records"] == 183
    assert data["nonempty"] == 21
    assert len(data["outcomes"]) == 183
