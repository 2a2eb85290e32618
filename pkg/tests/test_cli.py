import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from invgeo.cli import run

GOLDEN_DIR = Path(__file__).parent / "golden"

SWAP = '{"a": 0, "b": 1, "c": 1, "d": 0}'

GOLDEN_CASES = [
    ("roots_general.json", ["roots", "--of", "identity", "--a", "0.3", "--b", "2"]),
    ("roots_family.json", ["roots", "--of", "identity", "--family", "upper-b-plus-minus", "--b", "5"]),
    ("roots_skew.json", ["roots", "--of", "neg-identity", "--a", "1", "--b", "2"]),
    ("roots_sample.json", ["roots", "--of", "identity", "--sample", "3", "--seed", "0"]),
    ("classify_quadric.json", ["classify", "--alpha", "0", "--beta", "-1"]),
    ("classify_matrix.json", ["classify", "--matrix", SWAP]),
    ("bell_forward.json", ["bell", "--matrix", '{"a": 1, "b": 0, "c": 0, "d": -1}', "--alpha", "0", "--beta", "-1"]),
    ("bell_inverse.json", ["bell", "--x", "0", "--y", "1.4142135623730951", "--z", "0", "--alpha", "0"]),
    ("generators.json", ["generators", "--phi", "1.0471975511965976"]),
    ("generators.csv", ["generators", "--phi", "0.5", "--format", "csv", "--points", "5", "--t-max", "2"]),
    ("quat_from_matrix.json", ["quat", "--from-matrix", '{"a": 0, "b": 1, "c": -1, "d": 0}']),
    ("quat_root.json", ["quat", "--root", "identity", "--t", "1", "--phi", "0.5", "--decompose"]),
    ("matfun_branches.json", ["matfun", "--matrix", '{"a": 1, "b": 0, "c": 0, "d": 4}', "--all-branches"]),
    ("matfun_sqrt.json", ["matfun", "--matrix", '{"a": 1, "b": 1, "c": 0, "d": 1}', "--function", "sqrt"]),
    ("sample_one_sheet.csv", ["sample", "--alpha", "0", "--beta", "-1", "--nu", "4", "--nv", "3", "--format", "csv"]),
    ("sample_cone.csv", ["sample", "--alpha", "0", "--beta", "0", "--nu", "3", "--nv", "3", "--format", "csv"]),
    ("decompose_general.json", ["decompose", "--matrix", '{"a": 0, "b": 2, "c": 0.5, "d": 0}']),
    ("decompose_case.json", ["decompose", "--family", "upper-b-plus-minus", "--b", "4"]),
    ("orbit.csv", ["orbit", "--matrix", SWAP, "--x", "1", "--y", "0", "--steps", "4", "--format", "csv"]),
]


def _run(argv, capsys):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("name, argv", GOLDEN_CASES, ids=[n for n, _ in GOLDEN_CASES])
def test_golden_output(name, argv, capsys):
    code, out, err = _run(argv, capsys)
    assert code == 0, err
    golden = GOLDEN_DIR / name
    if os.environ.get("UPDATE_GOLDEN"):
        golden.write_text(out, encoding="utf-8")
    assert out == golden.read_text(encoding="utf-8")


@pytest.mark.parametrize("name, argv", GOLDEN_CASES, ids=[n for n, _ in GOLDEN_CASES])
def test_byte_identical_across_runs(name, argv, capsys):
    code1, out1, _ = _run(argv, capsys)
    code2, out2, _ = _run(argv, capsys)
    assert code1 == code2 == 0
    assert out1.encode() == out2.encode()


def test_malformed_matrix_is_usage_error(capsys):
    code, out, err = _run(["bell", "--matrix", "not json"], capsys)
    assert code == 2
    doc = json.loads(err)
    assert doc["error"] == "usage"
    assert out == ""


def test_missing_required_input_is_usage_error(capsys):
    code, _, err = _run(["classify"], capsys)
    assert code == 2
    assert json.loads(err)["error"] == "usage"


def test_unknown_flag_is_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "invgeo.cli", "roots", "--bogus"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert json.loads(proc.stderr)["error"] == "usage"


def test_domain_error_exit_code(capsys):
    code, out, err = _run(["roots", "--of", "identity", "--a", "1", "--b", "0"], capsys)
    assert code == 1
    doc = json.loads(err)
    assert doc["error"] == "degenerate_parameter"
    assert out == ""


def test_not_an_involution_error_code(capsys):
    code, _, err = _run(["classify", "--matrix", '{"a": 0, "b": 1, "c": 0, "d": 0}'], capsys)
    assert code == 1
    assert json.loads(err)["error"] == "not_an_involution"


def test_singular_parameter_error_code(capsys):
    code, _, err = _run(["quat", "--root", "neg", "--t", "1.5707963267948966"], capsys)
    assert code == 1
    assert json.loads(err)["error"] == "singular_parameter"


def test_numeric_overflow_is_reported_not_raised(capsys):
    code, _, err = _run(["quat", "--root", "identity", "--t", "1000"], capsys)
    assert code == 1
    assert json.loads(err)["error"] == "numeric_error"


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "doc.json"
    code, out, _ = _run(["classify", "--alpha", "0", "--beta", "-1", "-o", str(target)], capsys)
    assert code == 0
    assert out == ""
    doc = json.loads(target.read_text())
    assert doc == {"class": "one_sheet", "radius_sq": 2.0}


def test_matrix_file_input(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(SWAP)
    code, out, _ = _run(["classify", "--matrix-file", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["tag"] == "general"


def test_tolerance_env_override(capsys, monkeypatch):
    matrix = '{"a": 1.000001, "b": 0, "c": 0, "d": -1}'
    code, _, err = _run(["classify", "--matrix", matrix], capsys)
    assert code == 1  # residual ~2e-6 exceeds the default 1e-9
    monkeypatch.setenv("INVGEO_TOL", "1e-4")
    code, out, _ = _run(["classify", "--matrix", matrix], capsys)
    assert code == 0
    assert json.loads(out)["tag"] == "lower_c_plus_minus"


def test_console_entry_point_round_trip():
    proc = subprocess.run(
        [sys.executable, "-m", "invgeo.cli", "quat", "--to-matrix", '{"w": 0, "x": 1, "y": 0, "z": 0}'],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["matrix"] == {"a": 0.0, "b": 1.0, "c": -1.0, "d": 0.0}
    assert doc["class"] == "timelike"


def test_sample_csv_header_schema():
    content = (GOLDEN_DIR / "sample_one_sheet.csv").read_text()
    assert content.splitlines()[0] == "x,y,z,x1,x2,x3,x4,tag"


def test_orbit_csv_header_schema():
    content = (GOLDEN_DIR / "orbit.csv").read_text()
    lines = content.splitlines()
    assert lines[0] == "step,x,y"
    assert lines[1] == "0,1.0,0.0"
    assert lines[-1] == "4,1.0,0.0"
