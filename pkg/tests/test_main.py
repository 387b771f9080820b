""" Command-line dispatch, output formats and exit codes """

# Import necessary libraries
import json
from fractions import Fraction
import math
import pytest

# Import custom modules
from main import dispatch, jsonReady
from utils.helpers import formatRational
from witnesses.bilinear import gaussConstant

def _writeBell(path):
    amp = 1 / math.sqrt(2)
    path.write_text(json.dumps({"dim": 4, "factor_dims": [2, 2],
                                "amplitudes": [[amp, 0], [0, 0], [0, 0], [amp, 0]]}))
    return str(path)

def test_young_dimensions(capsys):
    assert dispatch(["dims", "--young", "2,2", "--n", "4"]) == 0
    assert capsys.readouterr().out.strip() == "g=12 f=240 dim=20"

def test_carrier_dimensions(capsys):
    assert dispatch(["dims", "--class", "ferm", "--d", "4", "--L", "2"]) == 0
    out = capsys.readouterr().out
    assert "carrier dim: 6" in out
    assert "component dim (k=2): 20" in out

def test_witness_build_prints_exact_json(capsys):
    assert dispatch(["witness", "build", "--class", "dist", "--dims", "2,2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["c"] == "1/2"
    assert data["beta"] == "-1/2"

def test_witness_detect_from_files(tmp_path, capsys):
    summary = tmp_path / "w.json"
    assert dispatch(["witness", "build", "--class", "dist", "--dims", "2,2", "--out", str(summary)]) == 0
    bell = _writeBell(tmp_path / "bell.json")
    assert dispatch(["witness", "detect", "--w", str(summary), "--a", bell, "--b", bell]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.25)

def test_schmidt_constants(capsys):
    assert dispatch(["witness", "schmidt", "--d", "3", "--n", "2"]) == 0
    assert "p_cr: 9/296" in capsys.readouterr().out

def test_class_parameters(capsys):
    assert dispatch(["class", "params", "--class", "fermions", "--d", "4", "--L", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["p_max_cr"] == "3/4"

def test_class_invariant(tmp_path, capsys):
    bell = _writeBell(tmp_path / "bell.json")
    assert dispatch(["class", "invariant", "--class", "dist", "--dims", "2,2", "--state", bell, "--physical"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(0.25)

def test_threshold_line(capsys):
    assert dispatch(["conc", "threshold", "--family", "werner"]) == 0
    assert capsys.readouterr().out.strip() == "p_cr = 0.666666666667 (= 2/3)"

def test_two_qubit_concurrence(tmp_path, capsys):
    bell = _writeBell(tmp_path / "bell.json")
    assert dispatch(["conc", "two-qubit", "--state", bell]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(1.0)

def test_cone_rays_as_csv(capsys):
    assert dispatch(["cone", "rays", "--class", "dist", "--dims", "2,2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "ray,a_{},a_1,a_2,a_12"

def test_typicality_scan_writes_csv(tmp_path):
    target = tmp_path / "scan.csv"
    assert dispatch(["typicality", "scan", "--sweep", "pmax:0.5:1.0:0.5", "--samples", "100",
                     "--csv", str(target)]) == 0
    assert target.read_text().splitlines()[0] == "p_max,delta,analytic_bound,mc_fraction,stderr"

def test_typicality_scan_starts_at_the_flat_spectrum(tmp_path):
    target = tmp_path / "out.csv"
    assert dispatch(["typicality", "scan", "--sweep", "pmax:0.2:1.0:0.05", "--samples", "100",
                     "--csv", str(target)]) == 0
    lines = target.read_text().splitlines()
    assert len(lines) == 17
    assert lines[1].startswith("0.25,")
    assert lines[-1].startswith("1,")

@pytest.mark.slow
def test_typicality_scan_with_default_samples(tmp_path):
    target = tmp_path / "out.csv"
    assert dispatch(["typicality", "scan", "--sweep", "pmax:0.2:1.0:0.05", "--csv", str(target)]) == 0
    assert len(target.read_text().splitlines()) == 17

def test_gaussian_params_beyond_fock_space(capsys):
    assert dispatch(["typicality", "params", "--class", "gauss", "--d", "20", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["N"] == 2 ** 19
    assert out["c"] == formatRational(gaussConstant(20))

def test_gaussian_cone_beyond_fock_space():
    assert dispatch(["cone", "rays", "--class", "gauss", "--d", "33", "--format", "json"]) == 0

def test_gaussian_random_state(capsys):
    assert dispatch(["gauss", "random", "--d", "2", "--seed", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 4

def test_single_demo(capsys):
    assert dispatch(["demo", "constants"]) == 0
    assert "exact constants match" in capsys.readouterr().out

def test_bad_flag_is_a_usage_error():
    assert dispatch(["dims", "--bogus"]) == 2

def test_unknown_class_is_a_usage_error(capsys):
    assert dispatch(["witness", "build", "--class", "furniture", "--dims", "2,2"]) == 2
    assert "error:" in capsys.readouterr().err

def test_negative_seed_is_rejected():
    assert dispatch(["dims", "--young", "2", "--n", "2", "--seed", "-1"]) == 2

def test_missing_file_is_a_usage_error(tmp_path):
    assert dispatch(["conc", "two-qubit", "--state", str(tmp_path / "missing.json")]) == 2

def test_unwritable_output_is_a_usage_error(tmp_path, capsys):
    target = tmp_path / "no-such-dir" / "dims.json"
    assert dispatch(["dims", "--young", "2,2", "--n", "4", "--out", str(target)]) == 2
    assert "error:" in capsys.readouterr().err

def test_contract_failure_exit_code(tmp_path):
    bad = tmp_path / "rho.json"
    bad.write_text(json.dumps({"dim": 2, "entries": [[1, 0], [1, 0], [0, 0], [0, 0]]}))
    assert dispatch(["conc", "two-qubit", "--state", str(bad)]) == 3

def test_json_ready_formats_values():
    assert jsonReady({"q": Fraction(1, 3), "x": 1 / 3, "z": 1j}) == {"q": "1/3", "x": 0.333333333333, "z": [0.0, 1.0]}
