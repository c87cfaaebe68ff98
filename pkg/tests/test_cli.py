import csv
import io
import json
import os
import subprocess
import sys

import mpmath
import pytest

from dedekind_stieltjes import cli


def invoke(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_gamma_gaussian(capsys):
    status, out, _ = invoke(capsys, "gamma", "-d", "-4", "-n", "5")
    assert status == 0
    report = json.loads(out)
    assert report["field"]["discriminant"] == -4
    assert report["field"]["signature"] == [0, 1]
    mpmath.mp.dps = 60
    assert abs(mpmath.mpf(report["residue"]["value"]) - mpmath.pi / 4) < 1e-70
    rows = report["coefficients"]
    assert [r["n"] for r in rows] == list(range(6))
    assert mpmath.mpf(rows[0]["gamma"]) == pytest.approx(0.6462454399, abs=1e-10)
    assert all(r["method"] == "convolution" for r in rows)


def test_gamma_q_taylor_convention(capsys):
    status, out, _ = invoke(capsys, "gamma", "-d", "1", "-n", "1")
    assert status == 0
    rows = json.loads(out)["coefficients"]
    assert float(rows[1]["gamma"]) == pytest.approx(0.0728158454836767, abs=1e-15)


def test_residue_q(capsys):
    status, out, _ = invoke(capsys, "residue", "-d", "1")
    report = json.loads(out)
    assert status == 0
    assert mpmath.mpf(report["residue"]["value"]) == 1
    assert mpmath.mpf(report["difference"]) == 0


def test_residue_with_invariants(capsys):
    mpmath.mp.dps = 80
    R = mpmath.nstr(mpmath.log((1 + mpmath.sqrt(5)) / 2), 75)
    status, out, _ = invoke(
        capsys, "residue", "-d", "5", "--class-number", "1", "--regulator", R, "--roots-of-unity", "2"
    )
    assert status == 0
    assert mpmath.mpf(json.loads(out)["difference"]) < 1e-60


def test_inconsistent_invariants_exit_one(capsys):
    status, out, err = invoke(capsys, "residue", "-d", "-4", "--class-number", "1", "--regulator", "2",
                              "--roots-of-unity", "4")
    assert status == 1 and out == "" and "error" in err


def test_json_is_deterministic(capsys):
    _, a, _ = invoke(capsys, "gamma", "-d", "5", "-n", "8")
    _, b, _ = invoke(capsys, "gamma", "-d", "5", "-n", "8")
    assert a == b
    assert json.dumps(json.loads(a), sort_keys=True, indent=2) + "\n" == a


def test_csv_schema(capsys):
    status, out, _ = invoke(capsys, "gamma", "-d", "-3", "-n", "3", "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "gamma", "error_bound", "method"]
    assert [int(r["n"]) for r in rows] == [-1, 0, 1, 2, 3]
    assert float(rows[0]["gamma"]) == pytest.approx(0.6045997880780726)


def test_output_file(capsys, tmp_path):
    path = tmp_path / "signs.json"
    status, out, _ = invoke(capsys, "signs", "-d", "1", "-n", "6", "-o", str(path))
    assert status == 0 and out == ""
    report = json.loads(path.read_text())
    assert report["signs"] == [1, -1, -1, 1, -1, -1]


@pytest.mark.parametrize(
    "argv",
    [
        ("residue", "-d", "20"),
        ("residue", "-d", "-12"),
        ("gamma", "-d", "0"),
        ("gamma", "-d", "abc"),
        ("gamma", "--format", "xml"),
        ("parity", "-d", "-4", "-n", "4", "--t", "1.5"),
        ("table", "-d", "-4", "--xmax", "1000"),
    ],
)
def test_validation_exit_code(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(cli.main(list(argv)))
    assert exc.value.code == 1
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("argv", [("gamma", "-n", "70"), ("gamma", "-d", "-4", "-n", "30", "--precision-bits", "64")])
def test_computation_exit_code(capsys, argv):
    status, out, _ = invoke(capsys, *argv)
    assert status == 2 and out == ""


def test_verify_failure_exit_code(capsys):
    # N = 6 truncates the parity series too early for 1e-8
    status, out, _ = invoke(capsys, "verify", "-d", "-4", "-n", "6", "--xmax", "200000", "--precision-bits", "128")
    assert status == 3
    report = json.loads(out)
    assert report["passed"] is False
    failed = [c["name"] for c in report["checks"] if not c["passed"]]
    assert failed == ["parity"]


def test_verify_small_config_passes_and_is_deterministic(capsys):
    argv = ("verify", "-d", "5", "-n", "24", "--xmax", "200000", "--precision-bits", "128")
    status, a, _ = invoke(capsys, *argv)
    _, b, _ = invoke(capsys, *argv)
    assert status == 0 and a == b


def test_environment_overrides(capsys, monkeypatch):
    monkeypatch.setenv("DSTIELTJES_DISCRIMINANT", "-4")
    monkeypatch.setenv("DSTIELTJES_NMAX", "2")
    status, out, _ = invoke(capsys, "gamma")
    rows = json.loads(out)["coefficients"]
    assert status == 0 and len(rows) == 3
    assert json.loads(out)["field"]["discriminant"] == -4
    # flags win over the environment
    _, out, _ = invoke(capsys, "gamma", "-d", "5")
    assert json.loads(out)["field"]["discriminant"] == 5


def test_table_cache_round_trip(capsys, tmp_path):
    argv = ("table", "-d", "-7", "--xmax", "50000", "--cache-dir", str(tmp_path))
    status, out, _ = invoke(capsys, *argv)
    first = json.loads(out)
    assert status == 0 and first["loaded_from_cache"] is False
    assert os.path.exists(first["path"])
    _, out, _ = invoke(capsys, *argv)
    second = json.loads(out)
    assert second["loaded_from_cache"] is True
    assert second["ideal_count"] == first["ideal_count"]


def test_limit_rows(capsys, tmp_path):
    status, out, _ = invoke(
        capsys, "gamma", "-d", "-4", "-n", "1", "--limit", "--xmax", "1000000", "--cache-dir", str(tmp_path)
    )
    assert status == 0
    rows = json.loads(out)["coefficients"]
    conv = {r["n"]: float(r["gamma"]) for r in rows if r["method"] == "convolution"}
    lim = {r["n"]: float(r["gamma"]) for r in rows if r["method"] == "theorem1"}
    assert set(lim) == {0, 1}
    for n in lim:
        assert abs(lim[n] - conv[n]) < 1e-2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dedekind_stieltjes", "residue", "-d", "-3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["field"]["discriminant"] == -3
