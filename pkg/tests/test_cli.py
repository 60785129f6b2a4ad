import csv
import io
import json
import math

import pytest

from cohosc import cli
from cohosc.covariant import psi
from cohosc.density import entropy, purity


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_wavefunction_center(capsys):
    code, out, _ = run(capsys, "wavefunction", "--grid", "-1:1:1")
    assert code == 0
    table = rows(out)
    assert len(table) == 9
    center = [r for r in table if r["z"] == "0" and r["t"] == "0"][0]
    assert float(center["psi"]) == pytest.approx(0.564190, abs=1e-6)
    assert out.splitlines()[0] == "z,t,psi"


def test_wavefunction_matches_library(capsys):
    code, out, _ = run(capsys, "wavefunction", "--n", "2", "--eta", "1", "--grid", "-2:2:0.5", "--t-grid", "-1:1:0.25")
    assert code == 0
    table = rows(out)
    assert len(table) == 9 * 9
    for r in table:
        assert float(r["psi"]) == psi(2, 1.0, float(r["z"]), float(r["t"]))


def test_degenerate_sweep_single_row(capsys):
    code, out, _ = run(capsys, "wavefunction", "--grid", "0.5:0.5:0.1")
    assert code == 0 and len(rows(out)) == 1


def test_reruns_byte_identical(capsys):
    first = run(capsys, "entropy", "--n", "1", "--grid", "0:2:0.25", "--format", "json")[1]
    second = run(capsys, "entropy", "--n", "1", "--grid", "0:2:0.25", "--format", "json")[1]
    assert first == second


def test_entropy_sweep(capsys):
    code, out, _ = run(capsys, "entropy", "--n", "0", "--grid", "0:3:0.1")
    assert code == 0
    table = rows(out)
    assert len(table) == 31
    assert float(table[0]["entropy"]) == 0.0
    assert float(table[10]["entropy"]) == pytest.approx(1.6198, abs=1e-4)
    assert float(table[10]["entropy"]) == entropy(0, float(table[10]["eta"]))
    assert table[10]["effective_temperature"] != ""


def test_entropy_excited_has_empty_temperature(capsys):
    code, out, _ = run(capsys, "entropy", "--n", "2", "--grid", "0.5")
    assert code == 0
    assert rows(out)[0]["effective_temperature"] == ""
    code, out, _ = run(capsys, "entropy", "--n", "2", "--grid", "0.5", "--format", "json")
    assert json.loads(out)[0]["effective_temperature"] is None


def test_velocity_row_equals_rapidity_row(capsys):
    _, vel, _ = run(capsys, "entropy", "--n", "1", "--beta", "0.6")
    _, rap, _ = run(capsys, "entropy", "--n", "1", "--grid", str(math.log(2.0)))
    v, r = rows(vel)[0], rows(rap)[0]
    assert float(v["entropy"]) == pytest.approx(float(r["entropy"]), abs=1e-10)
    assert float(v["purity"]) == pytest.approx(float(r["purity"]), abs=1e-12)
    _, vel2, _ = run(capsys, "entropy", "--n", "1", "--velocity", "--grid", "0.6")
    assert vel2 == vel


@pytest.mark.parametrize("sweep", ["0:1:0.5", "-1:0:0.5", "0.5:1.2:0.1"])
def test_superluminal_sweep_exit_2(capsys, sweep):
    code, _, err = run(capsys, "entropy", "--beta", sweep)
    assert code == 2 and "inside" in err


def test_density_both_modes(capsys):
    for n, eta in [(0, 1.0), (2, 0.7)]:
        code, out, _ = run(capsys, "density", "--n", str(n), "--eta", str(eta), "--grid", "-3:3:0.5", "--mode", "both")
        assert code == 0
        table = rows(out)
        assert len(table) == 13 * 13
        assert max(float(r["abs_err"]) for r in table) < 1e-8


def test_density_analytic_origin(capsys):
    code, out, _ = run(capsys, "density", "--grid", "0")
    assert code == 0
    assert float(rows(out)[0]["rho"]) == pytest.approx(1 / math.sqrt(math.pi), abs=1e-15)


def test_density_verification_failure_exit_3(capsys):
    code, _, err = run(capsys, "density", "--n", "3", "--eta", "1.5", "--grid", "-6:6:1", "--mode", "both", "--nodes", "2")
    assert code == 3 and "mismatch" in err


def test_ellipse(capsys):
    code, out, _ = run(capsys, "ellipse", "--eta", str(math.log(2.0)))
    assert code == 0
    table = rows(out)
    assert len(table) == 256
    assert float(table[0]["u_axis"]) == pytest.approx(2.0, abs=1e-15)
    assert float(table[0]["v_axis"]) == pytest.approx(0.5, abs=1e-15)
    eta = math.log(2.0)
    for r in table[::17]:
        z, t = float(r["z"]), float(r["t"])
        assert math.exp(-2 * eta) * (z + t) ** 2 + math.exp(2 * eta) * (z - t) ** 2 == pytest.approx(2.0, abs=1e-12)


def test_csv_round_trip(capsys):
    _, out, _ = run(capsys, "wavefunction", "--n", "3", "--eta", "-0.4", "--grid", "-1:1:0.4")
    for r in rows(out):
        assert float(r["psi"]) == psi(3, -0.4, float(r["z"]), float(r["t"]))


def test_format_value():
    assert cli.format_value(0.1) == "0.10000000000000001"
    assert cli.format_value(None) == ""
    assert cli.format_value(3) == "3"
    assert float(cli.format_value(math.pi)) == math.pi


def test_out_file_and_config(tmp_path, capsys, monkeypatch):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"format": "json", "tol": 1e-14}))
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "entropy", "--n", "1", "--grid", "1", "--config", str(config), "--out", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data[0]["purity"] == pytest.approx(purity(1, 1.0), abs=1e-12)

    monkeypatch.setenv("COHOSC_CONFIG", str(config))
    code, out, _ = run(capsys, "entropy", "--grid", "1")
    assert code == 0 and out.startswith("[")
    code, out, _ = run(capsys, "entropy", "--grid", "1", "--format", "csv")
    assert out.startswith("eta,")


@pytest.mark.parametrize("argv", [
    ["entropy", "--grid", "1:0:0.1"],
    ["entropy", "--grid", "0:1:0"],
    ["entropy", "--grid", "abc"],
    ["entropy", "--tol", "1e-3"],
    ["entropy", "--nodes", "1"],
    ["wavefunction", "--n", "-1"],
    ["wavefunction", "--eta", "25"],
    ["density", "--mode", "bogus"],
    ["entropy", "--n", "3", "--grid", "5"],
    ["verify", "--suite", "nope"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_bad_config_exit_2(tmp_path, capsys):
    config = tmp_path / "bad.json"
    config.write_text(json.dumps({"colour": "red"}))
    assert cli.main(["entropy", "--config", str(config)]) == 2


def test_verify_quadrature(capsys):
    code, out, _ = run(capsys, "verify", "quadrature")
    assert code == 0
    report = json.loads(out)
    assert report and all(r["pass"] for r in report)
    assert set(report[0]) == {"check", "target", "value", "tolerance", "pass"}
    code2, out2, _ = run(capsys, "verify", "--suite", "quadrature")
    assert (code2, out2) == (code, out)


def test_verify_entropy(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "entropy")
    assert code == 0
    triple = [r for r in json.loads(out) if r["check"] == "entropy_triple"][0]
    assert triple["value"] <= 1e-6


def test_verify_override_failure_exit_3(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quadrature", "--override", "gh_even_moments=0")
    assert code == 3
    failed = [r for r in json.loads(out) if not r["pass"]]
    assert [r["check"] for r in failed] == ["gh_even_moments"]
