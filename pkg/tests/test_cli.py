import json
import subprocess
import sys


def run_cli(*args, input_text=None):
    return subprocess.run(
        [sys.executable, "-m", "lppqs", *args],
        capture_output=True,
        text=True,
        input=input_text,
        timeout=300,
    )


def test_verify_theorem_single_instance_prints_polynomials():
    res = run_cli("verify", "--scope", "theorem", "--n", "1", "--u", "2")
    assert res.returncode == 0
    assert "[theorem] n=1 u=2: PASS" in res.stdout
    poly = "1 + 1 * x1^1 + 2 * x1^2 + 1 * x1^3 + 1 * x1^4"
    assert f"lhs = {poly}" in res.stdout
    assert f"rhs = {poly}" in res.stdout
    assert res.stdout.strip().endswith("overall: PASS")


def test_verify_okada_trivial():
    res = run_cli("verify", "--scope", "okada", "--n", "1", "--u", "0")
    assert res.returncode == 0
    assert "PASS" in res.stdout


def test_verify_greene_json():
    res = run_cli(
        "verify", "--scope", "greene", "--trials", "25", "--max-dim", "4",
        "--format", "json",
    )
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["all_pass"] is True
    assert data["results"][0]["failures"] == 0


def test_verify_roundtrips_small():
    res = run_cli("verify", "--scope", "roundtrips", "--trials", "40")
    assert res.returncode == 0


def test_cdf_golden_text_and_csv():
    res = run_cli("cdf", "--geometry", "p2pr", "--n", "1", "--y", "1/2", "--u-max", "3")
    assert res.returncode == 0
    assert res.stdout.splitlines() == [
        "P(L <= 0) = 1/2",
        "P(L <= 1) = 3/4",
        "P(L <= 2) = 7/8",
        "P(L <= 3) = 15/16",
    ]
    res = run_cli(
        "cdf", "--geometry", "p2hlr", "--n", "1", "--y", "1/2", "--u-max", "2",
        "--format", "csv",
    )
    assert res.stdout.splitlines() == [
        "bound,prob",
        "0,3/8",
        "1,21/32",
        "2,105/128",
    ]


def test_cdf_rejects_bad_parameter():
    res = run_cli("cdf", "--geometry", "p2pr", "--n", "1", "--y", "3/2", "--u-max", "2")
    assert res.returncode == 2


def test_cdf_budget_exceeded_exit_code():
    res = run_cli(
        "cdf", "--geometry", "p2hlr", "--n", "3", "--y", "1/2", "--u-max", "4",
        "--node-budget", "10",
    )
    assert res.returncode == 2


def test_rsk_p2l_forward_golden(tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("3\n")
    res = run_cli("rsk", "--geometry", "p2l", "--input", str(f))
    assert res.returncode == 0
    assert res.stdout.strip() == "6"


def test_rsk_p2hlr_zero_filling(tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("0\n0\n")
    res = run_cli("rsk", "--geometry", "p2hlr", "--u", "2", "--input", str(f))
    assert res.returncode == 0
    assert res.stdout.splitlines() == ["2", "2"]


def test_rsk_roundtrip_exit_zero(tmp_path):
    f = tmp_path / "w.txt"
    f.write_text("0 - -\n2 0 -\n1 0 3\n")
    res = run_cli("rsk", "--geometry", "p2l", "--input", str(f), "--roundtrip")
    assert res.returncode == 0, res.stderr


def test_rsk_inverse_round_trips_through_files(tmp_path):
    fin = tmp_path / "w.txt"
    fin.write_text("0 -\n1 0\n0 2\n1 -\n")
    fwd = run_cli("rsk", "--geometry", "p2hlr", "--u", "4", "--input", str(fin))
    assert fwd.returncode == 0, fwd.stderr
    pat = tmp_path / "z.txt"
    pat.write_text(fwd.stdout)
    inv = run_cli(
        "rsk", "--geometry", "p2hlr", "--u", "4", "--direction", "inverse",
        "--input", str(pat),
    )
    assert inv.returncode == 0, inv.stderr
    assert inv.stdout.strip() == fin.read_text().strip()


def test_rsk_parse_error_exit_two(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1 2\n3 4\n")  # full square is not a p2l domain
    res = run_cli("rsk", "--geometry", "p2l", "--input", str(f))
    assert res.returncode == 2


def test_rsk_domain_violation_exit_one(tmp_path):
    f = tmp_path / "z.txt"
    f.write_text("3\n")  # odd-row shape cannot come from the p2l map
    res = run_cli("rsk", "--geometry", "p2l", "--direction", "inverse", "--input", str(f))
    assert res.returncode == 1


def test_rsk_matrix_growth(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("1 2\n0 3\n")
    res = run_cli("rsk", "--geometry", "matrix-row", "--input", str(f))
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "corner: 6"
    res = run_cli("rsk", "--geometry", "matrix-col", "--input", str(f))
    assert res.stdout.splitlines()[0] == "corner: 5 1"


def test_simulate_byte_identical():
    args = (
        "simulate", "--geometry", "p2hlr", "--n", "4", "--q", "0.49",
        "--samples", "3000", "--seed", "7", "--format", "json",
    )
    a = run_cli(*args)
    b = run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    data = json.loads(a.stdout)
    assert data["seed"] == 7
    assert data["samples"] == 3000


def test_simulate_rejects_conflicting_parameters():
    res = run_cli("simulate", "--n", "2", "--q", "0.5", "--y", "0.5")
    assert res.returncode == 2
    res = run_cli("simulate", "--n", "2")
    assert res.returncode == 2


def test_simulate_factorization_mode():
    res = run_cli(
        "simulate", "--factorization", "--n", "4", "--q", "0.25",
        "--samples", "5000", "--seed", "1", "--format", "json",
    )
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["mode"] == "monte_carlo"
    assert data["sup_distance"] <= 0.05


def test_environment_variable_defaults(tmp_path):
    import os

    env = dict(os.environ)
    env["LPPQS_FORMAT"] = "csv"
    res = subprocess.run(
        [sys.executable, "-m", "lppqs", "cdf", "--geometry", "p2pr", "--n", "1",
         "--y", "1/2", "--u-max", "1"],
        capture_output=True, text=True, env=env, timeout=120,
    )
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "bound,prob"
