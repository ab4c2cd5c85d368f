import json
import subprocess
import sys

BASE = [sys.executable, "-m", "freehex"]


def run(*args):
    return subprocess.run(BASE + list(args), capture_output=True, text=True)


def test_count_all_routes_json():
    r = run("count", "--n", "2", "--x", "1", "--k", "0")
    assert r.returncode == 0, r.stderr
    rec = json.loads(r.stdout)
    assert rec["command"] == "count"
    assert rec["hole"] == "triangle"
    for key in ("count_closed", "count_pfaffian", "count_oracle"):
        assert isinstance(rec[key], str)
        assert int(rec[key]) == 26
    assert rec["agree"] is True


def test_count_free_csv():
    r = run("count", "--n", "2", "--x", "1", "--hole", "none",
            "--method", "closed", "--format", "csv")
    assert r.returncode == 0
    header, row = r.stdout.strip().splitlines()
    assert header.split(",")[0] == "command"
    assert "126" in row.split(",")


def test_count_requires_k_for_hole():
    r = run("count", "--n", "2", "--x", "1")
    assert r.returncode == 2
    assert "error:" in r.stderr


def test_count_rejects_k_at_edge():
    r = run("count", "--n", "2", "--x", "1", "--k", "2")
    assert r.returncode == 2


def test_no_matrix_route_for_lozenge():
    r = run("count", "--n", "2", "--x", "1", "--k", "0",
            "--hole", "lozenge", "--method", "pfaffian")
    assert r.returncode == 2
    assert "lozenge" in r.stderr


def test_lozenge_all_drops_matrix_route():
    r = run("count", "--n", "2", "--x", "1", "--k", "1", "--hole", "lozenge")
    assert r.returncode == 0
    rec = json.loads(r.stdout)
    assert "count_pfaffian" not in rec
    assert int(rec["count_closed"]) == 56
    assert rec["agree"] is True


def test_correlation_json():
    r = run("correlation", "--k", "64", "--xi", "1.0")
    assert r.returncode == 0
    rec = json.loads(r.stdout)
    assert rec["value"] > 0
    assert abs(rec["value"] - rec["asymptotic"]) / rec["value"] < 0.05


def test_correlation_k_zero_has_no_asymptote():
    r = run("correlation", "--k", "0", "--xi", "1.0", "--format", "csv")
    assert r.returncode == 0
    header, row = r.stdout.strip().splitlines()
    cols = dict(zip(header.split(","), row.split(",")))
    assert cols["asymptotic"] == ""


def test_correlation_pole_exit():
    r = run("correlation", "--k", "0", "--xi", "0.0")
    assert r.returncode == 2


def test_correlation_no_convergence_exit():
    r = run("correlation", "--k", "0", "--xi", "1.0", "--max-panels", "8")
    assert r.returncode == 4


def test_table_distance_law_sweep():
    r = run("table", "--quantity", "theorem1", "--k-range", "32:256:2x")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "k,value,deviation"
    ks = [int(ln.split(",")[0]) for ln in lines[1:]]
    devs = [float(ln.split(",")[2]) for ln in lines[1:]]
    assert ks == [32, 64, 128, 256]
    assert all(a > b for a, b in zip(devs, devs[1:]))


def test_table_finite_ratio():
    r = run("table", "--quantity", "finite-ratio", "--k-range", "0:1:1", "--n", "64")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "k,n,x,ratio,value"
    for ln in lines[1:]:
        cells = ln.split(",")
        assert "/" in cells[3]
        float(cells[4])


def test_table_empty_range():
    r = run("table", "--quantity", "omega", "--k-range", "5:3:1")
    assert r.returncode == 0
    assert r.stdout.strip() == "k,xi,value,log_value,err"


def test_table_bad_range():
    r = run("table", "--quantity", "omega", "--k-range", "1::3")
    assert r.returncode == 2


def test_verify_suite():
    r = run("verify", "--suite", "counting")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "passed" in r.stdout
    assert "FAIL" not in r.stdout


def test_verify_deterministic():
    a = run("verify", "--suite", "arith", "--seed", "3")
    b = run("verify", "--suite", "arith", "--seed", "3")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
