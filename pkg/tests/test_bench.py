import io
import json
import math

import numpy as np
import pytest

from sgmdi.bench.cli import main
from sgmdi.bench.fit import fit_arrays, fit_power_law
from sgmdi.bench.records import BenchRecord, FIELDS, append_csv, emit_csv, read_csv
from sgmdi.bench.suites import Point, run_point, run_suite, suite_points
from sgmdi.errors import Degenerate


def _rec(**kw):
    base = dict(method="mdi", integrand="rational", rule=3, d=10, q=19, level=10, m=10,
                s=1, N=15, merged_nodes=1, unmerged_nodes=2, value=0.1 + 0.2,
                reference=1 / 3, rel_error=0.1, wall_time=1e-3, repetitions=3)
    base.update(kw)
    return BenchRecord(**base)


# ---------------------------------------------------------------- records

def test_csv_empty_and_one(tmp_path):
    p = tmp_path / "a.csv"
    emit_csv([], p)
    assert p.read_text().splitlines() == [",".join(FIELDS)]
    emit_csv([_rec()], p)
    assert len(p.read_text().splitlines()) == 2


def test_csv_round_trip(tmp_path):
    recs = [_rec(), _rec(method="mc", m=None, s=None, seed=2 ** 64 - 1, samples=10 ** 6,
                         reason="x, \"quoted\"", status="failed", value=None)]
    p = tmp_path / "r.csv"
    emit_csv(recs, p)
    back = read_csv(p)
    assert back == recs
    assert back[0].value == 0.1 + 0.2  # 17 significant digits survive


def test_csv_crlf_and_append(tmp_path):
    buf = io.StringIO(newline="")
    emit_csv([_rec()], buf)
    assert buf.getvalue().count("\r\n") == 2
    p = tmp_path / "x.csv"
    append_csv(_rec(d=5), p)
    append_csv(_rec(d=6), p)
    assert [r.d for r in read_csv(p)] == [5, 6]


def test_record_validation():
    with pytest.raises(ValueError):
        _rec(rel_error=-1.0)
    with pytest.raises(ValueError):
        _rec(wall_time=-1.0)


# ---------------------------------------------------------------- fits

def test_fit_linear_exact():
    N = np.array([3.0, 7.0, 15.0, 31.0])
    res = fit_arrays("N", 2 * N, N=N)
    assert res.coefficient == pytest.approx(2.0, rel=1e-14)
    assert res.exponent == 1.0 and res.r_square == pytest.approx(1.0, abs=1e-14)


def test_fit_cubic_noisy():
    rng = np.random.default_rng(3)
    d = np.array([10, 20, 40, 60, 80, 100], dtype=float)
    y = 3 * d ** 3 * (1 + 0.01 * rng.standard_normal(len(d)))
    res = fit_arrays("d^p", y, d=d)
    assert 2.9 <= res.exponent <= 3.1
    assert res.r_square > 0.99
    assert "d^" in res.formula()


def test_fit_models():
    N = np.array([3.0, 7.0, 15.0, 31.0])
    d = np.array([5.0, 10.0, 20.0, 40.0])
    r = fit_arrays("N*d^p", 0.5 * N * d ** 2, N=N, d=d)
    assert r.exponent == pytest.approx(2.0, rel=1e-12)
    r = fit_arrays("N^p", 4 * N ** 1.5, N=N)
    assert r.exponent == pytest.approx(1.5, rel=1e-12)
    assert r.coefficient == pytest.approx(4.0, rel=1e-12)


def test_fit_degenerate_and_errors():
    with pytest.raises(Degenerate):
        fit_arrays("d^p", [1.0, 2.0, 3.0], d=[4, 4, 4])
    with pytest.raises(ValueError):
        fit_arrays("d^p", [1.0, 2.0], d=[1, 2])
    with pytest.raises(ValueError):
        fit_arrays("bogus", [1.0, 2.0, 3.0], d=[1, 2, 3])


def test_fit_records_skip_failed():
    recs = [_rec(d=d, wall_time=2.0 * d) for d in (10, 20, 40)]
    recs.append(_rec(d=80, wall_time=None, status="failed", reason="timeout"))
    res = fit_power_law(recs, "d^p")
    assert res.n == 3 and res.exponent == pytest.approx(1.0, rel=1e-12)


# ---------------------------------------------------------------- suites

def test_suite_points():
    pts = suite_points("test3", {"levels": (10,), "d": (10,), "methods": ("mdi",)})
    assert pts == [Point("mdi", "gaussian", 10, 10, 3, 1, 1)]
    assert pts[0].q == 19
    assert len(suite_points("test10", {"integrand": "f2"})) == 7 * 6
    with pytest.raises(ValueError):
        suite_points("test99")


def test_custom_constant_zero_error():
    for rec in run_suite("custom", {"expr": "1", "d": (3,), "levels": (4,),
                                    "methods": ("sg-combination", "sg-delta", "mdi",
                                                "mc", "tp")}, reference=8.0):
        assert rec.status == "ok"
        assert rec.rel_error <= 1e-14


def test_test1_sg_and_mdi_agree():
    recs = run_suite("test1", {"integrand": "exp_sq", "levels": (10,)})
    assert {r.method for r in recs} == {"mdi", "sg-delta"}
    a, b = (r.rel_error for r in recs)
    assert a == pytest.approx(b, rel=1e-9, abs=1e-15)
    assert recs[0].merged_nodes == 161


def test_test3_d10_row():
    recs = run_suite("test3", {"levels": (10,), "d": (10,), "methods": ("mdi",)})
    assert recs[0].rel_error == pytest.approx(1.6855e-6, rel=0.1)


def test_failed_rows_do_not_stop(tmp_path):
    recs = run_suite("custom", {"expr": "1/x1", "d": (1,), "levels": (3,),
                                "methods": ("sg-delta", "mdi")})
    assert [r.status for r in recs] == ["failed", "failed"]
    assert all(r.reason == "non-finite" for r in recs)
    capped = run_point(Point("sg-delta", "gaussian", 8, 10), max_points=1000)
    assert capped.status == "failed" and capped.reason == "memory-cap"
    slow = run_point(Point("mdi", "rational", 30, 10, 3, 10, 1), timeout=0.0)
    assert slow.reason == "timeout"


def test_resume(tmp_path):
    out = str(tmp_path / "run.csv")
    over = {"expr": "x1^2", "d": (1, 2), "levels": (3,), "methods": ("sg-delta",)}
    first = run_suite("custom", over, out=out, reference=None)
    seen = []
    again = run_suite("custom", over, out=out, progress=seen.append)
    assert seen == []  # nothing recomputed
    assert [r.value for r in again] == [r.value for r in first]
    over["d"] = (1, 2, 3)
    run_suite("custom", over, out=out, progress=seen.append)
    assert [r.d for r in seen] == [3]
    assert len(read_csv(out)) == 3


def test_forced_repetitions():
    rec = run_point(Point("mdi", "one", 2, 3), repetitions=5)
    assert rec.repetitions == 5


# ---------------------------------------------------------------- CLI

def test_cli_integrate(capsys):
    assert main(["integrate", "--expr", "exp(5*x1^2+5*x2^2)", "--dim", "2",
                 "--method", "mdi", "--level", "10"]) == 0
    out = capsys.readouterr().out
    assert "merged_nodes: 161" in out and "family: exp_sq" in out and "rel_error:" in out


def test_cli_exit_codes(capsys, tmp_path):
    assert main(["integrate", "--expr", "x1 +", "--dim", "1", "--q", "2"]) == 1
    assert main(["integrate", "--expr", "1/x1", "--dim", "1", "--q", "2"]) == 2
    assert main(["integrate", "--expr", "1", "--dim", "10", "--method", "tp",
                 "--level", "9"]) == 3
    with pytest.raises(SystemExit) as info:
        main(["integrate", "--dim", "2"])
    assert info.value.code == 1


def test_cli_bench_and_fit(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert main(["bench", "--suite", "custom", "--expr", "exp(x1 - x2)", "--d-range", "2..4",
                 "--overrides", "levels=3,methods=mdi", "--out", str(out)]) == 0
    recs = read_csv(out)
    assert [r.d for r in recs] == [2, 3, 4]
    capsys.readouterr()
    assert main(["fit", "--in", str(out), "--model", "d^p"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["n"] == 3 and math.isfinite(res["exponent"])


def test_cli_dumps(tmp_path, capsys):
    assert main(["grid", "dump", "--dim", "2", "--level", "10"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "x_1,x_2,weight" and len(lines) == 162
    weights = [float(l.split(",")[-1]) for l in lines[1:]]
    assert math.fsum(weights) == pytest.approx(4.0, rel=1e-13)
    assert main(["rule", "dump", "--rule", "gp", "--levels", "1..3"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert len(rows) == 1 + 1 + 3 + 3
