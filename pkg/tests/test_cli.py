import csv
import io
import json
import math

import pytest

from zetaint import cli
from zetaint import criteria as cr
from zetaint.zeta import EULER_GAMMA


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cache(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    return tmp_path


def test_eval_zeta(capsys, cache):
    code, out, _ = run(capsys, "eval", "zeta", "--re", "2", "--tol", "1e-14", "--output", "json")
    assert code == 0
    row = json.loads(out)
    assert abs(row["value_re"] - math.pi**2 / 6) < 1e-14
    assert row["value_im"] == 0


def test_eval_other_functions(capsys, cache):
    code, out, _ = run(capsys, "eval", "counting-n", "--im", "100", "--output", "json")
    assert code == 0 and json.loads(out)["value"] == 29
    code, out, _ = run(capsys, "eval", "arg-zeta", "--re", "0.5", "--im", "1", "--output", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert abs(float(rows[0]["value"]) + 1.374044700777503) < 1e-12


def test_eval_pole_is_an_error(capsys, cache):
    code, _, err = run(capsys, "eval", "zeta", "--re", "1")
    assert code == 1 and err.startswith("error:")


def test_zeros_counts(capsys, cache):
    code, out, _ = run(capsys, "zeros", "--up-to", "100", "--output", "json")
    row = json.loads(out)
    assert code == 0 and row["count"] == 29 and row["count_check"] == "pass"
    assert (cache / "zeros_100.txt").exists()
    code, out, _ = run(capsys, "zeros", "--up-to", "10", "--output", "json")
    assert code == 0 and json.loads(out)["count"] == 0


def test_zeros_import(capsys, cache, tmp_path):
    run(capsys, "zeros", "--up-to", "60")
    src = tmp_path / "plain.txt"
    lines = (cache / "zeros_60.txt").read_text().splitlines()[1:]
    src.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "zeros", "--import", str(src), "--output", "json")
    assert code == 0 and json.loads(out)["count"] == 13


def test_verify_rejects_bad_spec_before_work(capsys, cache):
    code, _, err = run(capsys, "verify", "--criterion", "theorem1", "--b", "0.5", "--c", "1.5", "--d", "1.5")
    assert code == 1
    assert "Theorem 1" in err and "c ≠ d" in err
    assert not list(cache.iterdir())


def test_verify_json_schema(capsys, cache):
    code, out, _ = run(capsys, "verify", "--criterion", "eq3", "--t-max", "200", "--output", "json")
    assert code == 0
    row = json.loads(out)
    for key in ("criterion", "params", "lhs", "rhs", "residual", "quad_error", "tail_bound",
                "zeros_used", "t_max", "wall_ms"):
        assert key in row
    assert row["zeros_used"] == 79
    assert row["params"]["c"] == 1.5 and row["params"]["d"] == 3.5
    assert abs(row["rhs"] - cr.rhs_value(cr.eq3())) < 1e-14


def test_verify_is_deterministic(capsys, cache):
    argv = ("verify", "--criterion", "theorem2", "--a", "1.5", "--t-max", "150", "--output", "json", "--no-timing")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["wall_ms"] is None


def test_verify_with_injected_zero(capsys, cache):
    base = json.loads(run(capsys, "verify", "--criterion", "theorem2", "--a", "1.5", "--t-max", "150",
                          "--output", "json")[1])
    code, out, _ = run(capsys, "verify", "--criterion", "theorem2", "--a", "1.5", "--t-max", "150",
                       "--hypo", "0.75,100", "--hypo", "0.6,30,2", "--output", "json")
    row = json.loads(out)
    assert code == 0
    assert row["injected"] > 0
    assert abs(row["residual_prime"] - base["residual"]) < 1e-12


def test_exit_code_two_when_residual_exceeds(capsys, cache, monkeypatch):
    def fake(spec, zeros):
        return cr.CriterionResult(1.0, 0.0, 1.0, 1e-12, 1e-9, 0, spec)

    monkeypatch.setattr(cr, "verify", fake)
    code, out, _ = run(capsys, "verify", "--criterion", "eq10", "--output", "human")
    assert code == 2
    assert "passes" in out and "no" in out


def test_zeros_file_too_short(capsys, cache, tmp_path):
    run(capsys, "zeros", "--up-to", "120")
    code, _, err = run(capsys, "verify", "--criterion", "eq3", "--t-max", "200",
                       "--zeros-file", str(cache / "zeros_120.txt"))
    assert code == 1 and "need 200" in err


def test_sweep_csv(capsys, cache, tmp_path):
    dest = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--alphas", "0,0.25,0.45", "--t-max", "150", "--out", str(dest))
    assert code == 0
    text = dest.read_bytes().decode("ascii")
    assert "\r" not in text
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["alpha"] for r in rows] == ["0", "0.25", "0.45"]
    assert list(rows[0]) == ["alpha", "gamma_alpha", "abs_error_vs_gamma", "t_max"]
    table = cli.cached_zero_table(150.0, cache)
    g0 = cr.gamma_alpha(0.0, 150.0, 1e-12, table)
    assert abs(float(rows[0]["gamma_alpha"]) - g0) < 1e-12
    assert abs(float(rows[0]["abs_error_vs_gamma"]) - abs(g0 - EULER_GAMMA)) < 1e-14


def test_default_sweep_grid():
    assert len(cli.DEFAULT_ALPHAS) == 10
    assert cli.DEFAULT_ALPHAS[0] == 0 and cli.DEFAULT_ALPHAS[-1] == 0.45


def test_report(capsys, cache, monkeypatch):
    monkeypatch.setitem(cr.SHORTCUTS, "eq3", lambda: cr.eq3(t_max=150.0))
    monkeypatch.setitem(cr.SHORTCUTS, "eq16", lambda: cr.eq16(t_max=150.0))
    code, out, _ = run(capsys, "report", "--criteria", "eq3,eq16", "--output", "csv", "--no-timing")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["criterion"] for r in rows] == ["eq3", "eq16", "eq16-normalized"]
    assert code == 0
    assert rows[1]["passes"] == rows[2]["passes"] == "yes"


def test_report_unknown_name(capsys, cache):
    code, _, err = run(capsys, "report", "--criteria", "eq99")
    assert code == 1 and "eq99" in err


def test_fmt():
    assert cli.fmt(0.1 + 0.2) == "0.3"
    assert cli.fmt(3) == "3"
    assert cli.fmt(None) == "null"
    assert cli.fmt(-3.21558907e-9) == "-3.21558907e-09"
