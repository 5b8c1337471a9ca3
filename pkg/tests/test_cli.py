"""CLI behaviour: record formats, exit codes, flag placement, determinism."""

import json

import pytest

from eisen.cli import run


def _lines(capsys):
    out = capsys.readouterr().out
    return [ln for ln in out.splitlines() if ln]


def test_rq_json(capsys):
    assert run(["rq", "441"]) == 0
    (line,) = _lines(capsys)
    rec = json.loads(line)
    assert rec == {"command": "rq", "params": {"n": 441}, "result": 18}


def test_points_json_and_count(capsys):
    assert run(["points", "12"]) == 0
    recs = [json.loads(ln) for ln in _lines(capsys)]
    assert len(recs) == 6
    pts = {(r["result"]["a"], r["result"]["b"]) for r in recs}
    assert pts == {(-2, -2), (2, -4), (4, -2), (2, 2), (-2, 4), (-4, 2)}
    angles = [r["result"]["angle"] for r in recs]
    assert angles == sorted(angles)


def test_points_csv(capsys):
    assert run(["--format", "csv", "points", "12"]) == 0
    lines = _lines(capsys)
    assert lines[0].rstrip("\r") == "a,b,angle"
    assert len(lines) == 7


def test_format_flag_after_subcommand(capsys):
    assert run(["points", "12", "--format", "csv"]) == 0
    lines = _lines(capsys)
    assert lines[0].rstrip("\r") == "a,b,angle"


def test_expsum_near_zero(capsys):
    assert run(["expsum", "10", "1"]) == 0
    rec = json.loads(_lines(capsys)[0])
    assert abs(rec["result"]["re"]) < 1e-9
    assert abs(rec["result"]["im"]) < 1e-9


def test_factor_record(capsys):
    assert run(["factor", "441"]) == 0
    rec = json.loads(_lines(capsys)[0])
    r = rec["result"]
    assert r["n"] == 441
    assert r["alpha3"] == 4
    assert r["split"] == [{"p": 7, "pi": [2, 1], "exp_pi": 2, "exp_conj": 2}]
    assert r["inert"] == []


def test_json_round_trip(capsys):
    samples = [
        ["rq", "91"],
        ["points", "7"],
        ["discrepancy", "49"],
        ["theta", "2.0", "1"],
        ["lfunc", "2.0", "0.0", "0"],
        ["sector", "1000", "-0.2", "0.3"],
        ["survey", "500", "0.5"],
        ["bad-circle", "0.26", "48"],
        ["li", "100"],
    ]
    for argv in samples:
        assert run(argv) == 0, argv
        for line in _lines(capsys):
            assert json.dumps(json.loads(line), separators=(", ", ": ")) == line


def test_theta_record_carries_error_estimate(capsys):
    assert run(["theta", "1.0", "1", "--tol", "1e-10"]) == 0
    rec = json.loads(_lines(capsys)[0])
    assert rec["error_estimate"] == 1e-10
    assert rec["params"] == {"t": 1.0, "a": 1}


def test_lfunc_error_estimate_meets_tol(capsys):
    assert run(["lfunc", "2.0", "0.0", "0", "--tol", "1e-8"]) == 0
    rec = json.loads(_lines(capsys)[0])
    assert rec["error_estimate"] <= 1e-8
    assert abs(rec["result"]["re"] - 1.2851909554841494) < 1e-8


def test_xi_check_record(capsys):
    assert run(["xi-check", "0.3", "0.7", "1"]) == 0
    rec = json.loads(_lines(capsys)[0])
    assert rec["result"]["residual"] < 1e-6


def test_avg_expsum_checkpoint_rows(capsys):
    assert run(["avg-expsum", "10000", "6", "--checkpoints", "1000,10000"]) == 0
    recs = [json.loads(ln) for ln in _lines(capsys)]
    assert [r["result"]["x"] for r in recs] == [1000, 10000]
    assert recs[0]["result"]["mean"] > recs[1]["result"]["mean"]
    assert recs[0]["result"]["fitted_exponent"] < -0.25


def test_discrepancy_with_random_arcs_seeded(capsys):
    assert run(["discrepancy", "91", "--random-arcs", "500", "--seed", "11"]) == 0
    first = json.loads(_lines(capsys)[0])
    assert run(["--seed", "11", "discrepancy", "91", "--random-arcs", "500"]) == 0
    second = json.loads(_lines(capsys)[0])
    assert first == second
    assert first["result"]["random_lower_bound"] <= first["result"]["delta"] + 1e-12


def test_threads_do_not_change_output(capsys):
    argv = ["avg-expsum", "20000", "6"]
    assert run(argv + ["--threads", "1"]) == 0
    one = _lines(capsys)
    assert run(argv + ["--threads", "4"]) == 0
    four = _lines(capsys)
    assert one == four

    assert run(["survey", "30000", "0.65", "--threads", "1"]) == 0
    s_one = _lines(capsys)
    assert run(["survey", "30000", "0.65", "--threads", "4"]) == 0
    s_four = _lines(capsys)
    assert s_one == s_four


def test_threads_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("EISEN_THREADS", "2")
    assert run(["survey", "5000", "0.5"]) == 0
    env_out = _lines(capsys)
    monkeypatch.delenv("EISEN_THREADS")
    assert run(["survey", "5000", "0.5"]) == 0
    assert env_out == _lines(capsys)
    monkeypatch.setenv("EISEN_THREADS", "0")
    assert run(["survey", "5000", "0.5"]) == 2


def test_rejected_arguments_exit_2(capsys):
    assert run(["rq", "-5"]) == 2
    assert capsys.readouterr().err.startswith("error:")
    assert run(["survey", "1000", "0.7"]) == 2
    capsys.readouterr()
    assert run(["li", "1"]) == 2
    capsys.readouterr()
    assert run(["expsum", "10", "0"]) == 2
    capsys.readouterr()
    assert run(["theta", "-1.0", "0"]) == 2
    capsys.readouterr()


def test_bad_usage_exits_2(capsys):
    assert run(["no-such-command"]) == 2
    capsys.readouterr()
    assert run(["rq"]) == 2
    capsys.readouterr()
    assert run([]) == 2
    capsys.readouterr()


def test_internal_error_exits_1(capsys):
    # theta truncation blowing past its shell budget is a RuntimeError
    assert run(["theta", "1e-5", "1"]) == 1
    assert "internal error" in capsys.readouterr().err


def test_survey_csv(capsys):
    assert run(["--format", "csv", "survey", "20000", "0.65"]) == 0
    lines = [ln.rstrip("\r") for ln in _lines(capsys)]
    assert lines[0] == "b_q,m_gamma,fraction"
    b, m, frac = lines[1].split(",")
    assert (int(b), int(m)) == (4397, 11)
    assert float(frac) == pytest.approx(11 / 4397)
