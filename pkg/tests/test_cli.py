import json

import pytest

from pentarc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out) if out else None


def test_partition_euler(capsys):
    code, data = run_json(capsys, "partition", "5")
    assert code == 0
    assert data["results"][0]["value"] == "7"


def test_partition_methods_agree(capsys):
    code, data = run_json(capsys, "partition", "5", "--method", "trace:6", "--cross-check")
    assert code == 0
    assert data["results"][0]["value"] == "7"
    assert data["results"][0]["cross_check"]["agree"] is True
    code, data = run_json(capsys, "partition", "5", "--method", "rademacher:30", "--cross-check")
    assert code == 0
    rec = data["results"][0]
    assert rec["value"] == 7 and float(rec["gap"]) < 0.5


def test_partition_cross_check_failure_exits_1(capsys):
    # depth 1 is far too shallow for n = 30; rounding must go wrong
    code, data = run_json(capsys, "partition", "30", "--method", "rademacher:1", "--cross-check")
    assert code == 1
    assert data["results"][0]["cross_check"]["agree"] is False
    assert "diff" in data["results"][0]


def test_pnu_reports(capsys):
    code, data = run_json(capsys, "--prec", "8", "pnu", "6")
    assert code == 0
    res = data["results"]
    assert res["eisenstein_coefficient"] == "210"
    assert res["cusp_multiplier"] == "-33108590592/691"
    assert res["projections"][0]["a"] == "-33108590592/691"
    code, data = run_json(capsys, "--prec", "8", "pnu", "1")
    assert code == 0
    assert all(c == "0" for c in data["results"]["series"]["coeffs"])


def test_gpoly_values(capsys):
    code, data = run_json(capsys, "gpoly", "2", "1", "--k", "0..1")
    assert code == 0
    values = [r["value"] for r in data["results"]]
    assert values == ["181", "853"]


def test_trace_values(capsys):
    code, data = run_json(capsys, "trace", "6", "2")
    assert code == 0
    assert [r["value"] for r in data["results"]] == [
        "-33108590592/691",
        "794606174208/691",
    ]


def test_eigenforms_serialized(capsys):
    code, data = run_json(capsys, "eigenforms", "24")
    assert code == 0
    f1, f2 = data["results"]
    assert f1["d"] == 144169
    assert f1["coefficients"][2] == {"a": "540", "b": "-12", "d": 144169}
    assert f2["coefficients"][2] == {"a": "540", "b": "12", "d": 144169}


def test_dirichlet_small(capsys):
    code, data = run_json(capsys, "--big-m", "2", "--big-n", "60", "dirichlet", "6")
    assert code == 0
    rec = data["results"][0]
    assert rec["projection_exact"]["a"] == "-33108590592/691"
    assert data["big_m"] == 2 and data["big_n"] == 60
    assert float(rec["norm_estimate"]) > 0


def test_rademacher_range(capsys):
    code, data = run_json(capsys, "--depth-c", "20", "rademacher", "1..3")
    assert code == 0
    assert [r["nearest"] for r in data["results"]] == [1, 2, 3]
    assert all(r["depth"] == 20 for r in data["results"])


def test_verify_suite(capsys):
    code, data = run_json(capsys, "verify", "euler")
    assert code == 0
    assert data["results"]["ok"] is True


def test_verify_unknown_suite(capsys):
    code, _ = run_cli(capsys, "verify", "no-such-suite")
    assert code == 2


def test_usage_errors_exit_2(capsys):
    code, _ = run_cli(capsys, "partition", "5", "--method", "bogus")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_output_determinism(capsys):
    _, first = run_cli(capsys, "partition", "1..6", "--method", "trace:6")
    _, second = run_cli(capsys, "partition", "1..6", "--method", "trace:6")

    def strip_timing(text):
        data = json.loads(text)
        data.pop("timings")
        return json.dumps(data, sort_keys=True)

    assert strip_timing(first) == strip_timing(second)
    assert first != second or first == second  # timings differ or collide; both fine


def test_out_file_and_formats(tmp_path, capsys):
    target = tmp_path / "out.json"
    code = main(["--out", str(target), "partition", "4"])
    assert code == 0
    assert json.loads(target.read_text())["results"][0]["value"] == "5"
    code, out = run_cli(capsys, "--format", "csv", "gpoly", "2", "1", "--k", "0..2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:2] == ["k", "n"]
    assert len(lines) == 4
    code, out = run_cli(capsys, "--format", "text", "partition", "3")
    assert code == 0
    assert "results[0].value: 3" in out


def test_env_and_config_precedence(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"depth_c": 5, "prec": 12}))
    monkeypatch.setenv("PENTARC_DEPTH_C", "7")
    code, data = run_json(capsys, "--config", str(cfg), "rademacher", "2")
    assert code == 0
    # env beats config
    assert data["results"][0]["depth"] == 7
    assert data["config"]["prec"] == 12
    # flag beats env
    code, data = run_json(capsys, "--config", str(cfg), "--depth-c", "9", "rademacher", "2")
    assert data["results"][0]["depth"] == 9
