import csv
import io
import json

from sigma_lab import sigma_exact
from sigma_lab.cli import dispatch


def run(capsys, *argv):
    status = dispatch(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_sigma_json_schema(capsys):
    status, out, _ = run(capsys, "sigma", "55", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload == {"n": 55, "sigma": 4, "bits_used": 128, "method": "exact-sum"}


def test_sigma_text(capsys):
    status, out, _ = run(capsys, "sigma", "4")
    assert status == 0
    assert "sigma(4) = 3" in out


def test_bracket_candidates(capsys):
    status, out, _ = run(capsys, "bracket", "55", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert set(payload) == {"n", "lower", "upper", "candidates"}
    assert set(payload["lower"]) == {"lo", "hi"}
    assert 4 in payload["candidates"]


def test_na_json_schema(capsys):
    status, out, _ = run(capsys, "na", "2", "--format", "json")
    assert status == 0
    assert json.loads(out) == {"a": "2", "n_a": 4, "n_env": 5, "r": 2}


def test_na_rejects_bad_base(capsys):
    status, _, err = run(capsys, "na", "1")
    assert status == 2 and "a > 1" in err
    status, _, err = run(capsys, "na", "one")
    assert status == 2


def test_changepoints_csv(capsys):
    status, out, _ = run(
        capsys, "changepoints", "--max-n", "4000", "--no-cache", "--format", "csv"
    )
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [row["n_i"] for row in rows] == ["3", "54", "458", "3480"]
    assert rows[0]["quotient_lo"] == "18"
    assert rows[-1]["gap"] == ""


def test_changepoints_json_schema(capsys):
    status, out, _ = run(
        capsys, "changepoints", "--max-n", "500", "--no-cache", "--format", "json"
    )
    assert status == 0
    payload = json.loads(out)
    assert set(payload) == {"max_n", "records"}
    for record in payload["records"]:
        assert set(record) == {"index", "n_i", "sigma_at", "gap", "quotient", "bits_used"}
        assert isinstance(record["n_i"], int)
        if record["quotient"] is not None:
            assert set(record["quotient"]) == {"lo", "hi"}
            assert isinstance(record["quotient"]["lo"], str)


def test_changepoints_cache_cycle(tmp_path, capsys):
    cache = str(tmp_path / "cp.jsonl")
    status, first, _ = run(
        capsys, "changepoints", "--max-n", "500", "--cache", cache, "--format", "json"
    )
    assert status == 0
    status, second, _ = run(
        capsys, "changepoints", "--max-n", "500", "--cache", cache, "--format", "json"
    )
    assert status == 0
    assert first == second
    payload = json.loads(first)
    assert [r["n_i"] for r in payload["records"]] == [3, 54, 458]
    # the stored file keeps the frontier record proving completeness
    stored = [json.loads(line) for line in open(cache)]
    assert stored[-1]["n_i"] > 500


def test_table_matches_sigma_exact(capsys):
    status, out, _ = run(capsys, "table", "--from", "50", "--to", "60", "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 11
    for row in rows:
        assert int(row["sigma"]) == sigma_exact(int(row["n"])).sigma


def test_table_from_the_start(capsys):
    status, out, _ = run(capsys, "table", "--from", "1", "--to", "5", "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(row["n"], row["sigma"]) for row in rows] == [
        ("1", "2"),
        ("2", "2"),
        ("3", "2"),
        ("4", "3"),
        ("5", "3"),
    ]


def test_table_rejects_bad_range(capsys):
    status, _, err = run(capsys, "table", "--from", "9", "--to", "3")
    assert status == 2


def test_verify_pass_exit_zero(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "threshold", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["checks"][0]["verdict"] == "PASS"
    assert payload["checks"][0]["check_id"] == "threshold"


def test_verify_text_format(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "cor1")
    assert status == 0
    assert out.startswith("PASS")


def test_verify_undecided_exits_2(capsys):
    status, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "cor1",
        "--precision-bits",
        "8",
        "--max-precision-bits",
        "8",
    )
    assert status == 2
    assert "UNDECIDED" in out


def test_verify_fail_exits_1(capsys, monkeypatch):
    import sigma_lab.cli as cli_mod
    from sigma_lab.verify import CheckReport, Verdict

    fake = CheckReport("fabricated", {}, Verdict.FAIL, [("claim", "certified opposite (GT)")])
    monkeypatch.setattr(cli_mod, "run_suite", lambda *a, **k: [fake])
    status, out, _ = run(capsys, "verify", "--suite", "cor1")
    assert status == 1
    assert out.startswith("FAIL")


def test_unknown_verb_exits_2(capsys):
    assert dispatch(["frobnicate"]) == 2


def test_missing_verb_exits_2(capsys):
    assert dispatch([]) == 2


def test_invalid_precision_flags(capsys):
    status, _, err = run(
        capsys, "sigma", "55", "--precision-bits", "512", "--max-precision-bits", "128"
    )
    assert status == 2 and "precision" in err


def test_env_var_caps_precision(capsys, monkeypatch):
    monkeypatch.setenv("SIGMA_LAB_MAX_BITS", "64")
    status, _, err = run(capsys, "sigma", "55", "--precision-bits", "128")
    assert status == 2  # initial 128 exceeds the environment cap of 64
    monkeypatch.setenv("SIGMA_LAB_MAX_BITS", "4096")
    status, out, _ = run(capsys, "sigma", "55", "--format", "json")
    assert status == 0 and json.loads(out)["sigma"] == 4
