"""Command-line interface: exit codes, report determinism, error handling."""
import json

import pytest

from maxinv.cli import (
    EXIT_COUNTEREXAMPLE,
    EXIT_INVALID,
    EXIT_OUT_OF_HYPOTHESIS,
    EXIT_PASS,
    CHECKERS,
    analyze,
    main,
    report_to_json,
    run_campaign,
    strip_timing,
)
from maxinv.catalog import symmetric
from maxinv.groups import serialize_group_file


S3_FILE = "points: 3\ngen: (0 1)\ngen: (0 1 2)\n"
S4_FILE = "points: 4\ngen: (0 1)\ngen: (0 1 2 3)\n"
C12_FILE = "points: 7\ngen: (0 1 2 3)(4 5 6)\n"
D14_FILE = "points: 7\ngen: (0 1 2 3 4 5 6)\ngen: (1 6)(2 5)(3 4)\n"
D14_ACT3 = "aut: g0 -> (0 2 4 6 1 3 5); g1 -> (1 6)(2 5)(3 4)\n"
S3_INNER_ACT = "aut: g0 -> (0 1); g1 -> (0 2 1)\n"  # conjugation, order 2


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "s3.grp": S3_FILE,
        "s4.grp": S4_FILE,
        "c12.grp": C12_FILE,
        "d14.grp": D14_FILE,
        "d14.act": D14_ACT3,
        "s3-inner.act": S3_INNER_ACT,
        "bad.grp": "points: 3\ngen: (0 9)\n",
    }.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


# ---------------------------------------------------------------------------
# exit codes


def test_verify_pass(files, capsys):
    rc = main(["verify", "thm1.3", "--group", files["s3.grp"]])
    assert rc == EXIT_PASS
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "pass"
    assert out["result"]["equivalent"] is True


def test_verify_out_of_hypothesis(files, capsys):
    rc = main(["verify", "thm1.9", "--group", files["c12.grp"]])
    assert rc == EXIT_OUT_OF_HYPOTHESIS
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "out-of-hypothesis"


def test_verify_counterexample_exit(files, monkeypatch, capsys):
    # no fixture genuinely falsifies the statements, so stub a failing checker
    monkeypatch.setitem(CHECKERS, "thm1.3", lambda G, A, ctx: ("fail", {"boom": True}))
    rc = main(["verify", "thm1.3", "--group", files["s3.grp"]])
    assert rc == EXIT_COUNTEREXAMPLE


def test_verify_with_action(files, capsys):
    rc = main(["verify", "thm1.9", "--group", files["d14.grp"], "--action", files["d14.act"]])
    assert rc == EXIT_PASS


def test_invalid_group_file(files, capsys):
    rc = main(["verify", "thm1.3", "--group", files["bad.grp"]])
    assert rc == EXIT_INVALID
    assert "out of range" in capsys.readouterr().err


def test_missing_group_file(tmp_path, capsys):
    rc = main(["verify", "thm1.3", "--group", str(tmp_path / "nope.grp")])
    assert rc == EXIT_INVALID


def test_non_coprime_action_rejected(files, capsys):
    rc = main(["verify", "thm1.3", "--group", files["s3.grp"], "--action", files["s3-inner.act"]])
    assert rc == EXIT_INVALID
    assert "action not coprime" in capsys.readouterr().err


def test_unknown_checker_rejected(files):
    with pytest.raises(SystemExit):
        main(["verify", "nonsense", "--group", files["s3.grp"]])


# ---------------------------------------------------------------------------
# analyze


def test_analyze_report(files, capsys):
    rc = main(["analyze", "--group", files["s3.grp"]])
    assert rc == EXIT_PASS
    out = json.loads(capsys.readouterr().out)
    assert out["order"] == 6
    assert out["subgroup_count"] == 6
    assert out["sylow"]["2"]["count"] == 3
    assert out["sylow"]["3"]["normal"] is True
    assert out["decomposition"] is not None
    assert len(out["maximal_invariant_subgroups"]) == 4


def test_analyze_with_action(files, capsys):
    rc = main(["analyze", "--group", files["d14.grp"], "--action", files["d14.act"]])
    assert rc == EXIT_PASS
    out = json.loads(capsys.readouterr().out)
    assert out["action"]["order"] == 3
    assert len(out["maximal_invariant_subgroups"]) == 2


def test_analyze_function_matches_cli(files, capsys):
    G = symmetric(3)
    report = analyze(G)
    main(["analyze", "--group", files["s3.grp"]])
    cli_report = json.loads(capsys.readouterr().out)
    assert strip_timing(report)["fingerprint"] == cli_report["fingerprint"]
    assert report["hypothesis"]["holds"] is True


# ---------------------------------------------------------------------------
# campaign


def test_campaign_cli(files, tmp_path, capsys):
    out_path = tmp_path / "report.json"
    rc = main(["campaign", "--max-order", "20", "--out", str(out_path), "--jobs", "1"])
    assert rc == EXIT_PASS
    assert "0 failures" in capsys.readouterr().out
    report = json.loads(out_path.read_text())
    assert report["summary"]["failures"] == 0
    assert report["summary"]["checks"] > 0


def test_campaign_rejects_order_above_cap(tmp_path, capsys):
    rc = main(["campaign", "--max-order", "100000", "--out", str(tmp_path / "r.json")])
    assert rc == EXIT_INVALID


def test_campaign_unwritable_output(capsys):
    rc = main(["campaign", "--max-order", "6", "--out", "/nonexistent-dir/r.json", "--jobs", "1"])
    assert rc == EXIT_INVALID


def test_campaign_deterministic_modulo_timing():
    a = run_campaign(16)
    b = run_campaign(16)
    assert report_to_json(strip_timing(a)) == report_to_json(strip_timing(b))


def test_strip_timing_removes_all_timing_keys():
    report = run_campaign(10)
    assert "timing" in report
    stripped = report_to_json(strip_timing(report))
    assert '"timing"' not in stripped
    assert json.loads(stripped)["summary"]["failures"] == 0


def test_report_entries_sorted(files):
    report = run_campaign(12)
    keys = [
        (e["fingerprint"], e["group"], e["action"], e["checker"]) for e in report["entries"]
    ]
    assert keys == sorted(keys)


def test_group_file_roundtrip_through_cli(tmp_path, capsys):
    G = symmetric(4)
    path = tmp_path / "s4.grp"
    path.write_text(serialize_group_file(G))
    rc = main(["analyze", "--group", str(path)])
    assert rc == EXIT_PASS
    out = json.loads(capsys.readouterr().out)
    assert out["order"] == 24
