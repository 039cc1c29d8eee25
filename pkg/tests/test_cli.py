"""Command line behavior: queries, grids, encodings, exit codes."""

import argparse
import json

import pytest

from nettedmat import cli
from nettedmat.reports import Report, make_report, witness


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_build_power_query(capsys):
    rc, out, _ = run(capsys, "build", "--n", "3", "--m", "2", "--power", "2")
    assert rc == 0
    assert out == "[[1,4,4],[2,9,10],[4,20,25]]\n"


def test_build_symbolic_query(capsys):
    rc, out, _ = run(capsys, "build", "--n", "3", "--symbolic")
    assert rc == 0
    assert out == "[[0,0,1],[0,1,m],[1,2*m,m^2]]\n"


def test_build_inverse_query(capsys):
    rc, out, _ = run(capsys, "build", "--n", "2", "--m", "3", "--inverse")
    assert rc == 0
    assert out == "[[-3,1],[1,0]]\n"


def test_entry_point_query(capsys):
    rc, out, _ = run(capsys, "mod", "--entry-point", "--m", "1", "--p", "5")
    assert rc == 0
    assert out == "5\n"


def test_entry_point_query_needs_single_point(capsys):
    rc, _, err = run(capsys, "mod", "--entry-point",
                     "--m", "1", "--m", "2", "--p", "5")
    assert rc == 2
    assert "exactly one" in err


def test_charpoly_query(capsys):
    rc, out, _ = run(capsys, "charpoly", "--n", "2", "--symbolic")
    assert rc == 0
    assert out == "equal: x^2 - m*x - 1\n"


def test_json_reports_schema(capsys, tmp_path):
    out_file = tmp_path / "reports.jsonl"
    rc, _, err = run(capsys, "netted", "--n-max", "3", "--e-max", "2",
                     "--m", "1", "--format", "json", "--out", str(out_file))
    assert rc == 0
    assert "reports:" in err
    lines = out_file.read_text().splitlines()
    assert lines
    for line in lines:
        rec = json.loads(line)
        assert set(rec) == {"claim_id", "params", "status", "witnesses"}
        assert rec["claim_id"] in cli.CLAIM_IDS
        assert all(isinstance(v, str) for v in rec["params"].values())
        for w in rec["witnesses"]:
            assert len(w) == 3
            assert all(isinstance(part, str) for part in w)


def test_all_grid_covers_every_claim(capsys, tmp_path):
    out_file = tmp_path / "all.jsonl"
    rc, _, _ = run(capsys, "all", "--n-max", "3", "--e-max", "2",
                   "--l-max", "2", "--m", "1",
                   "--p", "3", "--p", "5", "--p", "11",
                   "--symbolic", "--format", "json", "--out", str(out_file))
    assert rc == 0
    seen = {json.loads(line)["claim_id"]
            for line in out_file.read_text().splitlines()}
    assert seen == set(cli.CLAIM_IDS)


def test_grid_output_is_reproducible(capsys, tmp_path):
    texts = []
    for name in ("one.jsonl", "two.jsonl"):
        out_file = tmp_path / name
        rc, _, _ = run(capsys, "fib", "--n-max", "3", "--e-max", "2",
                       "--m", "2", "--seed", "9",
                       "--format", "json", "--out", str(out_file))
        assert rc == 0
        texts.append(out_file.read_text())
    assert texts[0] == texts[1]


def test_parallel_grid_matches_serial(capsys, tmp_path):
    texts = []
    for jobs in ("1", "2"):
        out_file = tmp_path / f"jobs{jobs}.jsonl"
        rc, _, _ = run(capsys, "netted", "--n-max", "3", "--e-max", "2",
                       "--m", "1", "--jobs", jobs,
                       "--format", "json", "--out", str(out_file))
        assert rc == 0
        texts.append(out_file.read_text())
    assert texts[0] == texts[1]


def test_mod_grid_claims(capsys, tmp_path):
    out_file = tmp_path / "mod.jsonl"
    rc, _, _ = run(capsys, "mod", "--n-max", "2", "--m", "1", "--p", "5",
                   "--format", "json", "--out", str(out_file))
    assert rc == 0
    seen = {json.loads(line)["claim_id"]
            for line in out_file.read_text().splitlines()}
    assert seen == {"thm5.1.i", "thm5.1.ii", "thm5.1.iii", "thm5.1.iv",
                    "thm5.1.v", "thm5.2", "lem5.3", "thm5.4", "ord5"}


def test_failing_report_flips_exit_code(capsys):
    ns = argparse.Namespace(format="text", out=None)
    bad = make_report("probe", {"n": 1}, [witness("loc", 1, 2)])
    assert cli._emit([bad], ns) == 1
    captured = capsys.readouterr()
    assert "probe fail n=1" in captured.out
    assert "  ! loc: expected 1, got 2" in captured.out
    good = make_report("probe", {"n": 1}, [])
    assert cli._emit([good], ns) == 0


def test_text_lines_truncate_and_annotate():
    wit = [witness(f"spot{k}", 0, k + 1) for k in range(10)]
    rep = Report("probe", {}, "fail", wit, note="first bad power")
    lines = list(cli._text_lines(rep))
    assert lines[0] == "probe fail"
    assert len([ln for ln in lines if ln.startswith("  ! spot")]) == 8
    assert "  ! ... 2 more" in lines
    assert lines[-1] == "  # first bad power"


def test_usage_errors_exit_2(capsys):
    for argv in (["netted", "--n-max", "0"],
                 ["mod", "--p", "4"],
                 ["nope"],
                 []):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
        capsys.readouterr()
