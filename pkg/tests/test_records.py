import json
from fractions import Fraction

from fockbound.records import ClaimTally, exact_text, slack_of, write_reports


def test_slack_orientation():
    assert slack_of(3, 5, "<=") == 2
    assert slack_of(Fraction(1, 3), Fraction(1, 2), "<=") == Fraction(1, 6)
    assert slack_of(0.5, 0.25, "<=") == -0.25
    assert slack_of(4, 4, "==") == 0
    assert slack_of(4, 6, "==") == -2
    assert slack_of("a", "b", "==") == -1


def test_exact_text():
    assert exact_text(Fraction(3, 4)) == "3/4"
    assert exact_text(Fraction(4, 2)) == 2
    assert exact_text(0.1 + 0.2) == 0.3
    assert exact_text(None) is None


def test_tally_tracks_tightest_and_violations():
    t = ClaimTally("demo", "sym", "<=")
    t.add(1, 3, "a")
    t.add(2, 3, "b")
    assert t.passed and t.tightest.instance == "b"
    t.add(4, 3, lambda: "c")
    assert not t.passed and t.violation_count == 1
    assert t.tightest.instance == "c" and t.tightest.slack == -1
    t.check(True, "d")
    assert t.checked == 4
    s = t.summary("anchor")
    assert s["min_slack"] == -1 and s["violations"] == 1 and s["suite"] == "sym"


def test_tally_histogram_and_exact_hits():
    t = ClaimTally("demo")
    t.add(0, 10, "loose")
    t.add(10, 10, "tight")
    t.add(5, 10, "half")
    assert t.exact_hits == 1
    assert sum(t.histogram) == 2
    assert t.histogram[-1] == 1 and t.histogram[5] == 1


def test_reports_are_sorted_and_atomic(tmp_path):
    a = ClaimTally("b-claim", "full")
    a.add(1, 2, "x")
    b = ClaimTally("a-claim", "sym")
    b.add(3, 2, "y")
    summary = write_reports(tmp_path, {"seed": 0}, [(a, "A"), (b, "B")])
    assert [c["claim"] for c in summary["claims"]] == ["a-claim", "b-claim"]
    assert summary["status"] == "fail" and summary["total_violations"] == 1
    lines = (tmp_path / "records.jsonl").read_text().splitlines()
    recs = [json.loads(line) for line in lines]
    assert recs[0]["claim"] == "a-claim" and recs[0]["pass"] is False
    assert json.loads((tmp_path / "summary.json").read_text()) == summary
    csv_lines = (tmp_path / "summary.csv").read_text().splitlines()
    assert csv_lines[0].startswith("claim,suite,checked")
    assert not [p for p in tmp_path.iterdir() if p.name.endswith(".tmp")]
