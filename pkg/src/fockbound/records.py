"""Verification records, per-claim tallies and report files."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

HIST_BINS = 10
MAX_VIOLATIONS = 50


def exact_text(v) -> str | float | int | None:
    """JSON-friendly exact value: integers stay integers, rationals become ``"p/q"``."""
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return float(f"{v:.12g}")
    return str(v)


@dataclass
class VerificationRecord:
    claim: str
    suite: str
    instance: str
    lhs: object
    rhs: object
    relation: str
    slack: object
    passed: bool

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "suite": self.suite,
            "instance": self.instance,
            "lhs": exact_text(self.lhs),
            "rhs": exact_text(self.rhs),
            "relation": self.relation,
            "slack": exact_text(self.slack),
            "pass": self.passed,
        }


def slack_of(lhs, rhs, relation: str):
    """Slack under the claim's orientation: ``rhs - lhs`` for ``<=``, ``-|lhs - rhs|`` for ``==``."""
    if relation == "==":
        if type(lhs) is int and type(rhs) is int:
            return -abs(lhs - rhs)
        if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
            return -abs(Fraction(lhs) - Fraction(rhs))
        return 0 if lhs == rhs else -1
    if relation in ("<=", "<=sq"):
        if isinstance(lhs, float) or isinstance(rhs, float):
            return float(rhs) - float(lhs)
        return Fraction(rhs) - Fraction(lhs)
    raise ValueError(f"unknown relation {relation!r}")


@dataclass
class ClaimTally:
    """Streaming summary of one claim: counts, tightest instance, violations, slack histogram."""

    claim: str
    suite: str = "base"
    relation: str = "<="
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    violation_count: int = 0
    tightest: VerificationRecord | None = None
    histogram: list = field(default_factory=lambda: [0] * HIST_BINS)
    exact_hits: int = 0
    notes: dict = field(default_factory=dict)

    def add(self, lhs, rhs, instance: Callable[[], str] | str, relation: str | None = None) -> bool:
        relation = relation or self.relation
        slack = slack_of(lhs, rhs, relation)
        passed = slack >= 0
        self.checked += 1
        if relation == "==" or slack == 0:
            self.exact_hits += 1 if passed else 0
        else:
            rel = float(slack) / float(rhs) if float(rhs) else 1.0
            if passed:
                self.histogram[min(HIST_BINS - 1, max(0, int(rel * HIST_BINS)))] += 1
        if not passed:
            self.violation_count += 1
        tighter = self.tightest is None or slack < self.tightest.slack
        if not passed or tighter:
            text = instance() if callable(instance) else instance
            rec = VerificationRecord(self.claim, self.suite, text, lhs, rhs, relation, slack, passed)
            if tighter or (slack == self.tightest.slack and text < self.tightest.instance):
                self.tightest = rec
            if not passed and len(self.violations) < MAX_VIOLATIONS:
                self.violations.append(rec)
        return passed

    def check(self, ok: bool, instance: Callable[[], str] | str) -> bool:
        """Record a boolean identity (stored as an equality ``1 == ok``)."""
        if ok and self.tightest is not None and self.tightest.slack <= 0:
            # fast path: nothing about the summary changes except the counters
            self.checked += 1
            self.exact_hits += 1
            return True
        return self.add(1, 1 if ok else 0, instance, "==")

    def skip(self, n: int = 1) -> None:
        self.skipped += n

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def summary(self, anchor: str) -> dict:
        return {
            "claim": self.claim,
            "suite": self.suite,
            "anchor": anchor,
            "relation": self.relation,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violation_count,
            "pass": self.passed,
            "min_slack": exact_text(self.tightest.slack) if self.tightest else None,
            "histogram": {
                "exact": self.exact_hits,
                "relative_slack_bins": self.histogram,
            },
            "notes": {k: exact_text(v) if not isinstance(v, (list, dict)) else v for k, v in sorted(self.notes.items())},
        }


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_reports(out_dir: Path, header: dict, tallies: list[tuple[ClaimTally, str]]) -> dict:
    """Write ``records.jsonl``, ``summary.json`` and ``summary.csv``; returns the summary."""
    tallies = sorted(tallies, key=lambda ta: (ta[0].claim, ta[0].suite))
    lines = []
    for tally, _ in tallies:
        recs = list(tally.violations)
        if tally.tightest is not None and tally.tightest not in recs:
            recs.append(tally.tightest)
        recs.sort(key=lambda r: r.instance)
        for rec in recs:
            lines.append(json.dumps(rec.to_json(), sort_keys=True, ensure_ascii=False))
    claims = [t.summary(anchor) for t, anchor in tallies]
    summary = dict(header)
    summary["claims"] = claims
    summary["total_checked"] = sum(c["checked"] for c in claims)
    summary["total_violations"] = sum(c["violations"] for c in claims)
    summary["status"] = "pass" if summary["total_violations"] == 0 else "fail"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["claim", "suite", "checked", "skipped", "violations", "min_slack", "pass", "anchor"])
    for c in claims:
        writer.writerow(
            [c["claim"], c["suite"], c["checked"], c["skipped"], c["violations"], c["min_slack"], c["pass"], c["anchor"]]
        )
    out_dir = Path(out_dir)
    _atomic_write(out_dir / "records.jsonl", "".join(line + "\n" for line in lines))
    _atomic_write(
        out_dir / "summary.json", json.dumps(summary, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    )
    _atomic_write(out_dir / "summary.csv", buf.getvalue())
    return summary
