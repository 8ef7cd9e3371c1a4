"""Acceptance criteria, one test per criterion, at the stated sizes and tolerances.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.  The whole file takes several minutes.
"""

import time
from collections import Counter
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from fockbound.harness import registered, resolve, run_job, run_suite
from fockbound.measures import bound_shell_sup, predicted_radius
from fockbound.qinner import all_words, gram_bruteforce, gram_closed, q_inner

registered()

criterion = pytest.mark.criterion


def run(config, jobs, **flags):
    """Run ``(claim, suite)`` jobs and return their tallies, printing one line each."""
    cfg, parsed = resolve(config, flags)
    tallies = []
    for cid, suite in jobs:
        t0 = time.perf_counter()
        tally = run_job(parsed, cfg, cid, suite)
        print(f"  {suite:6s} {cid:32s} checked={tally.checked:<9d} skipped={tally.skipped:<7d} "
              f"violations={tally.violation_count} ({time.perf_counter() - t0:.1f}s)")
        tallies.append(tally)
    return tallies


def assert_clean(tallies):
    bad = [(t.claim, t.suite, t.violations[:3]) for t in tallies if not t.passed]
    assert not bad, bad
    empty = [(t.claim, t.suite) for t in tallies if t.checked == 0]
    assert not empty, empty


@criterion(1, "q-inner closed form equals the permutation-sum oracle (degree <= 6, 4 letters, q in {0,1,-1})")
def test_q_inner_oracle_equivalence():
    start = time.perf_counter()
    for q in (0, 1, -1):
        for n in range(7):
            oracle = gram_bruteforce(4, n, q)
            # every pair at once through the vectorized closed form
            assert np.array_equal(gram_closed(4, n, q), oracle)
            words = [tuple(int(c) for c in row) for row in all_words(4, n)]
            if n <= 4:
                for i, j in product(range(len(words)), repeat=2):
                    assert q_inner(words[i], words[j], q) == oracle[i, j]
                continue
            # higher degrees: the scalar closed form on every pair with equal letter content,
            # and the oracle vanishes on every other pair
            classes: dict = {}
            for i, w in enumerate(words):
                classes.setdefault(tuple(sorted(Counter(w).items())), []).append(i)
            label = np.empty(len(words), dtype=np.int64)
            for c, members in enumerate(classes.values()):
                label[members] = c
                for i in members:
                    for j in members:
                        assert q_inner(words[i], words[j], q) == oracle[i, j]
            assert not oracle[label[:, None] != label[None, :]].any()
            # cross-degree pairs are orthogonal
            assert q_inner(words[0], words[0][:-1], q) == 0
    elapsed = time.perf_counter() - start
    print(f"  q-inner oracle equivalence in {elapsed:.1f}s")
    assert elapsed < 30


@criterion(2, "q-commutation relation exact at N = 6, q in {0,-1}, all label pairs from an 8-point ball")
def test_q_commutation_relation():
    tallies = run("cyclic_flip", [("q-commutation", "full"), ("q-commutation", "anti")],
                  truncation=6, fock_letters=8)
    assert_clean(tallies)
    cfg, parsed = resolve("cyclic_flip", {})
    assert len(parsed.action.ball(10)) == 8
    # every ordered pair of the 8 letters over the degree-safe block
    assert tallies[0].checked == 64 * sum(8**n for n in range(6))


@criterion(3, "covariance: U l(s) U* = l(pi_g s) and J l(s) J = r(Is) at N = 5, 6-point ball, |g| <= 3")
def test_covariance_suite():
    jobs = [(c, v) for c in ("covariance-translation", "covariance-conjugation") for v in ("full", "sym", "anti")]
    tallies = run("flip_z", jobs, truncation=5, gamma_ball=3, fock_letters=6)
    assert_clean(tallies)
    cfg, parsed = resolve("flip_z", {})
    assert len(parsed.action.ball(1)) == 6


@criterion(4, "creation coefficients: sym 1 <= C <= sqrt(n+1), C^2 = k+1; anti C in {0,+-1} with parity sign; N = 5")
def test_creation_coefficients():
    jobs = [("sym-coefficient-bound", "sym"), ("anti-coefficient-sign", "anti")]
    jobs += [("creation-matrix-oracle", v) for v in ("sym", "anti")]
    assert_clean(run("z_on_z", jobs, truncation=5))


@criterion(5, "omega identity and the four inequality families, zero violations over 1e5 samples each, < 5 min")
def test_measure_inequalities():
    start = time.perf_counter()
    claims = ["omega-norm-identity", "omega-translation-bound", "omega-translation-bound-right",
              "mu-translation-bound", "omega-creation-bound", "omega-creation-bound-right"]
    jobs = [(c, v) for c in claims for v in ("full", "sym", "anti")]
    jobs += [(c, v) for c in ("mu-creation-weighted", "mu-creation-weighted-right") for v in ("sym", "anti")]
    tallies = run("z_on_z", jobs, samples=100_000)
    assert_clean(tallies)
    assert all(t.checked + t.skipped >= 100_000 for t in tallies)
    elapsed = time.perf_counter() - start
    print(f"  measure inequalities in {elapsed:.1f}s")
    assert elapsed < 300


@criterion(6, "decay: exact shells R <= 12 within the pointwise bound, envelope < 0.05 by the predicted radius")
def test_decay_certification():
    tallies = run("z_on_z", [("mu-decay-creation", v) for v in ("full", "sym", "anti")],
                  shell_max=12, shell_budget=150_000)
    assert_clean(tallies)
    # the bound is exactly 1/20 at R = 6680, so the first radius strictly below is 6681
    eps = Fraction(1, 20)
    Rstar = predicted_radius(eps, 1)
    assert Rstar == 6681
    assert bound_shell_sup(Rstar, 1) < eps == bound_shell_sup(Rstar - 1, 1)
    for t in tallies:
        envelope = t.notes["envelope"]
        assert len(envelope) == 12
        for entry in envelope:
            measured, bound = (float(v) for v in entry.split(":")[1].split("/"))
            assert measured <= bound
        assert t.notes["predicted_radius"] == Rstar
        assert t.notes["sampled_points_beyond_radius"] > 0
    # the three variants see the same envelope
    assert len({tuple(t.notes["envelope"]) for t in tallies}) == 1


@criterion(7, "field operators: ||W(x) P_m|| <= 2 sqrt(m+1) for m <= 8 (1e-9), exp(itW) unitary to 1e-8")
def test_field_operators():
    assert_clean(run("z_on_z", [("field-norm-bound", "sym"), ("exp-field-unitary", "sym")]))


@criterion(8, "shell cover for R <= 6 exhaustively and generator sup within M")
def test_shell_cover():
    jobs = [(c, v) for c in ("shell-cover", "shell-generator-bound") for v in ("full", "sym", "anti")]
    assert_clean(run("z_on_z", jobs, shell_max=6))


@criterion(9, "free wreath: closure bullets, omega bounds and bullets, supp ratio; 1e5 samples and exact shells R <= 8")
def test_free_wreath_suite():
    claims = ["wreath-closure-union", "wreath-closure-inverse", "wreath-closure-letter",
              "wreath-closure-translation", "wreath-omega-norm", "wreath-omega-additive", "wreath-omega-inverse",
              "wreath-translation-bound", "wreath-translation-bound-right", "wreath-creation-bound",
              "wreath-creation-bound-right", "wreath-creation-disjoint", "wreath-supp-ratio"]
    tallies = run("z_on_z", [(c, "wreath") for c in claims], samples=100_000)
    tallies += run("z_on_z", [("wreath-shell-laws", "wreath")], shell_max=8, shell_budget=3_000_000)
    assert_clean(tallies)
    assert len(tallies[-1].notes["shell_sup_ratio"]) == 8


@criterion(10, "determinism: two default runs with the same seed give byte-identical JSON reports")
def test_determinism(tmp_path):
    digests = []
    for name in ("first", "second"):
        cfg, parsed = resolve("z_on_z", {"out": str(tmp_path / name)})
        result = run_suite(cfg, parsed)
        assert result.exit_code == 0
        digests.append({f: (tmp_path / name / f).read_bytes() for f in ("summary.json", "records.jsonl",
                                                                         "summary.csv")})
    assert digests[0] == digests[1]
