import json

import pytest

from fockbound.harness import REGISTRY, ResourceLimit, SuiteConfig, jobs_of, registered, resolve, run_job, run_suite
from fockbound.sampling import PointSampler, composition, stream


def test_registry_covers_every_suite():
    claims = registered()
    assert len(claims) == len(REGISTRY) >= 60
    suites = {s for c in claims for s in c.suites}
    assert suites == {"base", "full", "sym", "anti", "wreath"}
    ids = [c.id for c in claims]
    assert ids == sorted(ids)


def test_anchors_listed():
    anchors = {c.id: c.anchor for c in registered()}
    assert anchors["omega-translation-bound"] == "‖g·ω(z)−ω(gz)‖₁ ≤ |z|₀|g|_Γ"
    assert "q-commutation relation" in anchors["q-commutation"]


def test_jobs_follow_variants():
    cfg = SuiteConfig(variants=("sym",))
    suites = {s for _, s in jobs_of(cfg)}
    assert suites == {"base", "sym"}
    cfg = SuiteConfig(claims=("mu-probability",))
    assert jobs_of(cfg) == [("mu-probability", "full"), ("mu-probability", "sym"), ("mu-probability", "anti")]


def test_streams_are_stable():
    a = [stream(3, "x", "y").random() for _ in range(2)]
    b = [stream(3, "x", "y").random() for _ in range(2)]
    assert a == b
    assert stream(3, "x").random() != stream(4, "x").random()


def test_composition_is_weak_and_sums():
    rng = stream(0, "comp")
    for _ in range(200):
        parts = composition(rng, 7, 3)
        assert len(parts) == 3 and sum(parts) == 7 and min(parts) >= 0


def test_point_sampler_hits_requested_lengths(zz, free2, dihedral):
    rng = stream(0, "points")
    for parsed in (zz, free2):
        sampler = PointSampler(parsed.action)
        for m in (0, 1, 5, 1000):
            assert sampler.of_length(rng, m).length == m
    # finite orbits top out at their diameter
    sampler = PointSampler(dihedral.action)
    assert sampler.of_length(rng, 50).length <= 1


def test_small_suite_passes_and_reports(tmp_path):
    cfg, parsed = resolve("flip_z", {"samples": 40, "shell_max": 3, "truncation": 3, "out": str(tmp_path)})
    result = run_suite(cfg, parsed)
    assert result.exit_code == 0, [t.claim for t in result.tallies if not t.passed]
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["status"] == "pass"
    assert {c["suite"] for c in summary["claims"]} == {"base", "full", "sym", "anti", "wreath"}


def test_finite_action_suite(tmp_path):
    cfg, parsed = resolve("cyclic_flip", {"samples": 30, "shell_max": 3, "truncation": 3, "out": str(tmp_path)})
    assert run_suite(cfg, parsed).exit_code == 0


def test_dihedral_suite(tmp_path):
    cfg, parsed = resolve("dihedral3", {"samples": 30, "shell_max": 3, "truncation": 3, "out": str(tmp_path)})
    result = run_suite(cfg, parsed)
    assert result.exit_code == 0
    assert all(s != "wreath" for _, s in jobs_of(cfg))


def test_free_group_suite(tmp_path):
    cfg, parsed = resolve("free2", {"samples": 30, "shell_max": 3, "truncation": 3, "gamma_ball": 1,
                                    "out": str(tmp_path)})
    assert run_suite(cfg, parsed).exit_code == 0


def test_resource_limit_reports_feasible_radius():
    cfg, parsed = resolve("z_on_z", {"shell_max": 9, "shell_budget": 500})
    with pytest.raises(ResourceLimit) as info:
        run_job(parsed, cfg, "shell-cover", "full")
    assert info.value.feasible < 9


def test_parallel_workers_match_serial(tmp_path):
    flags = {"samples": 20, "shell_max": 2, "truncation": 2, "variants": ("sym",)}
    cfg, parsed = resolve("z_on_z", {**flags, "out": str(tmp_path / "a")})
    run_suite(cfg, parsed)
    cfg, parsed = resolve("z_on_z", {**flags, "out": str(tmp_path / "b"), "workers": 2})
    run_suite(cfg, parsed)
    for name in ("summary.json", "records.jsonl"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
