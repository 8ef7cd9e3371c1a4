"""Claim registry, suite configuration and the suite runner.

A claim is a function ``fn(ctx, tally)`` that draws its instances from
``ctx`` (deterministic per claim and suite) and records every comparison in
``tally``.  Suites are ``base`` (action-level laws, always run), the three
word variants and ``wreath``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import cached_property
from pathlib import Path
from typing import Callable

from .config import DEFAULTS, VARIANTS, ConfigError, ParsedConfig, env_settings, parse_config_text, read_config_text
from .fock import FockSpace
from .records import ClaimTally, write_reports
from .sampling import StratifiedSampler, WreathSampler, stream
from .words import Semigroup
from .wreath import FreeWreath

WORD_VARIANTS = ("full", "sym", "anti")
SHELL_BUDGET = 400_000
FOCK_LETTERS = 6


class ResourceLimit(RuntimeError):
    """An enumeration would exceed its budget; ``feasible`` is the largest safe size."""

    def __init__(self, what: str, requested: int, feasible: int):
        super().__init__(f"{what} {requested} exceeds the enumeration budget; feasible limit is {feasible}")
        self.what = what
        self.requested = requested
        self.feasible = feasible


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    suites: tuple[str, ...]
    fn: Callable
    relation: str = "<="


REGISTRY: dict[str, Claim] = {}


def claim(id: str, anchor: str, suites, relation: str = "<="):
    suites = (suites,) if isinstance(suites, str) else tuple(suites)

    def deco(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate claim id {id!r}")
        REGISTRY[id] = Claim(id, anchor, suites, fn, relation)
        return fn

    return deco


def registered() -> list[Claim]:
    from . import checks  # noqa: F401  (registers the claims)

    return [REGISTRY[k] for k in sorted(REGISTRY)]


@dataclass
class SuiteConfig:
    config: str = "z_on_z"
    variants: tuple[str, ...] = VARIANTS
    truncation: int = DEFAULTS["truncation"]
    gamma_ball: int = DEFAULTS["gamma_ball"]
    samples: int = DEFAULTS["samples"]
    shell_max: int = DEFAULTS["shell_max"]
    seed: int = DEFAULTS["seed"]
    out: str = "fockbound-report"
    workers: int = 1
    fock_letters: int = FOCK_LETTERS
    shell_budget: int = SHELL_BUDGET
    claims: tuple[str, ...] = ()

    def validate(self) -> None:
        for key in ("truncation", "gamma_ball", "samples", "shell_max", "fock_letters", "shell_budget"):
            v = getattr(self, key)
            if not isinstance(v, int) or v <= 0:
                raise ConfigError(f"{key} must be a positive integer, got {v!r}")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        bad = [v for v in self.variants if v not in VARIANTS]
        if bad or not self.variants:
            raise ConfigError(f"variants must be drawn from {', '.join(VARIANTS)}")


def resolve(config: str, flags: dict, environ=None) -> tuple[SuiteConfig, ParsedConfig]:
    """Merge settings: flags over the config file over ``FOCKBOUND_*`` over defaults."""
    text, source = read_config_text(config)
    parsed = parse_config_text(text, source)
    merged = dict(DEFAULTS)
    merged.update(env_settings(environ))
    merged.update(parsed.settings)
    merged.update({k: v for k, v in flags.items() if v is not None})
    merged["variants"] = tuple(merged["variants"])
    merged["claims"] = tuple(merged.get("claims") or ())
    known = {f for f in SuiteConfig.__dataclass_fields__}
    cfg = SuiteConfig(config=config, **{k: v for k, v in merged.items() if k in known and k != "config"})
    cfg.validate()
    return cfg, parsed


@dataclass
class Context:
    parsed: ParsedConfig
    cfg: SuiteConfig
    suite: str

    @property
    def action(self):
        return self.parsed.action

    @property
    def group(self):
        return self.parsed.action.group

    @property
    def variant(self) -> str:
        return self.suite

    def rng(self, claim_id: str, *extra):
        return stream(self.cfg.seed, self.suite, claim_id, *extra)

    @cached_property
    def sg(self) -> Semigroup:
        return Semigroup(self.action, self.suite if self.suite in WORD_VARIANTS else "full")

    @cached_property
    def fock(self) -> FockSpace:
        return FockSpace(self.action, self.sg.variant, self.cfg.truncation)

    @cached_property
    def letters(self):
        """Base points labelling Fock operators: the smallest ball with enough points, capped."""
        want = self.cfg.fock_letters
        r = 1
        while len(self.action.ball(r)) < want and r < 6:
            if len(self.action.ball(r + 1)) == len(self.action.ball(r)):
                break
            r += 1
        return tuple(sorted(self.action.ball(r), key=lambda p: p.key)[:want])

    @cached_property
    def sampler(self) -> StratifiedSampler:
        return StratifiedSampler(self.sg, max_degree=6, max_l1=12, gamma_radius=self.cfg.gamma_ball)

    @cached_property
    def fw(self) -> FreeWreath:
        return FreeWreath(self.action, self.parsed.delta)

    @cached_property
    def wsampler(self) -> WreathSampler:
        return WreathSampler(self.fw, index_radius=3, letter_radius=2, gamma_radius=self.cfg.gamma_ball)

    def gamma_ball(self, radius: int | None = None):
        return self.group.ball(self.cfg.gamma_ball if radius is None else radius)

    def capped_shell(self, radius: int, gamma_radius: int | None = None, exact: bool = True):
        """Stream an exact semigroup shell, refusing to exceed the configured budget."""
        from .words import ShellOverflow

        gr = self.cfg.gamma_ball if gamma_radius is None else gamma_radius
        try:
            yield from self.sg.shell(radius, gr, exact=exact, limit=self.cfg.shell_budget)
        except ShellOverflow:
            raise ResourceLimit("shell radius", radius, radius - 1) from None


def suites_of(cfg: SuiteConfig) -> list[str]:
    return ["base"] + [v for v in VARIANTS if v in cfg.variants]


def jobs_of(cfg: SuiteConfig) -> list[tuple[str, str]]:
    wanted = set(cfg.claims)
    out = []
    for c in registered():
        if wanted and c.id not in wanted:
            continue
        for s in suites_of(cfg):
            if s in c.suites:
                out.append((c.id, s))
    return out


def run_job(parsed: ParsedConfig, cfg: SuiteConfig, claim_id: str, suite: str) -> ClaimTally:
    c = REGISTRY[claim_id]
    tally = ClaimTally(claim_id, suite, c.relation)
    c.fn(Context(parsed, cfg, suite), tally)
    return tally


def _run_job_remote(config_text: str, source: str, cfg: SuiteConfig, claim_id: str, suite: str) -> ClaimTally:
    registered()
    return run_job(parse_config_text(config_text, source), cfg, claim_id, suite)


@dataclass
class SuiteResult:
    summary: dict
    tallies: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["total_violations"] == 0 else 1


def run_suite(cfg: SuiteConfig, parsed: ParsedConfig | None = None, progress=None) -> SuiteResult:
    """Run every registered claim for the selected suites and write the reports."""
    cfg.validate()
    text, source = read_config_text(cfg.config)
    if parsed is None:
        parsed = parse_config_text(text, source)
    jobs = jobs_of(cfg)
    start = time.perf_counter()
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_run_job_remote, text, source, cfg, cid, s) for cid, s in jobs]
            tallies = [f.result() for f in futures]
    else:
        tallies = []
        for cid, s in jobs:
            t0 = time.perf_counter()
            tallies.append(run_job(parsed, cfg, cid, s))
            if progress is not None:
                progress(cid, s, tallies[-1], time.perf_counter() - t0)
    header = {
        "config": parsed.source,
        "action": parsed.action.name,
        "seed": cfg.seed,
        "samples": cfg.samples,
        "shell_max": cfg.shell_max,
        "truncation": cfg.truncation,
        "gamma_ball": cfg.gamma_ball,
        "variants": list(cfg.variants),
    }
    summary = write_reports(Path(cfg.out), header, [(t, REGISTRY[t.claim].anchor) for t in tallies])
    return SuiteResult(summary, tallies, time.perf_counter() - start)


def with_overrides(cfg: SuiteConfig, **kw) -> SuiteConfig:
    return replace(cfg, **kw)
