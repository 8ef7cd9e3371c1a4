"""Declarative key-value configuration for actions and suite settings.

Grammar (one ``key = value`` per line, ``#`` starts a comment)::

    name               = free text
    group              = free <rank> | free-abelian <rank> | finite
    group.table        = row ; row ; ...        (finite only, rows of element indices)
    group.generators   = <index> <index> ...     (finite only)
    orbits             = <count>                 (default 1)
    stabilizer.<k>     = <word>, <word>, ...     (generators of the stabilizer of orbit k)
    involution.pairing = <p0> <p1> ...           (orbit k is sent to orbit p_k; default identity)
    involution.shift.<k> = <word>                (I(g r_k) = g c_k r_{p_k}; default identity)
    weight.<k>         = <positive rational>     (metadata tag, e.g. 1/2)
    wreath.delta       = free <rank> | free-abelian <rank> | finite
    wreath.delta.table / wreath.delta.generators (as for group, when finite)
    suite.samples, suite.shell_max, suite.seed, suite.truncation, suite.gamma_ball
    suite.variants     = full sym anti wreath

Words use generator letters ``a b c d f ...`` with optional integer exponents
(``a3b-1``); ``1`` is the identity.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .actions import Action, ActionError
from .groups import Group, GroupError, parse_group_spec

ENV_PREFIX = "FOCKBOUND_"
SUITE_KEYS = ("samples", "shell_max", "seed", "truncation", "gamma_ball", "variants")
VARIANTS = ("full", "sym", "anti", "wreath")

DEFAULTS = {
    "samples": 2000,
    "shell_max": 6,
    "seed": 0,
    "truncation": 4,
    "gamma_ball": 2,
    "variants": VARIANTS,
}


class ConfigError(ValueError):
    pass


@dataclass
class ParsedConfig:
    action: Action
    delta: Group
    settings: dict = field(default_factory=dict)
    source: str = "<string>"


def _parse_table(text: str, line: int) -> list[list[int]]:
    try:
        return [[int(v) for v in row.split()] for row in text.split(";") if row.strip()]
    except ValueError:
        raise ConfigError(f"line {line}: table entries must be integers") from None


def _parse_ints(text: str, line: int, what: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise ConfigError(f"line {line}: {what} must be integers") from None


def _suite_value(key: str, value: str, line: int):
    if key == "variants":
        names = value.replace(",", " ").split()
        bad = [v for v in names if v not in VARIANTS]
        if bad or not names:
            raise ConfigError(f"line {line}: unknown variant(s) {bad}; choose from {VARIANTS}")
        return tuple(names)
    try:
        n = int(value)
    except ValueError:
        raise ConfigError(f"line {line}: suite.{key} must be an integer, got {value!r}") from None
    return n


def parse_config_text(text: str, source: str = "<string>") -> ParsedConfig:
    raw: dict[str, tuple[str, int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{source}: line {lineno}: expected 'key = value'")
        key, value = key.strip(), value.strip()
        if not key:
            raise ConfigError(f"{source}: line {lineno}: empty key")
        if key in raw:
            raise ConfigError(f"{source}: line {lineno}: duplicate key {key!r}")
        raw[key] = (value, lineno)

    def take(key: str, default=None):
        if key in raw:
            return raw.pop(key)
        return (default, 0)

    try:
        return _build(raw, take, source)
    except (GroupError, ActionError) as exc:
        raise ConfigError(f"{source}: {exc}") from None


def _build(raw, take, source) -> ParsedConfig:
    name, _ = take("name", "")
    gspec, gline = take("group")
    if gspec is None:
        raise ConfigError(f"{source}: missing required key 'group'")
    table, tline = take("group.table")
    gens, gnline = take("group.generators")
    try:
        group = parse_group_spec(
            gspec,
            table=_parse_table(table, tline) if table else None,
            generators=_parse_ints(gens, gnline, "generators") if gens else None,
        )
    except GroupError as exc:
        raise ConfigError(f"{source}: line {gline}: {exc}") from None

    orbits_text, oline = take("orbits", "1")
    try:
        orbits = int(orbits_text)
    except ValueError:
        raise ConfigError(f"{source}: line {oline}: orbits must be an integer") from None
    if orbits < 1:
        raise ConfigError(f"{source}: line {oline}: orbits must be positive")

    def word_list(text: str, line: int):
        try:
            return [group.parse(w) for w in text.split(",") if w.strip()]
        except GroupError as exc:
            raise ConfigError(f"{source}: line {line}: {exc}") from None

    stabilizers = []
    shifts = []
    weights = []
    for k in range(orbits):
        text, line = take(f"stabilizer.{k}", "")
        stabilizers.append(word_list(text, line))
        text, line = take(f"involution.shift.{k}", "1")
        w = word_list(text, line)
        if len(w) > 1:
            raise ConfigError(f"{source}: line {line}: involution shift is a single word")
        shifts.append(w[0] if w else group.identity())
        text, line = take(f"weight.{k}")
        if text is None:
            weights.append(None)
        else:
            try:
                weights.append(Fraction(text))
            except (ValueError, ZeroDivisionError):
                raise ConfigError(f"{source}: line {line}: weight must be a rational") from None
    pairing_text, pline = take("involution.pairing")
    pairing = _parse_ints(pairing_text, pline, "pairing") if pairing_text else None

    dspec, dline = take("wreath.delta", "free 1")
    dtable, dtline = take("wreath.delta.table")
    dgens, dgline = take("wreath.delta.generators")
    try:
        delta = parse_group_spec(
            dspec,
            table=_parse_table(dtable, dtline) if dtable else None,
            generators=_parse_ints(dgens, dgline, "generators") if dgens else None,
        )
    except GroupError as exc:
        raise ConfigError(f"{source}: line {dline}: {exc}") from None

    settings = {}
    for key in SUITE_KEYS:
        value, line = take(f"suite.{key}")
        if value is not None:
            settings[key] = _suite_value(key, value, line)

    for key, (_, line) in sorted(raw.items(), key=lambda kv: kv[1][1]):
        raise ConfigError(f"{source}: line {line}: unknown key {key!r}")

    try:
        action = Action(
            group,
            orbits=orbits,
            stabilizers=stabilizers,
            pairing=pairing,
            involution_shifts=shifts,
            weights=weights,
            name=name,
        )
    except ActionError as exc:
        raise ConfigError(f"{source}: {exc}") from None
    return ParsedConfig(action=action, delta=delta, settings=settings, source=source)


def builtin_names() -> list[str]:
    root = resources.files("fockbound") / "configs"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".cfg"))


def read_config_text(spec: str) -> tuple[str, str]:
    """Return (text, source) for a file path or a built-in config name."""
    path = Path(spec)
    if path.is_file():
        return path.read_text(encoding="utf-8"), str(path)
    root = resources.files("fockbound") / "configs"
    candidate = root / f"{spec}.cfg"
    if candidate.is_file():
        return candidate.read_text(encoding="utf-8"), f"builtin:{spec}"
    raise ConfigError(
        f"config {spec!r} is neither a file nor a built-in ({', '.join(builtin_names())})"
    )


def load_config(spec: str) -> ParsedConfig:
    text, source = read_config_text(spec)
    return parse_config_text(text, source)


def env_settings(environ=None) -> dict:
    """Suite settings taken from ``FOCKBOUND_*`` environment variables."""
    environ = os.environ if environ is None else environ
    out = {}
    for key in SUITE_KEYS:
        value = environ.get(ENV_PREFIX + key.upper())
        if value is not None and value.strip():
            try:
                out[key] = _suite_value(key, value.strip(), 0)
            except ConfigError as exc:
                raise ConfigError(f"environment {ENV_PREFIX + key.upper()}: {exc}") from None
    return out
