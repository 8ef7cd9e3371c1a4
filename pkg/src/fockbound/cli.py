"""Command line interface: ``fockbound verify | list-claims | export-operator``."""

from __future__ import annotations

import argparse
import sys

from .config import VARIANTS, ConfigError
from .harness import ResourceLimit, registered, resolve, run_suite

EPILOG = """\
Settings are merged as: command-line flags > config file (suite.* keys) >
environment (FOCKBOUND_SAMPLES, FOCKBOUND_SHELL_MAX, FOCKBOUND_SEED,
FOCKBOUND_TRUNCATION, FOCKBOUND_GAMMA_BALL, FOCKBOUND_VARIANTS) > defaults.
"""


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fockbound", description=__doc__, epilog=EPILOG,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and write reports", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    v.add_argument("--suite", action="append", choices=VARIANTS + ("all",),
                   help="suite to run (repeatable; default: the config's variants)")
    v.add_argument("--config", default="z_on_z", help="config file or built-in name (default: z_on_z)")
    v.add_argument("--samples", type=int)
    v.add_argument("--shell-max", type=int, dest="shell_max")
    v.add_argument("--seed", type=int)
    v.add_argument("--truncation", type=int)
    v.add_argument("--gamma-ball", type=int, dest="gamma_ball")
    v.add_argument("--out", default="fockbound-report", help="report directory")
    v.add_argument("--workers", type=_positive, default=1, help="worker processes (claims run in parallel)")
    v.add_argument("--claim", action="append", dest="claims", help="restrict to a claim id (repeatable)")
    v.add_argument("--shell-budget", type=int, dest="shell_budget",
                   help="largest number of points one exact shell may enumerate (default 400000)")
    v.add_argument("--quiet", action="store_true")

    sub.add_parser("list-claims", help="print claim ids, suites and anchors")

    e = sub.add_parser("export-operator", help="print a truncated creation operator in exact text form")
    e.add_argument("--label", required=True, help="word label, e.g. '0/a' or '0/1,0/a' (multisets: '0/a:2')")
    e.add_argument("--variant", required=True, choices=("full", "sym", "anti"))
    e.add_argument("--truncation", type=int, required=True)
    e.add_argument("--gamma-ball", type=int, default=1, dest="gamma_ball",
                   help="basis letters are the points of length <= R (default 1)")
    e.add_argument("--side", choices=("left", "right"), default="left")
    e.add_argument("--adjoint", action="store_true", help="export the annihilation operator instead")
    e.add_argument("--config", default="z_on_z")
    e.add_argument("--output", help="write to this file instead of stdout")
    return p


def cmd_verify(args) -> int:
    flags = {
        "samples": args.samples,
        "shell_max": args.shell_max,
        "seed": args.seed,
        "truncation": args.truncation,
        "gamma_ball": args.gamma_ball,
        "out": args.out,
        "workers": args.workers,
        "claims": tuple(args.claims or ()),
        "shell_budget": args.shell_budget,
    }
    if args.suite and "all" not in args.suite:
        flags["variants"] = tuple(dict.fromkeys(args.suite))
    elif args.suite:
        flags["variants"] = VARIANTS
    cfg, parsed = resolve(args.config, flags)
    if args.claims:
        known = {c.id for c in registered()}
        unknown = [c for c in args.claims if c not in known]
        if unknown:
            raise ConfigError(f"unknown claim id(s): {', '.join(unknown)}")

    def progress(cid, suite, tally, secs):
        if not args.quiet:
            mark = "ok  " if tally.passed else "FAIL"
            print(f"{mark} {suite:6s} {cid:34s} checked={tally.checked:<8d} "
                  f"violations={tally.violation_count:<4d} {secs:6.2f}s", flush=True)

    result = run_suite(cfg, parsed, progress=progress)
    s = result.summary
    print(f"{s['status']}: {len(s['claims'])} claim runs, {s['total_checked']} checks, "
          f"{s['total_violations']} violations; reports in {cfg.out}")
    return result.exit_code


def cmd_list_claims() -> int:
    rows = registered()
    width = max(len(c.id) for c in rows)
    for c in rows:
        print(f"{c.id:{width}s}  {','.join(c.suites):16s}  {c.anchor}")
    print(f"{len(rows)} claims")
    return 0


def cmd_export(args) -> int:
    from .config import load_config
    from .fock import FockSpace
    from .matrix_io import export_text

    if args.truncation < 1:
        raise ConfigError(f"truncation must be a positive integer, got {args.truncation}")
    parsed = load_config(args.config)
    fock = FockSpace(parsed.action, args.variant, args.truncation)
    label = fock.sg.parse_word(args.label)
    if fock.degree(label) == 0:
        raise ConfigError("the label must contain at least one letter")
    letters = set(parsed.action.ball(args.gamma_ball)) | set(fock.sg.letters(label))
    basis = fock.basis(sorted(letters))
    op = fock.creation(label, args.side)
    if args.adjoint:
        op = op.adjoint()
    name = ("r" if args.side == "right" else "l") + f"({fock.sg.format_word(label)})" + ("*" if args.adjoint else "")
    text = export_text(fock, op, basis, name)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "list-claims":
            return cmd_list_claims()
        return cmd_export(args)
    except ResourceLimit as exc:
        print(f"fockbound: resource limit: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, ValueError) as exc:
        print(f"fockbound: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
