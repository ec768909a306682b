"""Command line: analyze a code over a recurrent set, draw egg-boxes, replay examples."""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import automata as au
from . import fgroup
from .errors import CapExceeded, InputError, NotStabilized, PreconditionError
from .examples import REGISTRY, load_code, load_set
from .monoid import egg_box_render, green, transition_monoid
from .shifts import load_shift

EXIT_OK, EXIT_INPUT, EXIT_UNSTABLE, EXIT_CAP = 0, 1, 2, 3


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _options(args) -> fgroup.Options:
    return fgroup.Options(max_factor_len=args.max_factor_len, monoid_cap=args.monoid_cap,
                          iso_cap=args.iso_cap, window=args.window)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_analyze(args) -> int:
    code = au.from_json_spec(_read_json(args.code))
    f = load_shift(_read_json(args.shift), seed=args.seedletter)
    report = fgroup.analyze(code, f, _options(args), equivalence=args.equivalence, classify=args.classify)
    print(_dump(report.as_dict()))
    return EXIT_OK


def cmd_eggbox(args) -> int:
    code = au.from_json_spec(_read_json(args.code))
    m = transition_monoid(au.star_automaton(code), args.monoid_cap)
    print(egg_box_render(m, green(m), args.format))
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.all or not args.name:
        names = list(REGISTRY)
    else:
        unknown = [n for n in args.name if n not in REGISTRY]
        if unknown:
            raise InputError(f"unknown example(s): {', '.join(unknown)}; known: {', '.join(REGISTRY)}")
        names = args.name
    opts = _options(args)
    failed = 0
    for name in names:
        ex = REGISTRY[name]
        t0 = time.perf_counter()
        report = fgroup.analyze(load_code(ex.code), load_set(ex.shift), opts, equivalence=ex.equivalence).as_dict()
        dt = time.perf_counter() - t0
        bad = []
        for e in ex.expectations:
            ok, got = e.check(report)
            if not ok:
                bad.append(f"{e.path}: expected {e.op} {e.value!r}, got {got!r} ({e.source})")
        failed += bool(bad)
        print(f"{'PASS' if not bad else 'FAIL'}  {name:<22} {len(ex.expectations)} checks  {dt:6.2f}s")
        for line in bad:
            print(f"      {line}")
    return EXIT_OK if not failed else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-factor-len", type=int, default=24)
    common.add_argument("--monoid-cap", type=int, default=100_000)
    common.add_argument("--iso-cap", type=int, default=20160)
    common.add_argument("--window", type=int, default=3)

    p = argparse.ArgumentParser(prog="bifixgroup", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="analyze Z over F, print a JSON report")
    a.add_argument("code", help="code file (automaton, words or regex JSON)")
    a.add_argument("shift", help="substitution or sofic graph JSON")
    a.add_argument("--seedletter", help="override the seed letter of a substitution")
    a.add_argument("--equivalence", action="store_true", help="also build and verify (f, alpha)")
    a.add_argument("--classify", type=int, metavar="N", help="classify F up to factor length N")
    a.set_defaults(run=cmd_analyze)

    e = sub.add_parser("eggbox", parents=[common], help="egg-box diagram of M(X*)")
    e.add_argument("code")
    fmt = e.add_mutually_exclusive_group()
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    e.set_defaults(run=cmd_eggbox, format="text")

    x = sub.add_parser("examples", parents=[common], help="replay bundled examples")
    x.add_argument("name", nargs="*")
    x.add_argument("--all", action="store_true")
    x.set_defaults(run=cmd_examples)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except NotStabilized as exc:
        print(f"not stabilized: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
