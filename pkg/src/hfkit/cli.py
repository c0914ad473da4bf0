"""Command-line surface: REPL, batch evaluation, mewo files, and suites."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import EvalError, HfkitError, ParseError
from .mewos import mewo_from_json, mewo_from_text, mewo_to_dot, mewo_to_json, mewo_to_text
from .session import Session
from .suites import SUITE_NAMES, run_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hfkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    repl = sub.add_parser("repl", help="interactive statement evaluator")
    repl.add_argument("--max-numeral", type=int, default=1024)

    run = sub.add_parser("run", help="evaluate a statement file")
    run.add_argument("file")
    run.add_argument("--max-numeral", type=int, default=1024)

    mewo = sub.add_parser("mewo", help="load a mewo file and re-emit it")
    mewo.add_argument("file")
    mewo.add_argument("--format", choices=("text", "json", "dot"), default="text")

    check = sub.add_parser("check", help="run a property suite")
    check.add_argument("--suite", choices=SUITE_NAMES, required=True)
    check.add_argument("--seed", type=int, default=42)
    check.add_argument("--max-size", type=int, default=4)
    check.add_argument("--max-depth", type=int, default=4)
    check.add_argument("--format", choices=("text", "json"), default="json")
    return parser


def _repl(args) -> int:
    session = Session(numeral_bound=args.max_numeral)
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            sys.stderr.write("hfkit> ")
            sys.stderr.flush()
        line = sys.stdin.readline()
        if not line:
            return 0
        try:
            for out in session.run_program(line):
                print(out)
        except (ParseError, EvalError, HfkitError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            if not interactive:
                return 1


def _run_file(args) -> int:
    session = Session(numeral_bound=args.max_numeral)
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    try:
        for out in session.run_program(text):
            print(out)
    except (ParseError, EvalError, HfkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _mewo_file(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read().strip()
    try:
        if text.startswith("{"):
            X = mewo_from_json(json.loads(text))
        else:
            X = mewo_from_text(text)
    except (ValueError, HfkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "text":
        print(mewo_to_text(X))
    elif args.format == "json":
        print(json.dumps(mewo_to_json(X), separators=(",", ":")))
    else:
        print(mewo_to_dot(X))
    return 0


def _check(args) -> int:
    report = run_suite(
        args.suite, seed=args.seed, max_size=args.max_size, max_depth=args.max_depth
    )
    if args.format == "json":
        print(json.dumps(report, indent=2, default=str))
    else:
        print(f"suite {report['suite']}: {report['cases']} cases, "
              f"{len(report['failures'])} failures (seed {report['seed']})")
        for failure in report["failures"]:
            print(f"  FAIL {failure['name']} [{failure['input']}]: "
                  f"expected {failure['expected']}, got {failure['got']}")
    return 0 if not report["failures"] else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "repl":
        return _repl(args)
    if args.command == "run":
        return _run_file(args)
    if args.command == "mewo":
        return _mewo_file(args)
    return _check(args)


if __name__ == "__main__":
    raise SystemExit(main())
