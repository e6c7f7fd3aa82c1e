"""``msetmap`` command line.

Exit status: 0 success, 1 usage or parse error, 2 evaluation error,
3 when ``audit --strict`` reports a violated claim.
"""

from __future__ import annotations

import argparse
import sys

from ..audit import AuditBounds, CATALOG, run_all
from ..audit.claims import get_claim
from ..errors import EvalError, MultisetError, ParseError, UnknownClaim
from .document import parse_document, render_document
from .expression import eval_expression

EXIT_OK, EXIT_USAGE, EXIT_EVAL, EXIT_VIOLATED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    try:
        return parse_document(_read(path))
    except ParseError as e:
        raise SystemExit(_fail(f"{path}:{e}", EXIT_USAGE))
    except OSError as e:
        raise SystemExit(_fail(str(e), EXIT_USAGE))


def _fail(message: str, code: int) -> int:
    print(f"msetmap: {message}", file=sys.stderr)
    return code


def cmd_eval(args) -> int:
    env = _load(args.document)
    for expr in args.expressions:
        try:
            print(eval_expression(env, expr))
        except ParseError as e:
            return _fail(f"in {expr!r}: {e}", EXIT_USAGE)
        except (EvalError, MultisetError) as e:
            return _fail(f"in {expr!r}: {e}", EXIT_EVAL)
    return EXIT_OK


def cmd_show(args) -> int:
    sys.stdout.write(render_document(_load(args.document)))
    return EXIT_OK


def cmd_claims(args) -> int:
    for c in CATALOG:
        print(f"{c.id}\t{c.statement}")
    return EXIT_OK


def cmd_audit(args) -> int:
    try:
        bounds = AuditBounds(
            max_universe=args.max_universe,
            max_bound=args.max_bound,
            random_trials=args.trials,
            seed=args.seed,
            random_universe=args.random_universe,
            random_bound=args.random_bound,
        )
    except ValueError as e:
        return _fail(str(e), EXIT_USAGE)
    try:
        for cid in args.claim or ():
            get_claim(cid)
    except UnknownClaim as e:
        return _fail(str(e), EXIT_USAGE)
    report = run_all(bounds, args.claim or None)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    if args.strict and report.violated:
        return EXIT_VIOLATED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="msetmap", description="Bounded multisets and multiset mappings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate expressions against a declaration document")
    p.add_argument("document", help="document path, or - for standard input")
    p.add_argument("expressions", nargs="+")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("show", help="parse a document and print it in canonical form")
    p.add_argument("document")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("claims", help="list audited claim ids")
    p.set_defaults(func=cmd_claims)

    p = sub.add_parser("audit", help="check every claim on enumerated and random instances")
    p.add_argument("--max-universe", type=int, default=3)
    p.add_argument("--max-bound", type=int, default=3)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-universe", type=int, default=5)
    p.add_argument("--random-bound", type=int, default=6)
    p.add_argument("--claim", action="append", metavar="ID", help="restrict to a claim (repeatable)")
    p.add_argument("--json", action="store_true", help="emit the structured report")
    p.add_argument("--strict", action="store_true", help="exit 3 if any claim is violated")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
