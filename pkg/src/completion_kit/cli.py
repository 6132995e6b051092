"""Command-line front end.

Exit codes: 0 success, 1 a check failed (or polynomial not in the ideal),
2 usage/input error, 3 no integer roots.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections.abc import Sequence

from . import catalog
from .completion import NoIntegerRootsError, NotUnimodularError, complete_row
from .linalg import PolyMatrix, determinant
from .parse import ParseError, identifiers, poly_parse
from .poly import RingSpec, poly_format
from .ringmaps import in_determinantal_ideal, segre_context

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NO_ROOTS = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _color(text: str, code: str) -> str:
    if os.environ.get("COMPLETION_KIT_COLOR") == "0" or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_verify(args) -> int:
    try:
        reports = catalog.verify(args.claim)
    except KeyError:
        print(f"unknown claim id: {args.claim!r}", file=sys.stderr)
        print("known ids: all, " + ", ".join(catalog.CLAIMS), file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        payload = [r.to_json() for r in reports]
        _emit_json(payload[0] if len(payload) == 1 and args.claim != "all" else payload)
    else:
        for r in reports:
            tag = _color("PASS", "32") if r.passed else _color("FAIL", "31")
            line = f"{tag} {r.claim_id}"
            if not r.passed:
                line += f" (residual has {r.residual_terms} terms)"
            print(line)
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} checks passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_complete(args) -> int:
    start = time.perf_counter()
    row = [args.a, args.b, args.c]
    try:
        result = complete_row(row)
    except NotUnimodularError as exc:
        if args.json:
            _emit_json({"row": row, "error": "not unimodular"})
        print(f"not unimodular: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoIntegerRootsError as exc:
        if args.json:
            _emit_json({"row": row, "error": "no integer roots"})
        print(str(exc), file=sys.stderr)
        return EXIT_NO_ROOTS
    elapsed = time.perf_counter() - start
    cert = result.certificate
    if args.json:
        _emit_json(
            {
                "row": row,
                "matrix": [list(r) for r in result.matrix],
                "certificate": cert.to_json(),
                "elapsed_ms": round(elapsed * 1000, 3),
            }
        )
    else:
        for r in result.matrix:
            print(" ".join(str(e) for e in r))
        print("det = 1")
        print(
            f"certificate: alpha={cert.alpha} beta={cert.beta} "
            f"s,t,u,v={','.join(map(str, cert.stuv))} w,x,y,z={','.join(map(str, cert.wxyz))}"
        )
    return EXIT_OK


def _split_names(values: Sequence[str]) -> list[str]:
    return [n for v in values for n in v.replace(",", " ").split()]


def cmd_member(args) -> int:
    try:
        ctx = segre_context(_split_names(args.aux))
        p = poly_parse(args.poly, ctx.source)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    member = in_determinantal_ideal(ctx, p)
    if args.json:
        _emit_json({"polynomial": poly_format(p), "member": member})
    else:
        print("IN (ad-bc)" if member else "NOT IN (ad-bc)")
    return EXIT_OK if member else EXIT_FAIL


def cmd_det(args) -> int:
    try:
        rows = json.loads(sys.stdin.read() if args.matrix == "-" else args.matrix)
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise ValueError("matrix must be a JSON array of arrays")
        cells = [str(e) for r in rows for e in r]
        if args.ring:
            names = _split_names([args.ring])
        else:
            names = list(dict.fromkeys(n for cell in cells for n in identifiers(cell)))
        ring = RingSpec(names or ["x"])
        m = PolyMatrix.from_rows(ring, [[poly_parse(str(e), ring) for e in r] for r in rows])
        result = determinant(m)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _emit_json({"ring": list(ring.variables), "determinant": poly_format(result)})
    else:
        print(poly_format(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = _Parser(prog="completion-kit", parents=[common],
                     description="Exact determinantal identities and unimodular row completion.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="run catalog checks")
    p.add_argument("claim", nargs="?", default="all", help="claim id, group id, or 'all'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complete", parents=[common], help="complete an integer row (a, b, c)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("member", parents=[common], help="test membership in (ad-bc)")
    p.add_argument("poly", help="expression over a,b,c,d and any --aux variables")
    p.add_argument("--aux", nargs="*", default=[], help="extra variable names")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("det", parents=[common], help="determinant of a JSON matrix of expressions")
    p.add_argument("matrix", help='e.g. \'[["a","b"],["c","d"]]\', or - for stdin')
    p.add_argument("--ring", help="comma-separated variable order (default: order of appearance)")
    p.set_defaults(func=cmd_det)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
