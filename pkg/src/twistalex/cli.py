"""Command-line front end.

One logical value per line with stable ``key: value`` prefixes, so the
output diffs cleanly.  Exit code 0 means the computation ran (including
a ``NOT FIBERED`` verdict — that is a result, not an error); exit code 2
covers every failure, reported as a single line ``error: <Name>: ...``.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .errors import LimitExceeded, ParseError, TwistalexError
from .presentation import parse_presentation
from .rep import find_representations, parse_representation, render_representation
from .torsion import (
    check_column_independence,
    classical_alexander,
    fibered_obstruction,
    reidemeister_torsion,
    symmetry_check,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _build_parser() -> _Parser:
    parser = _Parser(prog="twistalex")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("torsion", help="torsion quotient for one representation")
    p.add_argument("presentation")
    p.add_argument("representation")
    p.add_argument("--column", help="generator whose column to remove")

    p = sub.add_parser("alexander", help="classical Alexander specialization")
    p.add_argument("presentation")

    p = sub.add_parser("fiber-check", help="torsion plus the monic obstruction")
    p.add_argument("presentation")
    p.add_argument("representation")

    p = sub.add_parser("find-reps", help="search SL(2, F_p) representations")
    p.add_argument("presentation")
    p.add_argument("--p", dest="prime", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--parabolic", action="store_true")
    p.add_argument("--trace", type=int, default=None)

    p = sub.add_parser("example", help="emit a builtin example file")
    p.add_argument("name")
    p.add_argument("--rep", type=int, default=None,
                   help="emit representation k instead of the presentation")

    p = sub.add_parser("check", help="column-independence and symmetry diagnostics")
    p.add_argument("presentation")
    p.add_argument("representation")
    return parser


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


def _parse_pres_file(path: str):
    try:
        return parse_presentation(_read(path))
    except ParseError as e:
        e.filename = path
        raise


def _parse_rep_file(path: str, generators):
    try:
        return parse_representation(_read(path), generators)
    except ParseError as e:
        e.filename = path
        raise


def _load_pair(args):
    pres = _parse_pres_file(args.presentation)
    rho = _parse_rep_file(args.representation, pres.generators)
    return pres, rho


def _print_torsion(result, generators, out):
    print(f"column: {generators[result.column]}", file=out)
    print(f"numerator: {result.numerator.render()}", file=out)
    print(f"denominator: {result.denominator.render()}", file=out)
    if result.reduced is not None:
        print(f"reduced: {result.reduced.render()}", file=out)
    else:
        print("reduced: (unreduced: no usable denominator)", file=out)
    print(f"is_polynomial: {'true' if result.is_polynomial else 'false'}", file=out)


def _cmd_torsion(args, out):
    pres, rho = _load_pair(args)
    column = pres.generator_index(args.column) if args.column else None
    result = reidemeister_torsion(pres, rho, column)
    _print_torsion(result, pres.generators, out)
    return 0


def _cmd_alexander(args, out):
    pres = _parse_pres_file(args.presentation)
    reduced = classical_alexander(pres)
    print(f"numerator: {reduced.numerator.render()}", file=out)
    print(f"denominator: {reduced.denominator.render()}", file=out)
    print(f"reduced: {reduced.render()}", file=out)
    return 0


def _cmd_fiber_check(args, out):
    pres, rho = _load_pair(args)
    result = reidemeister_torsion(pres, rho)
    _print_torsion(result, pres.generators, out)
    verdict = fibered_obstruction(result)
    if verdict.obstructed:
        print("verdict: NOT FIBERED", file=out)
        for reason in verdict.reasons:
            print(f"reason: {reason}", file=out)
    else:
        print("verdict: no obstruction", file=out)
    if verdict.note:
        print(f"note: {verdict.note}", file=out)
    return 0


def _cmd_find_reps(args, out):
    pres = _parse_pres_file(args.presentation)
    truncated = False
    try:
        reps = find_representations(pres, args.prime, limit=args.limit,
                                    parabolic=args.parabolic, trace=args.trace)
    except LimitExceeded as e:
        reps = e.found
        truncated = True
    print(f"# {len(reps)} representation(s)", file=out)
    for k, rho in enumerate(reps):
        print(f"# representation {k}", file=out)
        out.write(render_representation(rho, pres.generators))
    if truncated:
        print("# limit reached: more representations exist", file=out)
    return 0


def _cmd_example(args, out):
    ent = catalog.entry(args.name)
    if args.rep is None:
        out.write(ent.presentation_text)
    else:
        if not 0 <= args.rep < len(ent.representation_texts):
            raise KeyError(
                f"example {args.name!r} has representations 0.."
                f"{len(ent.representation_texts) - 1}")
        out.write(ent.representation_texts[args.rep])
    return 0


def _cmd_check(args, out):
    pres, rho = _load_pair(args)
    report = check_column_independence(pres, rho)
    usable = " ".join(pres.generators[j] for j in report.usable_columns)
    print(f"usable_columns: {usable}", file=out)
    for pair in report.pairs:
        left = pres.generators[pair.left]
        right = pres.generators[pair.right]
        sign = "-" if pair.sign < 0 else ""
        print(f"unit[{left},{right}]: {sign}t^{pair.shift}", file=out)
    result = reidemeister_torsion(pres, rho)
    sym = symmetry_check(result)
    if sym.symmetric:
        sign = "-" if sym.sign < 0 else "+"
        print(f"symmetry: symmetric shift={sym.shift} sign={sign}", file=out)
    else:
        print("symmetry: asymmetric", file=out)
    return 0


_COMMANDS = {
    "torsion": _cmd_torsion,
    "alexander": _cmd_alexander,
    "fiber-check": _cmd_fiber_check,
    "find-reps": _cmd_find_reps,
    "example": _cmd_example,
    "check": _cmd_check,
}


def run(argv, out=None, err=None) -> int:
    """Dispatch one command; returns the process exit code (0 or 2)."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code else 0
    try:
        return _COMMANDS[args.command](args, out)
    except ParseError as e:
        filename = getattr(e, "filename", "")
        print(f"error: {type(e).__name__}: {filename and filename + ':'}{e}", file=err)
        return 2
    except TwistalexError as e:
        print(f"error: {type(e).__name__}: {e}", file=err)
        return 2
    except (OSError, KeyError, ValueError) as e:
        msg = e.args[0] if e.args else e
        print(f"error: {type(e).__name__}: {msg}", file=err)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
