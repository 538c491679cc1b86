"""Command line interface.

Exit codes: 0 for success or a true verdict, 1 for a false verdict, 2 for
errors (bad flags, unreadable files, malformed documents). Results go to
stdout, diagnostics to stderr. Words are comma-separated letters, least
significant first: ``--word 0,1,1`` is the number 6 in base 2.
"""

from __future__ import annotations

import argparse
import sys

from . import document, oracle
from .reduction import coreachability_basis, minimise, reachability_basis, series_equal
from .regular import is_compatible_series, is_proper, minimise_regular, properise, sequence_equal
from .series import eval_sequence, eval_series, check_word, word_value
from . import linalg as la

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def parse_word(text: str, q: int):
    text = text.strip()
    if not text:
        return ()
    try:
        letters = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"malformed word {text!r}; expected comma-separated letters like 0,1,1")
    try:
        return check_word(letters, q)
    except ValueError as exc:
        raise CliError(str(exc))


def fmt_vector(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def fmt_word(b) -> str:
    return ",".join(map(str, b)) if b else "(empty)"


def _write(rep, out: str) -> None:
    document.save(rep, out or "-")


def cmd_eval_word(args) -> int:
    rep = document.load(args.file)
    print(eval_series(rep, parse_word(args.word, rep.q)))
    return EXIT_TRUE


def cmd_eval_n(args) -> int:
    rep = document.load(args.file)
    if args.n < 0:
        raise CliError("--n must be non-negative")
    print(eval_sequence(rep, args.n))
    return EXIT_TRUE


def cmd_minimise(args) -> int:
    rep = document.load(args.file)
    if args.as_sequence:
        if not is_proper(rep):
            print("warning: input not proper; properised first", file=sys.stderr)
        result = minimise_regular(rep)
    else:
        result = minimise(rep)
    print(f"dimension {rep.dim} -> {result.dim}", file=sys.stderr)
    _write(result, args.output)
    return EXIT_TRUE


def cmd_properise(args) -> int:
    _write(properise(document.load(args.file)), args.output)
    return EXIT_TRUE


def cmd_check_proper(args) -> int:
    rep = document.load(args.file)
    if is_proper(rep):
        print("proper: M(0)w = w")
        return EXIT_TRUE
    print("not proper: M(0)w != w")
    print(f"M(0)w = {fmt_vector(la.mat_vec(rep.matrices[0], rep.w))}")
    print(f"w     = {fmt_vector(rep.w)}")
    return EXIT_FALSE


def cmd_equiv(args) -> int:
    rep1, rep2 = document.load(args.file1), document.load(args.file2)
    if rep1.q != rep2.q:
        raise CliError(f"alphabet mismatch: q={rep1.q} vs q={rep2.q}")
    mode = "sequence" if args.as_sequence else "series"
    if args.brute_force is not None:
        if args.as_sequence:
            rep1, rep2 = properise(rep1), properise(rep2)
        diff = oracle.first_difference(rep1, rep2, args.brute_force)
        if diff is None:
            print(f"equal ({mode}, all words of length <= {args.brute_force})")
            return EXIT_TRUE
        print(f"differ ({mode}) at word {fmt_word(diff)}: "
              f"{eval_series(rep1, diff)} vs {eval_series(rep2, diff)}")
        return EXIT_FALSE
    same = sequence_equal(rep1, rep2) if args.as_sequence else series_equal(rep1, rep2)
    print(f"{'equal' if same else 'differ'} ({mode})")
    return EXIT_TRUE if same else EXIT_FALSE


def cmd_hankel_rank(args) -> int:
    rep = document.load(args.file)
    print(oracle.hankel_rank(rep, args.max_len, args.cap))
    return EXIT_TRUE


def cmd_info(args) -> int:
    rep = document.load(args.file)
    if rep.name:
        print(f"name: {rep.name}")
    print(f"q: {rep.q}")
    print(f"dimension: {rep.dim}")
    print(f"proper (M(0)w = w): {'yes' if is_proper(rep) else 'no'}")
    print(f"compatible series: {'yes' if is_compatible_series(rep) else 'no'}")
    print(f"minimal series dimension: {minimise(rep).dim}")
    print(f"minimal sequence dimension: {minimise_regular(rep).dim}")
    for label, closure in (("reachability", reachability_basis(rep)),
                           ("co-reachability", coreachability_basis(rep))):
        print(f"{label} dimension: {len(closure)}")
        for v, b in zip(closure.vectors, closure.witnesses):
            print(f"  word {fmt_word(b)} (val {word_value(b, rep.q)}): {fmt_vector(v)}")
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recseq",
        description="Exact linear representations of recognisable series and regular sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-word", help="evaluate the series at a word")
    p.add_argument("file")
    p.add_argument("--word", required=True, help="letters, least significant first, e.g. 0,1,1")
    p.set_defaults(func=cmd_eval_word)

    p = sub.add_parser("eval-n", help="evaluate the sequence at an integer")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_eval_n)

    p = sub.add_parser("minimise", help="write a minimal representation")
    p.add_argument("file")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--as-sequence", action="store_true",
                   help="minimise the regular sequence (properises improper input)")
    p.set_defaults(func=cmd_minimise)

    p = sub.add_parser("properise", help="write a proper representation of the same sequence")
    p.add_argument("file")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_properise)

    p = sub.add_parser("check-proper", help="check M(0)w = w")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_proper)

    p = sub.add_parser("equiv", help="decide equality of two series or sequences")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--as-sequence", action="store_true")
    p.add_argument("--brute-force", type=int, metavar="L",
                   help="compare by enumerating all words of length <= L instead")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("hankel-rank", help="rank of the truncated Hankel table")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CELL_CAP, help="maximum table cells")
    p.set_defaults(func=cmd_hankel_rank)

    p = sub.add_parser("info", help="dimensions, properness and spanning witnesses")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args)
    except (CliError, document.DocumentError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
