"""Command-line front end for the grammar compression pipeline.

Exit codes are a stable contract: 0 success, 1 usage error, 2 malformed
or unreadable input, 3 verification failure (a written grammar that
does not expand back to its input, or a cyclic grammar file).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .bisection import bisection_grammar
from .errors import CyclicGrammar, EmptyInput, GramzipError
from .grammar import (
    Grammar,
    dump_grammar,
    expand,
    grammar_from_parse,
    grammar_size,
    load_grammar,
    make_certificate,
    to_cnf,
)
from .oracle import smallest_grammar_size
from .parsing import dump_parse, parse_lz77
from .randaccess import (
    access,
    build_block_structure,
    dump_blocks,
    extract,
    load_blocks,
    ra_size_report,
)
from .refine import break_phrases
from .tape import run_tape_parser

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MALFORMED = 2
EXIT_VERIFY = 3

METHODS = ("best", "lz77cnf", "bisection")


class VerificationError(GramzipError):
    """A written artifact failed its self-check."""


class _Parser(argparse.ArgumentParser):
    """argparse flavour that exits 1 on usage problems, not 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def grammar_for(data: bytes, method: str) -> Grammar:
    """Build the grammar a compress method would write; ties favor lz77cnf."""
    if not data:
        raise EmptyInput("cannot compress an empty input")
    cnf = None
    if method in ("lz77cnf", "best"):
        cnf = to_cnf(grammar_from_parse(break_phrases(parse_lz77(data))))
        if method == "lz77cnf":
            return cnf
    bis = bisection_grammar(data)
    if method == "bisection":
        return bis
    assert cnf is not None
    return cnf if grammar_size(cnf) <= grammar_size(bis) else bis


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _read_text(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write(out: Optional[str], payload) -> None:
    if isinstance(payload, str):
        if out is None:
            sys.stdout.write(payload)
        else:
            with open(out, "w", encoding="ascii") as fh:
                fh.write(payload)
    else:
        if out is None:
            sys.stdout.buffer.write(payload)
        else:
            with open(out, "wb") as fh:
                fh.write(payload)


def _cmd_parse(args) -> int:
    data = _read_bytes(args.input)
    _write(args.output, dump_parse(parse_lz77(data)))
    return EXIT_OK


def _cmd_compress(args) -> int:
    data = _read_bytes(args.input)
    grammar = grammar_for(data, args.method)
    text = dump_grammar(grammar)
    _write(args.output, text)
    # post-write verification: reread what will be decompressed
    written = _read_text(args.output) if args.output else text
    reloaded, n = load_grammar(written)
    if expand(reloaded) != data or n != len(data):
        raise VerificationError("written grammar does not expand to the input")
    return EXIT_OK


def _cmd_decompress(args) -> int:
    grammar, n = load_grammar(_read_text(args.grammar))
    data = expand(grammar)  # raises CyclicGrammar on cycles
    if len(data) != n:
        raise GramzipError(f"grammar expands to {len(data)} bytes, header says {n}")
    _write(args.output, data)
    return EXIT_OK


def _cmd_stats(args) -> int:
    data = _read_bytes(args.input)
    if not data:
        raise EmptyInput("stats needs a non-empty input")
    cert = make_certificate(data)
    sys.stdout.write(
        f"lz77_phrases={cert.lz77_phrases}\n"
        f"broken_phrases={cert.broken_phrases}\n"
        f"cnf_size={cert.cnf_size}\n"
        f"bisection_size={cert.bisection_size}\n"
        f"best_size={cert.best_size}\n"
        f"ratio_upper_bound={float(cert.ratio_upper_bound):.3f}\n"
    )
    if args.figures:
        from .report import render_report_figures

        for path in render_report_figures([cert], args.figures):
            sys.stderr.write(f"wrote {path}\n")
    return EXIT_OK


def _cmd_ra_build(args) -> int:
    data = _read_bytes(args.input)
    bs = build_block_structure(data, base=args.base)
    _write(args.output, dump_blocks(bs))
    report = ra_size_report(bs)
    if args.report:
        for level, blen, count in report.per_level:
            sys.stdout.write(f"level={level} len={blen} retained={count}\n")
        sys.stdout.write(
            f"total_blocks={report.total_blocks}\n"
            f"pointers={report.pointer_count}\n"
            f"estimated_bits={report.estimated_bits}\n"
        )
    if args.figures:
        from .report import render_report_figures

        for path in render_report_figures([report], args.figures):
            sys.stderr.write(f"wrote {path}\n")
    return EXIT_OK


def _cmd_ra_access(args) -> int:
    bs = load_blocks(_read_text(args.rafile))
    if args.len is None:
        payload = bytes([access(bs, args.pos)])
    else:
        payload = extract(bs, args.pos, args.len)
    _write(args.output, payload)
    return EXIT_OK


def _cmd_oracle_smallest(args) -> int:
    data = _read_bytes(args.input)
    sys.stdout.write(f"smallest_grammar_size={smallest_grammar_size(data)}\n")
    return EXIT_OK


def _cmd_tape_run(args) -> int:
    data = _read_bytes(args.input)
    parse, stats = run_tape_parser(data)
    if args.output:
        _write(args.output, dump_parse(parse))
    sys.stdout.write(stats.lines())
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="gramzip",
        description="Grammar-based compression with verifiable size certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", help="write the LZ77 token stream of a file")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("compress", help="write a grammar file generating the input")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--method", choices=METHODS, default="best")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("decompress", help="expand a grammar file back to bytes")
    p.add_argument("grammar")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_decompress)

    p = sub.add_parser("stats", help="print the size certificate of an input")
    p.add_argument("input")
    p.add_argument("--figures", metavar="DIR",
                   help="also render report figures into DIR")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("ra-build", help="build the random-access block file")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--base", type=int, default=0,
                   help="block base (>= 2); 0 picks the default rule")
    p.add_argument("--report", action="store_true",
                   help="print per-level retention and size estimates")
    p.add_argument("--figures", metavar="DIR",
                   help="also render report figures into DIR")
    p.set_defaults(func=_cmd_ra_build)

    p = sub.add_parser("ra-access", help="read bytes through a block file")
    p.add_argument("rafile")
    p.add_argument("--pos", type=int, required=True)
    p.add_argument("--len", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_ra_access)

    p = sub.add_parser("oracle", help="reference oracles")
    osub = p.add_subparsers(dest="oracle_command", required=True,
                            parser_class=_Parser)
    po = osub.add_parser("smallest", help="exact smallest grammar size (n <= 8)")
    po.add_argument("input")
    po.set_defaults(func=_cmd_oracle_smallest)

    p = sub.add_parser("tape-run", help="run the parser through the tape harness")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="also write the token stream here")
    p.set_defaults(func=_cmd_tape_run)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (VerificationError, CyclicGrammar) as exc:
        sys.stderr.write(f"gramzip: {exc}\n")
        return EXIT_VERIFY
    except GramzipError as exc:
        sys.stderr.write(f"gramzip: {exc}\n")
        return EXIT_MALFORMED
    except OSError as exc:
        sys.stderr.write(f"gramzip: {exc}\n")
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
