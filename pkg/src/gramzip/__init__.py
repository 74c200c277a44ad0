"""Grammar-based compression toolkit.

Builds, from any byte string, a small context-free grammar generating
exactly that string (greedy LZ77 parsing, phrase refinement, CNF
conversion, and dyadic bisection with dedup), plus a leveled block
structure for random access into the compressed string and a per-input
certificate bounding the achieved approximation ratio.
"""

from .bisection import bisection_grammar
from .errors import (
    AlignmentError,
    BadBase,
    CyclicGrammar,
    EmptyInput,
    GramzipError,
    MalformedBlocks,
    MalformedGrammar,
    MalformedParse,
    OutOfRange,
    ShapeError,
    TooLarge,
)
from .grammar import (
    Certificate,
    Grammar,
    dump_grammar,
    expand,
    grammar_from_parse,
    grammar_size,
    is_cnf,
    load_grammar,
    make_certificate,
    to_cnf,
)
from .oracle import first_occurrence, lcp_bounded, smallest_grammar_size
from .parsing import (
    Copy,
    Literal,
    decode_parse,
    dump_parse,
    load_parse,
    parse_lz77,
    phrase_count,
    render_tokens,
)
from .randaccess import (
    BlockStructure,
    access,
    build_block_structure,
    default_base,
    dump_blocks,
    extract,
    load_blocks,
    ra_size_report,
)
from .refine import break_phrases, check_alignment
from .tape import RegisterFile, Tape, TapeStats, run_tape_parser

__version__ = "0.1.0"

__all__ = [
    "AlignmentError",
    "BadBase",
    "BlockStructure",
    "Certificate",
    "Copy",
    "CyclicGrammar",
    "EmptyInput",
    "Grammar",
    "GramzipError",
    "Literal",
    "MalformedBlocks",
    "MalformedGrammar",
    "MalformedParse",
    "OutOfRange",
    "RegisterFile",
    "ShapeError",
    "Tape",
    "TapeStats",
    "TooLarge",
    "access",
    "bisection_grammar",
    "break_phrases",
    "build_block_structure",
    "check_alignment",
    "decode_parse",
    "default_base",
    "dump_blocks",
    "dump_grammar",
    "dump_parse",
    "expand",
    "extract",
    "first_occurrence",
    "grammar_from_parse",
    "grammar_size",
    "is_cnf",
    "lcp_bounded",
    "load_blocks",
    "load_grammar",
    "load_parse",
    "make_certificate",
    "parse_lz77",
    "phrase_count",
    "ra_size_report",
    "render_tokens",
    "run_tape_parser",
    "smallest_grammar_size",
    "to_cnf",
]
