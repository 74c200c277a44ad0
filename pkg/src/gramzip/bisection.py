"""Grammar construction by recursive dyadic splitting with dedup.

A block of one byte gets a terminal rule.  A longer block splits into a
left part whose length is the largest power of two strictly below the
block length, plus the remainder (so powers of two split in half).
Nonterminals are interned by their expansion, so any two blocks with
equal content share one nonterminal and the rules below it.
"""

from __future__ import annotations

from typing import Dict, List

from .errors import EmptyInput
from .grammar import Grammar, Rule


def _split_point(length: int) -> int:
    """Largest power of two strictly less than `length`."""
    return 1 << ((length - 1).bit_length() - 1)


def bisection_grammar(text: bytes) -> Grammar:
    """CNF grammar generating exactly `text`, deduplicated by expansion.

    Recursion depth is logarithmic: both split parts are at most half
    the block length.
    """
    if not text:
        raise EmptyInput("cannot build a grammar for the empty string")
    rules: List[Rule] = []
    interned: Dict[bytes, int] = {}

    def nt_for(segment: bytes) -> int:
        i = interned.get(segment)
        if i is not None:
            return i
        i = len(rules)
        interned[segment] = i
        rules.append(b"")  # reserved; filled below
        if len(segment) == 1:
            rules[i] = segment
        else:
            p = _split_point(len(segment))
            rules[i] = (nt_for(segment[:p]), nt_for(segment[p:]))
        return i

    nt_for(text)
    return Grammar(start=0, rules=tuple(rules))
