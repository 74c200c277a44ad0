"""Phrase breaking: align every copy source with whole phrases.

A raw LZ77 parse cannot be read as a grammar because a copy's source
range may start or end in the middle of an earlier phrase.  Inserting
extra breaks fixes that: afterwards every phrase is a single byte or a
concatenation of complete, consecutive, earlier phrases, at the cost of
at most squaring the phrase count.

The break set is grown right to left.  For each copy phrase that still
has length >= 2 after splitting, its source start and one-past-source-
end must be breaks; each newly inserted break landing strictly inside
an earlier copy region is mapped back through that copy immediately
(and recursively), which terminates because every mapped position is
strictly smaller than the break that caused it.  Length-1 fragments
become literals, so they impose no alignment of their own.
"""

from __future__ import annotations

import bisect
from typing import List

from .errors import MalformedParse
from .parsing import Copy, Literal, Parse, decode_parse, phrase_starts, token_length


def break_phrases(parse: Parse) -> Parse:
    """Insert breaks until every surviving copy spans whole source phrases.

    The decoded text is unchanged; the result passes check_alignment.
    """
    text = decode_parse(parse)  # also validates the input parse
    n = len(text)
    starts = phrase_starts(parse)

    breaks = set(starts)
    breaks.add(n + 1)
    ordered = sorted(breaks)

    def insert(p: int) -> None:
        bisect.insort(ordered, p)
        breaks.add(p)

    def chase(p: int) -> None:
        # map p back through enclosing copies until it hits a break
        while p not in breaks:
            insert(p)
            k = bisect.bisect_right(starts, p) - 1
            tok = parse[k]
            if isinstance(tok, Literal):
                raise MalformedParse("break landed inside a literal")
            p = tok.source + (p - starts[k])

    copies = [
        (starts[k], tok.source, tok.length)
        for k, tok in enumerate(parse)
        if isinstance(tok, Copy)
    ]
    for t, src, length in reversed(copies):
        lo = bisect.bisect_right(ordered, t)
        hi = bisect.bisect_left(ordered, t + length)
        frags = [t] + ordered[lo:hi] + [t + length]
        for a, b in zip(frags, frags[1:]):
            if b - a >= 2:
                chase(src + (a - t))
                chase(src + (b - t))

    refined: Parse = []
    for k, tok in enumerate(parse):
        if isinstance(tok, Literal):
            refined.append(tok)
            continue
        t = starts[k]
        lo = bisect.bisect_right(ordered, t)
        hi = bisect.bisect_left(ordered, t + tok.length)
        frags = [t] + ordered[lo:hi] + [t + tok.length]
        for a, b in zip(frags, frags[1:]):
            if b - a == 1:
                refined.append(Literal(text[a - 1]))
            else:
                refined.append(Copy(tok.source + (a - t), b - a))
    return refined


def check_alignment(parse: Parse) -> bool:
    """True iff every copy's source starts at a phrase start and ends at a phrase end."""
    starts = set(phrase_starts(parse))
    n = sum(token_length(t) for t in parse)
    starts.add(n + 1)
    for tok in parse:
        if isinstance(tok, Copy):
            if tok.source not in starts:
                return False
            if tok.source + tok.length not in starts:
                return False
    return True
