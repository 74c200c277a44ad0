"""Greedy LZ77 factorization without self-referencing phrases.

Positions are 1-based throughout.  The parse is a sequence of tokens,
each either a single literal byte or a copy (source, length) whose
source range lies entirely inside the already-parsed prefix: a copy
starting at destination t satisfies source + length - 1 <= t - 1.

At each cursor the longest match against the parsed prefix wins; on
ties the smallest source position wins; matches of length 0 or 1 are
emitted as literals, so every copy has length >= 2.

Token-stream text format (one record per line):

    LZ77 v1 n=<length>
    L <byte 0..255>
    C <source> <length>
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Union

from .errors import MalformedParse


@dataclass(frozen=True)
class Literal:
    byte: int


@dataclass(frozen=True)
class Copy:
    source: int
    length: int


Token = Union[Literal, Copy]
Parse = List[Token]


def token_length(tok: Token) -> int:
    return 1 if isinstance(tok, Literal) else tok.length


def parse_length(parse: Iterable[Token]) -> int:
    """Total text length covered by the tokens."""
    return sum(token_length(t) for t in parse)


def phrase_starts(parse: Iterable[Token]) -> List[int]:
    """1-based start position of each token, in order."""
    starts = []
    pos = 1
    for tok in parse:
        starts.append(pos)
        pos += token_length(tok)
    return starts


def parse_lz77(text: bytes) -> Parse:
    """Factorize `text` greedily, longest match first, minimal source on ties.

    Uses bytes.find with a binary search on the match length; the output
    is token-identical to the quadratic reference scan (match length is
    monotone in the candidate length, and find returns the minimal
    source position).
    """
    n = len(text)
    tokens: Parse = []
    c = 0  # 0-based cursor
    while c < n:
        # a copy source must end inside text[:c], so occurrences are
        # searched in text[0:c]; the longest feasible length is
        # min(c, n - c)
        hi = min(c, n - c)
        best = 0
        if hi >= 2 and text.find(text[c:c + 2], 0, c) >= 0:
            lo = 2
            best = 2
            while lo < hi:
                mid = (lo + hi + 1) // 2
                if text.find(text[c:c + mid], 0, c) >= 0:
                    lo = mid
                else:
                    hi = mid - 1
            best = lo
        if best >= 2:
            src = text.find(text[c:c + best], 0, c)
            tokens.append(Copy(src + 1, best))
            c += best
        else:
            tokens.append(Literal(text[c]))
            c += 1
    return tokens


def decode_parse(parse: Iterable[Token]) -> bytes:
    """Expand tokens left to right back into the original text."""
    out = bytearray()
    for tok in parse:
        if isinstance(tok, Literal):
            if not 0 <= tok.byte <= 255:
                raise MalformedParse(f"literal byte {tok.byte} out of range")
            out.append(tok.byte)
        else:
            if tok.length < 2:
                raise MalformedParse(f"copy length {tok.length} < 2")
            if tok.source < 1:
                raise MalformedParse(f"copy source {tok.source} < 1")
            end = tok.source + tok.length - 1
            if end > len(out):
                raise MalformedParse(
                    f"copy ({tok.source},{tok.length}) reads past the "
                    f"decoded prefix of length {len(out)}"
                )
            start = tok.source - 1
            out += out[start:start + tok.length]
    return bytes(out)


def phrase_count(parse: Iterable[Token]) -> int:
    return sum(1 for _ in parse)


def render_tokens(parse: Iterable[Token]) -> str:
    """Compact display form: literals as characters, copies as (i,l)."""
    parts = []
    for tok in parse:
        if isinstance(tok, Literal):
            parts.append(chr(tok.byte))
        else:
            parts.append(f"({tok.source},{tok.length})")
    return "".join(parts)


def dump_parse(parse: Parse) -> str:
    lines = [f"LZ77 v1 n={parse_length(parse)}"]
    for tok in parse:
        if isinstance(tok, Literal):
            lines.append(f"L {tok.byte}")
        else:
            lines.append(f"C {tok.source} {tok.length}")
    return "\n".join(lines) + "\n"


def load_parse(data: str) -> Parse:
    lines = data.splitlines()
    if not lines:
        raise MalformedParse("empty token stream")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "LZ77" or head[1] != "v1" \
            or not head[2].startswith("n="):
        raise MalformedParse(f"bad header: {lines[0]!r}")
    try:
        n = int(head[2][2:])
    except ValueError:
        raise MalformedParse(f"bad header: {lines[0]!r}") from None
    tokens: Parse = []
    pos = 1
    for line in lines[1:]:
        if not line.strip():
            continue
        fields = line.split()
        if fields[0] == "L" and len(fields) == 2:
            try:
                byte = int(fields[1])
            except ValueError:
                raise MalformedParse(f"bad token line: {line!r}") from None
            if not 0 <= byte <= 255:
                raise MalformedParse(f"byte out of range: {line!r}")
            tokens.append(Literal(byte))
            pos += 1
        elif fields[0] == "C" and len(fields) == 3:
            try:
                src, length = int(fields[1]), int(fields[2])
            except ValueError:
                raise MalformedParse(f"bad token line: {line!r}") from None
            if length < 2:
                raise MalformedParse(f"copy length < 2: {line!r}")
            if src < 1 or src + length - 1 > pos - 1:
                raise MalformedParse(f"self-referencing copy: {line!r}")
            tokens.append(Copy(src, length))
            pos += length
        else:
            raise MalformedParse(f"bad token line: {line!r}")
    if pos - 1 != n:
        raise MalformedParse(f"token lengths sum to {pos - 1}, header says {n}")
    return tokens
