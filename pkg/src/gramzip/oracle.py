"""Brute-force reference oracles used by the test suite.

Everything here favours obviousness over speed: hand-rolled scans for
prefix matching and first occurrences, and an exhaustive search for the
smallest grammar on tiny strings (the problem is NP-complete, so the
size cap is hard).
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .errors import EmptyInput, OutOfRange, TooLarge

SMALLEST_GRAMMAR_CAP = 8


def lcp_bounded(text: bytes, i: int, t: int) -> int:
    """Length of the longest common prefix of text[i..t-1] and text[t..n].

    Positions are 1-based; the first operand stops at t-1, so the match
    cannot spill into the suffix being matched.
    """
    n = len(text)
    if not 1 <= i < t <= n:
        raise OutOfRange(f"need 1 <= i < t <= n, got i={i}, t={t}, n={n}")
    j = 0
    while i + j <= t - 1 and t + j <= n and text[i + j - 1] == text[t + j - 1]:
        j += 1
    return j


def first_occurrence(text: bytes, lo: int, hi: int) -> int:
    """Minimal 1-based p with text[p..p+hi-lo] equal to text[lo..hi]."""
    n = len(text)
    if not 1 <= lo <= hi <= n:
        raise OutOfRange(f"need 1 <= lo <= hi <= n, got lo={lo}, hi={hi}, n={n}")
    length = hi - lo + 1
    for p in range(1, lo + 1):
        k = 0
        while k < length and text[p + k - 1] == text[lo + k - 1]:
            k += 1
        if k == length:
            return p
    return lo  # unreachable: the substring occurs at lo itself


def _occurrences(s: bytes, w: bytes) -> int:
    """Number of (possibly overlapping) occurrences of w in s."""
    count = 0
    for x in range(len(s) - len(w) + 1):
        if s[x:x + len(w)] == w:
            count += 1
    return count


def _candidates(s: bytes) -> List[bytes]:
    """Substrings that could serve as nonterminal expansions.

    A nonterminal is worth having only if it can be used twice, and two
    distinct uses always materialize at two distinct positions, so only
    substrings of length >= 2 with >= 2 occurrences qualify.
    """
    seen = set()
    cands: List[bytes] = []
    for length in range(2, len(s)):
        for x in range(len(s) - length + 1):
            w = s[x:x + length]
            if w in seen:
                continue
            seen.add(w)
            if _occurrences(s, w) >= 2:
                cands.append(w)
    cands.sort(key=len)
    return cands


def _parse_cost(target: bytes, dictionary: Sequence[bytes],
                with_parse: bool = False):
    """Fewest symbols spelling `target` from single bytes plus `dictionary`."""
    n = len(target)
    inf = n + 1
    dp = [0] + [inf] * n
    back: List[Tuple[int, bytes]] = [(0, b"")] * (n + 1)
    for x in range(n):
        if dp[x] >= inf:
            continue
        if dp[x] + 1 < dp[x + 1]:
            dp[x + 1] = dp[x] + 1
            back[x + 1] = (x, target[x:x + 1])
        for u in dictionary:
            end = x + len(u)
            if end <= n and dp[x] + 1 < dp[end] and target[x:end] == u:
                dp[end] = dp[x] + 1
                back[end] = (x, u)
    if not with_parse:
        return dp[n]
    symbols: List[bytes] = []
    x = n
    while x > 0:
        prev, piece = back[x]
        symbols.append(piece)
        x = prev
    symbols.reverse()
    return dp[n], symbols


def _subset_size(s: bytes, subset: Sequence[bytes]) -> int:
    """Total rule length of the grammar whose nonterminals expand to `subset`."""
    total = _parse_cost(s, subset)
    for w in subset:
        shorter = [u for u in subset if len(u) < len(w)]
        total += _parse_cost(w, shorter)
    return total


_cache: Dict[bytes, int] = {}


def _canonical(s: bytes) -> bytes:
    """Relabel bytes by first appearance; pick the smaller of s and reverse(s).

    Grammar size is invariant under byte bijections and under reversal
    (reverse every right-hand side), so cache lookups can share work.
    """

    def relabel(t: bytes) -> bytes:
        mapping: Dict[int, int] = {}
        out = bytearray()
        for b in t:
            if b not in mapping:
                mapping[b] = len(mapping)
            out.append(mapping[b])
        return bytes(out)

    return min(relabel(s), relabel(s[::-1]))


def smallest_grammar_size(text: bytes) -> int:
    """Exact minimum total rule length over all grammars generating `text`.

    Enumerates every set of candidate nonterminal expansions and prices
    each with a shortest-segmentation dynamic program; rules may only
    reference strictly shorter nonterminals, which keeps every candidate
    grammar acyclic.
    """
    n = len(text)
    if n < 1:
        raise EmptyInput("smallest grammar needs at least one byte")
    if n > SMALLEST_GRAMMAR_CAP:
        raise TooLarge(f"n={n} exceeds the cap of {SMALLEST_GRAMMAR_CAP}")
    key = _canonical(text)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    s = key
    cands = _candidates(s)
    best = len(s)  # spell it out with no nonterminals
    for mask in range(1, 1 << len(cands)):
        subset = [cands[b] for b in range(len(cands)) if mask >> b & 1]
        size = _subset_size(s, subset)
        if size < best:
            best = size
    _cache[key] = best
    return best
