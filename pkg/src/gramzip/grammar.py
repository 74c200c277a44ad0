"""Straight-line grammars: one rule per nonterminal, generating one string.

A rule's right-hand side is either a single terminal byte (stored as a
length-1 bytes object) or a sequence of nonterminal ids (stored as a
tuple).  Ids are dense, 0..count-1, with 0 the start symbol.

`grammar_from_parse` turns an aligned parse into a grammar with one
nonterminal per phrase.  `to_cnf` rewrites it so every rule is a
terminal or a pair, using a forest of complete binary trees over the
phrase nonterminals: tree-internal nodes get eager pair rules, and each
run of consecutive phrases is decomposed against the trees, sharing
range nonterminals between equal runs.

Grammar text format:

    GRAMMAR v1 n=<length> start=<id> prods=<count>
    <id> T <byte>
    <id> B <id> <id>
    <id> S <id> <id> ...

The S form appears only in pre-CNF debug dumps.
"""

from __future__ import annotations

import bisect as _bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .errors import (
    AlignmentError,
    CyclicGrammar,
    EmptyInput,
    MalformedGrammar,
    ShapeError,
)
from .parsing import Copy, Literal, Parse, parse_lz77, phrase_starts
from .refine import break_phrases, check_alignment

Rule = Union[bytes, Tuple[int, ...]]


@dataclass(frozen=True)
class Grammar:
    start: int
    rules: Tuple[Rule, ...]
    labels: Optional[Tuple[str, ...]] = None


@dataclass(frozen=True)
class Certificate:
    """Sizes of each pipeline stage plus the parse-count lower bound.

    The phrase count of the LZ77 parse never exceeds the size of the
    smallest grammar, so best_size / lz77_phrases upper-bounds the
    approximation ratio actually achieved on this input.
    """

    lz77_phrases: int
    broken_phrases: int
    cnf_size: int
    bisection_size: int
    best_size: int
    ratio_upper_bound: Fraction


def grammar_from_parse(parse: Parse) -> Grammar:
    """One nonterminal per phrase; copies become runs of covered phrases."""
    if not parse:
        raise EmptyInput("cannot build a grammar from an empty parse")
    if not check_alignment(parse):
        raise AlignmentError("parse has copies not aligned to whole phrases")
    starts = phrase_starts(parse)
    index_of_start = {p: k + 1 for k, p in enumerate(starts)}
    m = len(parse)
    n = starts[-1] + (1 if isinstance(parse[-1], Literal) else parse[-1].length) - 1
    index_of_start[n + 1] = m + 1

    rules: List[Rule] = [tuple(range(1, m + 1))]
    for tok in parse:
        if isinstance(tok, Literal):
            rules.append(bytes([tok.byte]))
        else:
            a = index_of_start[tok.source]
            b = index_of_start[tok.source + tok.length] - 1
            rules.append(tuple(range(a, b + 1)))
    labels = tuple(["S"] + [f"P{k}" for k in range(1, m + 1)])
    return Grammar(start=0, rules=tuple(rules), labels=labels)


def to_cnf(g: Grammar) -> Grammar:
    """Rewrite a phrase grammar so every rule is a terminal or a pair.

    Complete binary trees are laid over the phrase nonterminals in
    order, each as large as possible (greedy largest power of two on
    the remaining leaves).  Runs are decomposed by descending the
    trees; a fresh nonterminal is created per distinct leaf range, so
    equal ranges share rules.  Unit runs take a copy of the covered
    phrase's finished rule, and unreachable nonterminals are dropped.
    """
    m = len(g.rules) - 1
    if m < 1 or g.start != 0:
        raise ShapeError("expected a phrase grammar with start id 0")
    if g.rules[0] != tuple(range(1, m + 1)):
        raise ShapeError("start rule must run over all phrase nonterminals")
    for k in range(1, m + 1):
        r = g.rules[k]
        if isinstance(r, bytes):
            continue
        if not r or r != tuple(range(r[0], r[-1] + 1)) or r[0] < 1 or r[-1] >= k:
            raise ShapeError(f"rule {k}: not a consecutive run of earlier phrases")

    trees: List[Tuple[int, int]] = []
    lo, rem = 1, m
    while rem > 0:
        size = 1 << (rem.bit_length() - 1)
        trees.append((lo, lo + size - 1))
        lo += size
        rem -= size
    tree_los = [t[0] for t in trees]

    rules: Dict[int, Rule] = {}
    labels: Dict[int, str] = {0: "S"}
    for k in range(1, m + 1):
        labels[k] = f"P{k}"
    range_nt: Dict[Tuple[int, int], int] = {}
    next_id = m + 1

    def new_nt(a: int, b: int) -> int:
        nonlocal next_id
        i = next_id
        next_id += 1
        range_nt[(a, b)] = i
        labels[i] = f"N{a}.{b}"
        return i

    def build_node(a: int, b: int) -> int:
        if a == b:
            return a
        mid = (a + b) // 2
        left = build_node(a, mid)
        right = build_node(mid + 1, b)
        i = new_nt(a, b)
        rules[i] = (left, right)
        return i

    for tlo, thi in trees:
        build_node(tlo, thi)

    def cover_in(a: int, b: int, lo: int, hi: int) -> int:
        # symbol for leaves a..b inside the complete subtree over lo..hi
        if a == lo and b == hi:
            return range_nt[(lo, hi)] if lo != hi else lo
        mid = (lo + hi) // 2
        if b <= mid:
            return cover_in(a, b, lo, mid)
        if a > mid:
            return cover_in(a, b, mid + 1, hi)
        if (a, b) in range_nt:
            return range_nt[(a, b)]
        left = cover_in(a, mid, lo, mid)
        right = cover_in(mid + 1, b, mid + 1, hi)
        i = new_nt(a, b)
        rules[i] = (left, right)
        return i

    def run_symbol(a: int, b: int) -> int:
        if a == b:
            return a
        if (a, b) in range_nt:
            return range_nt[(a, b)]
        tlo, thi = trees[_bisect.bisect_right(tree_los, a) - 1]
        if b <= thi:
            return cover_in(a, b, tlo, thi)
        left, right = run_pair(a, b)
        i = new_nt(a, b)
        rules[i] = (left, right)
        return i

    def run_pair(a: int, b: int) -> Tuple[int, int]:
        # top binary split of the run a..b (requires a < b)
        tlo, thi = trees[_bisect.bisect_right(tree_los, a) - 1]
        if b > thi:
            return cover_in(a, thi, tlo, thi), run_symbol(thi + 1, b)
        lo, hi = tlo, thi
        while True:
            mid = (lo + hi) // 2
            if b <= mid:
                hi = mid
            elif a > mid:
                lo = mid + 1
            else:
                return cover_in(a, mid, lo, mid), cover_in(mid + 1, b, mid + 1, hi)

    for k in range(1, m + 1):
        r = g.rules[k]
        if isinstance(r, bytes):
            rules[k] = r
        elif len(r) == 1:
            rules[k] = rules[r[0]]  # unit run: child is already in CNF
        else:
            rules[k] = run_pair(r[0], r[-1])
    rules[0] = rules[1] if m == 1 else run_pair(1, m)

    # drop anything the start symbol cannot reach, keep ids dense
    reachable = {0}
    frontier = [0]
    while frontier:
        r = rules[frontier.pop()]
        if isinstance(r, tuple):
            for j in r:
                if j not in reachable:
                    reachable.add(j)
                    frontier.append(j)
    kept = sorted(reachable)
    remap = {old: new for new, old in enumerate(kept)}
    out_rules: List[Rule] = []
    out_labels: List[str] = []
    for old in kept:
        r = rules[old]
        out_rules.append(r if isinstance(r, bytes) else tuple(remap[j] for j in r))
        out_labels.append(labels[old])
    return Grammar(start=0, rules=tuple(out_rules), labels=tuple(out_labels))


def expand(g: Grammar) -> bytes:
    """The unique string the grammar generates (memoized, iterative)."""
    memo: Dict[int, bytes] = {}
    open_set: set = set()
    stack = [g.start]
    while stack:
        i = stack[-1]
        if i in memo:
            stack.pop()
            continue
        rhs = g.rules[i]
        if isinstance(rhs, bytes):
            memo[i] = rhs
            stack.pop()
            continue
        if i in open_set:
            memo[i] = b"".join(memo[j] for j in rhs)
            open_set.remove(i)
            stack.pop()
            continue
        open_set.add(i)
        seen = set()
        for j in reversed(rhs):
            if j in memo or j in seen:
                continue
            if j in open_set:
                raise CyclicGrammar(f"nonterminal {j} depends on itself")
            seen.add(j)
            stack.append(j)
    return memo[g.start]


def expansion_length(g: Grammar) -> int:
    """Length of the generated string, via integer arithmetic only."""
    memo: Dict[int, int] = {}
    open_set: set = set()
    stack = [g.start]
    while stack:
        i = stack[-1]
        if i in memo:
            stack.pop()
            continue
        rhs = g.rules[i]
        if isinstance(rhs, bytes):
            memo[i] = 1
            stack.pop()
            continue
        if i in open_set:
            memo[i] = sum(memo[j] for j in rhs)
            open_set.remove(i)
            stack.pop()
            continue
        open_set.add(i)
        seen = set()
        for j in reversed(rhs):
            if j in memo or j in seen:
                continue
            if j in open_set:
                raise CyclicGrammar(f"nonterminal {j} depends on itself")
            seen.add(j)
            stack.append(j)
    return memo[g.start]


def grammar_size(g: Grammar) -> int:
    """Total number of symbols on right-hand sides."""
    return sum(len(r) for r in g.rules)


def is_cnf(g: Grammar) -> bool:
    """Every rule a single terminal or exactly two nonterminals."""
    return all(
        (isinstance(r, bytes) and len(r) == 1)
        or (isinstance(r, tuple) and len(r) == 2)
        for r in g.rules
    )


def make_certificate(text: bytes) -> Certificate:
    """Run the whole pipeline and record every stage size."""
    from .bisection import bisection_grammar

    if not text:
        raise EmptyInput("certificate needs at least one byte")
    parse = parse_lz77(text)
    broken = break_phrases(parse)
    cnf = to_cnf(grammar_from_parse(broken))
    bis = bisection_grammar(text)
    cnf_size = grammar_size(cnf)
    bis_size = grammar_size(bis)
    best = min(cnf_size, bis_size)
    return Certificate(
        lz77_phrases=len(parse),
        broken_phrases=len(broken),
        cnf_size=cnf_size,
        bisection_size=bis_size,
        best_size=best,
        ratio_upper_bound=Fraction(best, len(parse)),
    )


def dump_grammar(g: Grammar) -> str:
    n = expansion_length(g)
    lines = [f"GRAMMAR v1 n={n} start={g.start} prods={len(g.rules)}"]
    for i, r in enumerate(g.rules):
        if isinstance(r, bytes):
            lines.append(f"{i} T {r[0]}")
        elif len(r) == 2:
            lines.append(f"{i} B {r[0]} {r[1]}")
        else:
            lines.append(f"{i} S {' '.join(str(j) for j in r)}")
    return "\n".join(lines) + "\n"


def load_grammar(data: str) -> Tuple[Grammar, int]:
    """Parse the grammar text format; returns the grammar and its declared n."""
    lines = data.splitlines()
    if not lines:
        raise MalformedGrammar("empty grammar file")
    head = lines[0].split()
    if (
        len(head) != 5
        or head[0] != "GRAMMAR"
        or head[1] != "v1"
        or not head[2].startswith("n=")
        or not head[3].startswith("start=")
        or not head[4].startswith("prods=")
    ):
        raise MalformedGrammar(f"bad header: {lines[0]!r}")
    try:
        n = int(head[2][2:])
        start = int(head[3][6:])
        count = int(head[4][6:])
    except ValueError:
        raise MalformedGrammar(f"bad header: {lines[0]!r}") from None
    if count < 1 or not 0 <= start < count:
        raise MalformedGrammar("start id outside the declared rule count")
    rules: List[Optional[Rule]] = [None] * count
    for line in lines[1:]:
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) < 3:
            raise MalformedGrammar(f"bad rule line: {line!r}")
        try:
            i = int(fields[0])
        except ValueError:
            raise MalformedGrammar(f"bad rule line: {line!r}") from None
        if not 0 <= i < count:
            raise MalformedGrammar(f"rule id {i} outside 0..{count - 1}")
        if rules[i] is not None:
            raise MalformedGrammar(f"duplicate rule for id {i}")
        kind = fields[1]
        try:
            args = [int(f) for f in fields[2:]]
        except ValueError:
            raise MalformedGrammar(f"bad rule line: {line!r}") from None
        if kind == "T":
            if len(args) != 1 or not 0 <= args[0] <= 255:
                raise MalformedGrammar(f"bad terminal rule: {line!r}")
            rules[i] = bytes([args[0]])
        elif kind == "B":
            if len(args) != 2:
                raise MalformedGrammar(f"bad binary rule: {line!r}")
            rules[i] = tuple(args)
        elif kind == "S":
            if not args:
                raise MalformedGrammar(f"empty rule: {line!r}")
            rules[i] = tuple(args)
        else:
            raise MalformedGrammar(f"unknown rule kind: {line!r}")
        if isinstance(rules[i], tuple):
            for j in rules[i]:  # type: ignore[union-attr]
                if not 0 <= j < count:
                    raise MalformedGrammar(f"symbol id {j} outside 0..{count - 1}")
    missing = [i for i, r in enumerate(rules) if r is None]
    if missing:
        raise MalformedGrammar(f"missing rules for ids {missing[:5]}")
    return Grammar(start=start, rules=tuple(rules)), n  # type: ignore[arg-type]
