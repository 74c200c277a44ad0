"""Leveled block decomposition for random access into a compressed string.

Level i cuts the text into consecutive blocks of ceil(n / b^i) bytes
(the last block may be shorter), always starting at the first byte.
Every block of length > 1 stores a pointer to the first occurrence in
the text of its own content; unit blocks store their byte directly, so
queries never consult the original text.

An access starts at the single level-0 block and at each level jumps
to the position the pointer names: with pointer p and in-block offset
off, the absolute position is q = p + off, the next block index is
(q-1) // next_len and the next offset is (q-1) % next_len.  Blocks no
query can ever visit are discarded; because a pointer maps a block's
offsets onto a contiguous range of positions, reachability propagates
level by level as index intervals.

RA file format:

    RABLOCK v1 n=<n> b=<b> levels=<count>
    LEVEL <i> len=<block_len> blocks=<retained>
    <j> <pointer>        (block_len > 1)
    <j> <byte>           (block_len = 1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import BadBase, EmptyInput, MalformedBlocks, OutOfRange


@dataclass(frozen=True)
class Level:
    block_len: int
    entries: Dict[int, int]  # block index -> pointer, or byte at the unit level


@dataclass(frozen=True)
class BlockStructure:
    n: int
    base: int
    levels: Tuple[Level, ...]


@dataclass(frozen=True)
class BlockReport:
    n: int
    base: int
    per_level: Tuple[Tuple[int, int, int], ...]  # (level, block_len, retained)
    total_blocks: int
    pointer_count: int
    estimated_bits: int


def default_base(n: int) -> int:
    """Integer base near 2^sqrt(log2 n), never below 2."""
    if n <= 1:
        return 2
    return max(2, round(2.0 ** math.sqrt(math.log2(n))))


def build_block_structure(text: bytes, base: Optional[int] = None,
                          prune: bool = True) -> BlockStructure:
    """Build the leveled structure; `prune` drops unreachable blocks."""
    n = len(text)
    if n == 0:
        raise EmptyInput("cannot index an empty text")
    if base is None or base == 0:
        base = default_base(n)
    if base < 2:
        raise BadBase(f"base {base} < 2")

    lens: List[int] = []
    d = 1
    while True:
        lens.append((n + d - 1) // d)
        if lens[-1] == 1:
            break
        d *= base

    def block_span(j: int, blen: int) -> Tuple[int, int]:
        # 1-based inclusive cover of block j
        lo = j * blen + 1
        return lo, min(lo + blen - 1, n)

    num_blocks = [(n + blen - 1) // blen for blen in lens]
    if prune:
        reach: List[List[Tuple[int, int]]] = [[(0, 0)]]
    else:
        reach = [[(0, nb - 1)] for nb in num_blocks]

    levels: List[Level] = []
    for i, blen in enumerate(lens):
        entries: Dict[int, int] = {}
        child_intervals: List[Tuple[int, int]] = []
        for lo_j, hi_j in reach[i]:
            for j in range(lo_j, hi_j + 1):
                lo, hi = block_span(j, blen)
                if blen == 1:
                    entries[j] = text[lo - 1]
                    continue
                p = text.find(text[lo - 1:hi]) + 1
                entries[j] = p
                if i + 1 < len(lens):
                    nlen = lens[i + 1]
                    child_intervals.append(
                        ((p - 1) // nlen, (p + (hi - lo + 1) - 2) // nlen)
                    )
        if prune and i + 1 < len(lens):
            child_intervals.sort()
            merged: List[Tuple[int, int]] = []
            for lo_c, hi_c in child_intervals:
                if merged and lo_c <= merged[-1][1] + 1:
                    merged[-1] = (merged[-1][0], max(merged[-1][1], hi_c))
                else:
                    merged.append((lo_c, hi_c))
            reach.append(merged)
        levels.append(Level(block_len=blen, entries=entries))
    return BlockStructure(n=n, base=base, levels=tuple(levels))


def _descend(bs: BlockStructure, pos: int) -> Tuple[int, int]:
    """Return (byte, level transitions) for a single position."""
    if not 1 <= pos <= bs.n:
        raise OutOfRange(f"position {pos} outside 1..{bs.n}")
    j, off = 0, pos - 1
    transitions = 0
    for i, level in enumerate(bs.levels):
        entry = level.entries.get(j)
        if entry is None:
            raise MalformedBlocks(f"level {i} block {j} was discarded but visited")
        if level.block_len == 1:
            return entry, transitions
        q = entry + off
        nlen = bs.levels[i + 1].block_len
        j, off = (q - 1) // nlen, (q - 1) % nlen
        transitions += 1
    raise MalformedBlocks("no unit level present")


def access(bs: BlockStructure, pos: int) -> int:
    """Byte value of the text at 1-based position `pos`."""
    return _descend(bs, pos)[0]


def extract(bs: BlockStructure, pos: int, length: int) -> bytes:
    """Bytes of the text at positions pos..pos+length-1."""
    if length < 0 or pos < 1 or pos + length - 1 > bs.n:
        raise OutOfRange(f"range ({pos},{length}) outside 1..{bs.n}")
    return bytes(access(bs, p) for p in range(pos, pos + length))


def ra_size_report(bs: BlockStructure) -> BlockReport:
    per_level = tuple(
        (i, lvl.block_len, len(lvl.entries)) for i, lvl in enumerate(bs.levels)
    )
    pointer_count = sum(c for _, blen, c in per_level if blen > 1)
    unit_count = sum(c for _, blen, c in per_level if blen == 1)
    pointer_bits = max(1, bs.n.bit_length())
    return BlockReport(
        n=bs.n,
        base=bs.base,
        per_level=per_level,
        total_blocks=pointer_count + unit_count,
        pointer_count=pointer_count,
        estimated_bits=pointer_count * pointer_bits + unit_count * 8,
    )


def dump_blocks(bs: BlockStructure) -> str:
    lines = [f"RABLOCK v1 n={bs.n} b={bs.base} levels={len(bs.levels)}"]
    for i, lvl in enumerate(bs.levels):
        lines.append(f"LEVEL {i} len={lvl.block_len} blocks={len(lvl.entries)}")
        for j in sorted(lvl.entries):
            lines.append(f"{j} {lvl.entries[j]}")
    return "\n".join(lines) + "\n"


def load_blocks(data: str) -> BlockStructure:
    lines = [ln for ln in data.splitlines() if ln.strip()]
    if not lines:
        raise MalformedBlocks("empty RA file")
    head = lines[0].split()
    if (
        len(head) != 5
        or head[0] != "RABLOCK"
        or head[1] != "v1"
        or not head[2].startswith("n=")
        or not head[3].startswith("b=")
        or not head[4].startswith("levels=")
    ):
        raise MalformedBlocks(f"bad header: {lines[0]!r}")
    try:
        n = int(head[2][2:])
        base = int(head[3][2:])
        declared_levels = int(head[4][7:])
    except ValueError:
        raise MalformedBlocks(f"bad header: {lines[0]!r}") from None
    if n < 1:
        raise MalformedBlocks("n must be >= 1")
    if base < 2:
        raise BadBase(f"base {base} < 2")

    levels: List[Level] = []
    idx = 1
    level_no = 0
    while idx < len(lines):
        fields = lines[idx].split()
        if fields[0] != "LEVEL":
            raise MalformedBlocks(f"expected LEVEL line, got {lines[idx]!r}")
        if (
            len(fields) != 4
            or not fields[2].startswith("len=")
            or not fields[3].startswith("blocks=")
        ):
            raise MalformedBlocks(f"bad LEVEL line: {lines[idx]!r}")
        try:
            i = int(fields[1])
            blen = int(fields[2][4:])
            count = int(fields[3][7:])
        except ValueError:
            raise MalformedBlocks(f"bad LEVEL line: {lines[idx]!r}") from None
        if i != level_no:
            raise MalformedBlocks(f"level {i} out of order")
        expected_len = (n + base ** i - 1) // base ** i
        if blen != expected_len:
            raise MalformedBlocks(
                f"level {i}: block length {blen}, expected {expected_len}"
            )
        idx += 1
        entries: Dict[int, int] = {}
        last_j = -1
        for _ in range(count):
            if idx >= len(lines):
                raise MalformedBlocks("truncated RA file")
            parts = lines[idx].split()
            if len(parts) != 2:
                raise MalformedBlocks(f"bad block record: {lines[idx]!r}")
            try:
                j, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise MalformedBlocks(f"bad block record: {lines[idx]!r}") from None
            if j <= last_j:
                raise MalformedBlocks("block indices must be ascending")
            if blen == 1 and not 0 <= v <= 255:
                raise MalformedBlocks(f"byte out of range: {lines[idx]!r}")
            if blen > 1 and not 1 <= v <= n:
                raise MalformedBlocks(f"pointer out of range: {lines[idx]!r}")
            entries[j] = v
            last_j = j
            idx += 1
        levels.append(Level(block_len=blen, entries=entries))
        level_no += 1
    if declared_levels != len(levels):
        raise MalformedBlocks(
            f"header declares {declared_levels} levels, file has {len(levels)}"
        )
    if not levels or levels[-1].block_len != 1:
        raise MalformedBlocks("last level must have unit blocks")
    return BlockStructure(n=n, base=base, levels=tuple(levels))
