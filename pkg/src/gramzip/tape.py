"""Sequential-access harness for the greedy parser.

The parser is run against a read-only tape whose head moves one cell
per step; a seek is a run of unit moves and a reversal is counted
whenever the movement direction flips.  Workspace besides the tape is
a register file fixed before the input is seen: a handful of named
integer registers whose values never leave [0, n+1], i.e. position-
sized counters.  Comparing two text positions is done by shuttling the
single head between them, which is what makes the reversal count
meaningful.

The candidate scan stops early once some source matches up to its
window or suffix cap: later candidates have strictly smaller caps, so
they can neither beat the match nor steal the minimal-source tie.
The emitted parse is token-identical to parse_lz77.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .parsing import Copy, Literal, Parse

REGISTER_NAMES = ("t", "i", "j", "limit", "max_match", "max_length")


class Tape:
    """Read-only tape with a unit-step head and reversal accounting."""

    __slots__ = ("contents", "n", "head", "steps", "reversals", "_direction")

    def __init__(self, contents: bytes):
        self.contents = contents
        self.n = len(contents)
        self.head = 1
        self.steps = 0
        self.reversals = 0
        self._direction = 0

    def seek(self, pos: int) -> None:
        """Walk the head to `pos`, counting unit moves and flips."""
        delta = pos - self.head
        if delta == 0:
            return
        direction = 1 if delta > 0 else -1
        if self._direction != 0 and direction != self._direction:
            self.reversals += 1
        self._direction = direction
        self.steps += delta if delta > 0 else -delta
        self.head = pos

    def read(self) -> int:
        return self.contents[self.head - 1]


@dataclass
class RegisterFile:
    """Fixed set of named integer registers, sized before the input is read.

    The parser mirrors these into locals inside its hot loop and
    snapshots them back; `max_value` tracks the largest value any
    register ever held, which certifies the O(log n)-bit claim when it
    stays at most n+1.
    """

    names: Tuple[str, ...]
    values: Dict[str, int]
    max_value: int = 0

    @classmethod
    def declare(cls, names: Tuple[str, ...]) -> "RegisterFile":
        return cls(names=names, values={name: 0 for name in names})

    def snapshot(self, n: int, **values: int) -> None:
        for name, v in values.items():
            if name not in self.values:
                raise KeyError(f"undeclared register {name}")
            if not 0 <= v <= n + 1:
                raise ValueError(f"register {name}={v} outside [0, {n + 1}]")
            self.values[name] = v
            if v > self.max_value:
                self.max_value = v


@dataclass(frozen=True)
class TapeStats:
    reversals: int
    steps: int
    registers: int
    max_register: int

    def lines(self) -> str:
        return (
            f"reversals={self.reversals}\n"
            f"steps={self.steps}\n"
            f"registers={self.registers}\n"
            f"max_register={self.max_register}\n"
        )


def run_tape_parser(text: bytes) -> Tuple[Parse, TapeStats]:
    """Greedy parse computed through the tape interface only."""
    n = len(text)
    tape = Tape(text)
    regs = RegisterFile.declare(REGISTER_NAMES)
    tokens: Parse = []
    seek = tape.seek
    read = tape.read

    max_reg = 0
    t = 1
    if t > max_reg:
        max_reg = t
    while t <= n:
        max_match = 0
        max_length = 0
        i = 1
        while i < t:
            limit = t - i
            if n - t + 1 < limit:
                limit = n - t + 1
            if limit > max_reg:
                max_reg = limit
            j = 0
            while j < limit:
                seek(i + j)
                a = read()
                seek(t + j)
                if a != read():
                    break
                j += 1
            if j > max_reg:
                max_reg = j
            if j > max_length:
                max_match = i
                max_length = j
            if j == limit:
                break  # later sources have strictly smaller caps
            i += 1
            if i > max_reg:
                max_reg = i
        if max_length <= 1:
            seek(t)
            tokens.append(Literal(read()))
            t += 1
        else:
            tokens.append(Copy(max_match, max_length))
            t += max_length
        if t > max_reg:
            max_reg = t

    regs.snapshot(
        n, t=t, i=0, j=0, limit=0, max_match=0, max_length=0
    )
    if max_reg > regs.max_value:
        if not max_reg <= n + 1:
            raise ValueError(f"register value {max_reg} outside [0, {n + 1}]")
        regs.max_value = max_reg
    stats = TapeStats(
        reversals=tape.reversals,
        steps=tape.steps,
        registers=len(regs.names),
        max_register=regs.max_value,
    )
    return tokens, stats
