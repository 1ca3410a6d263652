"""Component counts of generalized T-links with three blocks.

The link is the closure of B1 B2 B3 where Bi = (s_1 ... s_{p_i - 1})^{q_i}, on
max(p_i) strands.  The engine rotates/reflects the block necklace into
standard form (p1 >= p2 >= p3, 0 <= q_i < p_i), shrinks the strand count with
one of two moves, and repeats until some q_i is zero; the remaining two
blocks form a twisted torus link.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import ttl
from .core import InvalidParameters, TLink3Params, TTLParams, validate3


class Move(str, enum.Enum):
    SWAP = "SwapBranch"
    FORMING = "FormingBranch"


@dataclass(frozen=True)
class TLink3Standard:
    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(p), int(q)) for p, q in self.pairs))
        (p1, _), (p2, _), (p3, _) = self.pairs
        if not p1 >= p2 >= p3 >= 1:
            raise InvalidParameters("pairs", f"{self.pairs}: strand counts not descending")
        for i, (p, q) in enumerate(self.pairs, start=1):
            if not p > q >= 0:
                raise InvalidParameters(f"q{i}", f"{self.pairs}: need p{i} > q{i} >= 0")

    def flat(self):
        return tuple(x for pair in self.pairs for x in pair)

    @property
    def strands(self) -> int:
        return self.pairs[0][0]

    def as_params(self) -> TLink3Params:
        return TLink3Params(self.pairs)


@dataclass(frozen=True)
class Terminal3:
    """Standard form whose block ``index`` (1-based) has q = 0."""

    index: int


@dataclass(frozen=True)
class Step3:
    raw: TLink3Params
    standard: TLink3Standard
    move: Move | None


@dataclass(frozen=True)
class Trace3:
    steps: tuple
    terminal: Terminal3
    count: int


def _candidates(pairs):
    reflected = [(p, -q) for p, q in reversed(pairs)]
    for seq in (pairs, reflected):
        for k in range(3):
            yield seq[k:] + seq[:k]


def standard_form(params: TLink3Params) -> TLink3Standard:
    """Descending necklace arrangement with reduced exponents.

    Rotating the blocks conjugates the braid; reversing them while negating
    every exponent inverts it.  Neither changes the component count.  Among
    the descending arrangements the lexicographically smallest is returned.
    """
    validate3(params)
    best = None
    for seq in _candidates(list(params.pairs)):
        (p1, _), (p2, _), (p3, _) = seq
        if not p1 >= p2 >= p3:
            continue
        cand = tuple((p, q % p) for p, q in seq)
        if best is None or cand < best:
            best = cand
    return TLink3Standard(best)


def reduce_step3(std: TLink3Standard):
    """One move on a standard form, or ``Terminal3`` if some q_i is zero.

    The result is not standardized.  The swap move keeps the exponent signs
    but reverses the order of the two trailing blocks: turning the torus over
    reverses the word they form.
    """
    (p1, q1), (p2, q2), (p3, q3) = std.pairs
    for i, (_, q) in enumerate(std.pairs, start=1):
        if q == 0:
            return Terminal3(i)
    if move_for(std) is Move.SWAP:
        return TLink3Params(((q1, p1), (p3, -q3), (p2, -q2)))
    return TLink3Params(((q1, p2 - p1), (p2, q1 + q2), (p3, q3)))


def move_for(std: TLink3Standard) -> Move:
    (_, q1), (p2, _), _ = std.pairs
    return Move.SWAP if q1 >= p2 else Move.FORMING


def terminal_count3(std: TLink3Standard, index: int) -> int:
    (p1, q1), (p2, q2), (p3, q3) = std.pairs
    if std.pairs[index - 1][1] != 0:
        raise ValueError(f"q{index} of {std.pairs} is not zero")
    if index == 1:
        return p1 - p2 + ttl.component_count(TTLParams(p2, q2, p3, q3))
    if index == 2:
        return ttl.component_count(TTLParams(p1, q1, p3, q3))
    if index == 3:
        return ttl.component_count(TTLParams(p1, q1, p2, q2))
    raise ValueError(f"block index {index} out of range 1..3")


def trace3(params: TLink3Params) -> Trace3:
    steps = []
    raw, move = params, None
    while True:
        std = standard_form(raw)
        steps.append(Step3(raw, std, move))
        out = reduce_step3(std)
        if isinstance(out, Terminal3):
            return Trace3(tuple(steps), out, terminal_count3(std, out.index))
        raw, move = out, move_for(std)


def component_count3(params: TLink3Params) -> int:
    """Number of components of the three-block T-link.

    >>> component_count3(TLink3Params.of(4, 2, 3, 1, 2, 1))
    3
    """
    validate3(params)
    return _count3(list(params.pairs))


def _standard_pairs(pairs):
    best = None
    for seq in _candidates(pairs):
        if seq[0][0] >= seq[1][0] >= seq[2][0]:
            cand = [(p, q % p) for p, q in seq]
            if best is None or cand < best:
                best = cand
    return best


def _count3(pairs):
    # Hot path for sweeps: standard_form + reduce_step3 on bare tuples.
    while True:
        (p1, q1), (p2, q2), (p3, q3) = _standard_pairs(pairs)
        if q1 == 0:
            return p1 - p2 + ttl.count(p2, q2, p3, q3)
        if q2 == 0:
            return ttl.count(p1, q1, p3, q3)
        if q3 == 0:
            return ttl.count(p1, q1, p2, q2)
        if q1 >= p2:
            pairs = [(q1, p1), (p3, -q3), (p2, -q2)]
        else:
            pairs = [(q1, p2 - p1), (p2, q1 + q2), (p3, q3)]


def count3(p1, q1, p2, q2, p3, q3) -> int:
    return component_count3(TLink3Params.of(p1, q1, p2, q2, p3, q3))
