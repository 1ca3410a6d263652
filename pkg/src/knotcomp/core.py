"""Parameter types and the residue/gcd conventions shared by every engine.

Residues are always least non-negative, and ``gcd(x, 0) == x``.  Inputs are
limited to signed 64-bit magnitudes so that results match what a fixed-width
implementation would report.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class InvalidParameters(ValueError):
    """Raised when a parameter tuple violates its invariants."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class ParameterOverflow(OverflowError):
    """Raised when a value does not fit in a signed 64-bit integer."""

    def __init__(self, field, value):
        super().__init__(f"{field}={value} does not fit in a signed 64-bit integer")
        self.field = field
        self.value = value


def residue(x: int, m: int) -> int:
    """Least non-negative residue of ``x`` modulo ``m``.

    >>> residue(-2, 3)
    1
    """
    if m < 1:
        raise ValueError(f"invalid modulus {m}; must be >= 1")
    return x % m


def gcd_nn(*values: int) -> int:
    """Non-negative gcd of the absolute values; ``gcd_nn(x, 0) == |x|``."""
    return reduce(math.gcd, (abs(v) for v in values), 0)


def check_int64(field: str, value: int) -> None:
    if not INT64_MIN <= value <= INT64_MAX:
        raise ParameterOverflow(field, value)


class Branch(str, enum.Enum):
    INITIAL = "Initial"
    SWAP = "SwapBranch"
    FORMING = "FormingBranch"


class Terminal(str, enum.Enum):
    QZERO = "QZero"
    SZERO = "SZero"


@dataclass(frozen=True)
class TTLParams:
    """Twisted torus link T(p, q; r, s)."""

    p: int
    q: int
    r: int
    s: int

    def as_tuple(self):
        return (self.p, self.q, self.r, self.s)


@dataclass(frozen=True)
class ReductionState:
    p: int
    q: int
    r: int
    s: int
    branch: Branch = Branch.INITIAL

    def as_tuple(self):
        return (self.p, self.q, self.r, self.s)

    def check(self) -> None:
        """Raise ``InvalidParameters`` unless p > q >= 0 and p >= r > s >= 0."""
        if not self.p > self.q >= 0:
            raise InvalidParameters("q", f"state {self.as_tuple()} violates p > q >= 0")
        if not self.p >= self.r > self.s >= 0:
            raise InvalidParameters("r", f"state {self.as_tuple()} violates p >= r > s >= 0")

    @property
    def is_terminal(self) -> bool:
        return self.q == 0 or self.s == 0


@dataclass(frozen=True)
class ReductionTrace:
    states: tuple
    terminal: Terminal
    count: int

    @property
    def last(self) -> ReductionState:
        return self.states[-1]


@dataclass(frozen=True)
class TLink3Params:
    """Generalized T-link with three (p, q) blocks, applied left to right."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(p), int(q)) for p, q in self.pairs))
        if len(self.pairs) != 3:
            raise InvalidParameters("pairs", f"expected 3 pairs, got {len(self.pairs)}")

    @classmethod
    def of(cls, p1, q1, p2, q2, p3, q3):
        return cls(((p1, q1), (p2, q2), (p3, q3)))

    def flat(self):
        return tuple(x for pair in self.pairs for x in pair)

    @property
    def strands(self) -> int:
        return max(p for p, _ in self.pairs)


def validate(params: TTLParams) -> TTLParams:
    for name, value in zip("pqrs", params.as_tuple()):
        check_int64(name, value)
    if params.p < 1:
        raise InvalidParameters("p", f"p={params.p} must be >= 1")
    if params.r < 0:
        raise InvalidParameters("r", f"r={params.r} must be >= 0")
    if params.r > params.p:
        raise InvalidParameters("r", f"r={params.r} exceeds p={params.p}")
    return params


def validate3(params: TLink3Params) -> TLink3Params:
    for i, (p, q) in enumerate(params.pairs, start=1):
        check_int64(f"p{i}", p)
        check_int64(f"q{i}", q)
        if p < 1:
            raise InvalidParameters(f"p{i}", f"p{i}={p} must be >= 1")
    return params
