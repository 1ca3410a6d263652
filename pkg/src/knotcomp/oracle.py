"""Brute-force component counts from braid-closure strand permutations.

A torus block (s_1 s_2 ... s_{p-1})^q sends the strand at position i < p to
position [i - q]_p and fixes the rest.  The closure of a product of blocks
has one component per cycle of the composed permutation.  Strands are
indexed 0..N-1 and blocks are applied left to right (first block first).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TLink3Params, TTLParams, validate, validate3


@dataclass(frozen=True)
class StrandPermutation:
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"not a bijection on 0..{n - 1}: {list(images)}")
            seen[x] = True
        object.__setattr__(self, "images", images)

    def __len__(self):
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def then(self, other: "StrandPermutation") -> "StrandPermutation":
        """Apply ``self`` first, then ``other``."""
        if len(other) != len(self):
            raise ValueError("permutation sizes differ")
        return StrandPermutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "StrandPermutation":
        inv = [0] * len(self)
        for i, x in enumerate(self.images):
            inv[x] = i
        return StrandPermutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "StrandPermutation":
        return cls(tuple(range(n)))


@dataclass(frozen=True)
class ComponentPartition:
    """Disjoint cycles, each sorted, ordered by smallest strand index."""

    cycles: tuple

    def __len__(self):
        return len(self.cycles)

    def as_sets(self):
        return [frozenset(c) for c in self.cycles]

    def __str__(self):
        return "[" + ",".join("{" + ",".join(map(str, c)) + "}" for c in self.cycles) + "]"


def torus_block_perm(p: int, q: int, n: int) -> StrandPermutation:
    if p < 1:
        raise ValueError(f"block width p={p} must be >= 1")
    if p > n:
        raise ValueError(f"block width p={p} exceeds strand count {n}")
    images = [(i - q) % p for i in range(p)]
    images.extend(range(p, n))
    return StrandPermutation(tuple(images))


def ttl_permutation(params: TTLParams) -> StrandPermutation:
    """Permutation of T(p, q; r, s): the p-block first, then the r-block."""
    validate(params)
    p, q, r, s = params.as_tuple()
    sigma = torus_block_perm(p, q, p)
    if r == 0:
        return sigma
    return sigma.then(torus_block_perm(r, s, p))


def tlink_permutation(params: TLink3Params) -> StrandPermutation:
    """Permutation of the block product, first block applied first."""
    validate3(params)
    images = list(range(params.strands))
    for p, q in params.pairs:
        # same map as torus_block_perm(p, q, n), composed in place
        images = [(x - q) % p if x < p else x for x in images]
    return StrandPermutation(tuple(images))


def _as_perm(perm) -> StrandPermutation:
    return perm if isinstance(perm, StrandPermutation) else StrandPermutation(tuple(perm))


def component_partition(perm) -> ComponentPartition:
    perm = _as_perm(perm)
    images = perm.images
    seen = [False] * len(images)
    cycles = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = images[i]
        cycles.append(tuple(sorted(cycle)))
    return ComponentPartition(tuple(cycles))


def cycle_count(perm) -> int:
    """Number of disjoint cycles, fixed points included."""
    perm = _as_perm(perm)
    images = perm.images
    seen = bytearray(len(images))
    count = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = 1
            i = images[i]
    return count


def ttl_cycle_count(p: int, q: int, r: int, s: int) -> int:
    return cycle_count(ttl_permutation(TTLParams(p, q, r, s)))


def tlink_cycle_count(p1, q1, p2, q2, p3, q3) -> int:
    return cycle_count(tlink_permutation(TLink3Params.of(p1, q1, p2, q2, p3, q3)))
