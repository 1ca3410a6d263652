"""Braid words for twisted torus links and three-block T-links.

Letter ``k`` stands for the generator s_k crossing positions k-1 and k
(0-based); ``-k`` is its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TLink3Params, TTLParams, validate, validate3
from .oracle import StrandPermutation

MAX_LETTERS = 10_000_000


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise ValueError(f"strands={self.strands} must be >= 1")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(f"letter {x} invalid on {self.strands} strands")

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}


def block_letters(p: int, q: int) -> list:
    """Letters of (s_1 ... s_{p-1})^q; negative q gives (s_{p-1}^-1 ... s_1^-1)^|q|."""
    if p <= 1 or q == 0:
        return []
    if (p - 1) * abs(q) > MAX_LETTERS:
        raise ValueError(f"block ({p}, {q}) would exceed {MAX_LETTERS} letters")
    if q > 0:
        unit = list(range(1, p))
    else:
        unit = [-k for k in range(p - 1, 0, -1)]
    return unit * abs(q)


def _checked(strands, parts):
    if sum(map(len, parts)) > MAX_LETTERS:
        raise ValueError(f"braid word would exceed {MAX_LETTERS} letters")
    return BraidWord(strands, [x for part in parts for x in part])


def ttl_braid(params: TTLParams) -> BraidWord:
    validate(params)
    p, q, r, s = params.as_tuple()
    return _checked(p, [block_letters(p, q), block_letters(r, s)])


def tlink_braid(params: TLink3Params) -> BraidWord:
    validate3(params)
    return _checked(params.strands, [block_letters(p, q) for p, q in params.pairs])


def word_permutation(word: BraidWord) -> StrandPermutation:
    """Follow each strand through the word; crossing signs are ignored."""
    at = list(range(word.strands))  # at[position] = strand currently there
    for x in word.letters:
        k = abs(x)
        at[k - 1], at[k] = at[k], at[k - 1]
    images = [0] * word.strands
    for pos, strand in enumerate(at):
        images[strand] = pos
    return StrandPermutation(tuple(images))
