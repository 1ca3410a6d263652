"""Closed-form component counts for special families of twisted torus links.

These are independent of the reduction engine and serve as a third check
next to it and the permutation oracle.  Every function returns a
``FormulaResult``; ``applicable`` is False when the family predicate fails.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import TTLParams, gcd_nn, validate


class Rule(str, enum.Enum):
    R2 = "R2"
    GCD_GE_R = "GcdGeR"
    T33A = "T33a"
    T33B = "T33b"
    T34A = "T34a"
    T34B = "T34b"
    T34C = "T34c"
    T35A = "T35a"
    T35B = "T35b"
    T35C = "T35c"
    T36A = "T36a"
    T36B = "T36b"
    T36C = "T36c"


class FormulaConflict(RuntimeError):
    """Two closed forms that both apply gave different counts."""


@dataclass(frozen=True)
class FormulaResult:
    applicable: bool
    count: int | None = None
    rule: Rule | None = None
    matched: tuple = field(default=())

    def __post_init__(self):
        if self.applicable and (self.count is None or self.count < 1):
            raise ValueError(f"applicable formula {self.rule} gave count {self.count}")


NOT_APPLICABLE = FormulaResult(False)


def formula_r2(p: int, q: int, s: int) -> FormulaResult:
    """Twisted torus links with two twisted strands, T(p, q; 2, s)."""
    if p < 2:
        raise ValueError(f"p={p} must be >= 2 when r = 2")
    g = gcd_nn(p, q)
    if s % 2 == 0:
        n = g
    elif g == 1:
        n = 2
    else:
        n = g - 1
    return FormulaResult(True, n, Rule.R2, (Rule.R2,))


def formula_gcd_ge_r(p: int, q: int, r: int, s: int) -> FormulaResult:
    """T(p, q; r, s) with gcd(p, q) >= r: gcd(p, q) - r + gcd(r, s)."""
    validate(TTLParams(p, q, r, s))
    if r < 1:
        raise ValueError(f"r={r} must be >= 1")
    g = gcd_nn(p, q)
    if g < r:
        return NOT_APPLICABLE
    return FormulaResult(True, g - r + gcd_nn(r, s % r), Rule.GCD_GE_R, (Rule.GCD_GE_R,))


def _s_eq_q_candidates(p, q, r, sign):
    pq = p % q
    k = r % (2 * q)
    if sign > 0:
        if pq != 0 and k in {1 % (2 * q), q, 2 * q - 1}:
            yield Rule.T33A, gcd_nn(p, q)
        if pq == 1:
            if 1 <= k <= q:
                yield Rule.T34A, gcd_nn(k, 1 - q)
            if q + 1 <= k <= 2 * q - 1:
                yield Rule.T34B, gcd_nn(k + 2, q + 1)
        # [p]_q = -1 read as the least residue q - 1
        if pq == q - 1:
            if 1 <= k <= q:
                yield Rule.T35A, gcd_nn(k, q + 1)
            if q + 1 <= k <= 2 * q - 1:
                yield Rule.T35B, gcd_nn(k - 2, q - 1)
        if pq == 0:
            yield Rule.T36A, abs(q - k) + gcd_nn(k, q)
        if k == 0 and pq != 0:
            yield Rule.T36B, q + gcd_nn(q, p)
        if pq == k:
            yield Rule.T36C, gcd_nn(r, 2 * q)
    else:
        if pq != 0 and r > q:
            yield Rule.T33B, r - q + gcd_nn(q, r - p)
        if pq == 1 and 1 < r <= q:
            yield Rule.T34C, gcd_nn(r, q + 1)
        if pq == q - 1 and r < q:
            yield Rule.T35C, gcd_nn(r, 1 - q)
        if pq == 0:
            yield Rule.T36A, abs(r - q) + gcd_nn(k, q)
        if k == 0 and pq != 0:
            yield Rule.T36B, r - q + gcd_nn(q, p)
        if pq == k:
            yield Rule.T36C, r


def formula_s_eq_q(p: int, q: int, r: int, sign) -> FormulaResult:
    """Closed forms for T(p, q; r, q) (``sign`` > 0) and T(p, q; r, -q).

    All sub-cases whose predicates hold are evaluated; they must agree, and
    ``matched`` lists them in catalog order.
    """
    if isinstance(sign, str):
        sign = {"+": 1, "-": -1}[sign]
    sign = 1 if sign > 0 else -1
    validate(TTLParams(p, q, r, sign * q))
    if q <= 0 or r < 1:
        return NOT_APPLICABLE
    hits = list(_s_eq_q_candidates(p, q, r, sign))
    if not hits:
        return NOT_APPLICABLE
    values = {n for _, n in hits}
    if len(values) > 1:
        raise FormulaConflict(f"T({p},{q};{r},{sign * q}): sub-cases disagree: {hits}")
    rule, n = hits[0]
    return FormulaResult(True, n, rule, tuple(rule for rule, _ in hits))


def applicable_formulas(p: int, q: int, r: int, s: int) -> list:
    """Every closed form that covers T(p, q; r, s)."""
    out = []
    if r == 2:
        out.append(formula_r2(p, q, s))
    if r >= 1:
        res = formula_gcd_ge_r(p, q, r, s)
        if res.applicable:
            out.append(res)
    if q > 0:
        for sign in (1, -1):
            if s == sign * q:
                res = formula_s_eq_q(p, q, r, sign)
                if res.applicable:
                    out.append(res)
    return out
