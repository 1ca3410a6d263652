"""Component counts of twisted torus links by Euclidean-style reduction.

Each step replaces T(p, q; r, s) by a link on fewer strands with the same
number of components, until either the torus part or the twist part is
trivial and the count can be read off directly.
"""

from __future__ import annotations

from .core import (
    Branch,
    InvalidParameters,
    ReductionState,
    ReductionTrace,
    Terminal,
    TTLParams,
    gcd_nn,
    residue,
    validate,
)


def normalize(params: TTLParams) -> ReductionState:
    """First state of the reduction: (p, [q]_p, r, [s]_r)."""
    validate(params)
    p, q, r, s = params.as_tuple()
    if r < 1:
        raise InvalidParameters("r", "reduction needs r >= 1; use component_count for r = 0")
    state = ReductionState(p, residue(q, p), r, residue(s, r), Branch.INITIAL)
    state.check()
    return state


def reduce_step(state: ReductionState):
    """Advance one step, or return the ``Terminal`` rule if the state is final.

    When both q and s are zero the QZero rule is reported; both rules give p.
    """
    state.check()
    p, q, r, s = state.as_tuple()
    if q == 0:
        return Terminal.QZERO
    if s == 0:
        return Terminal.SZERO
    if q >= r:
        nxt = ReductionState(q, residue(p, q), r, residue(-s, r), Branch.SWAP)
    else:
        nxt = ReductionState(r, residue(s + q, r), q, residue(r - p, q), Branch.FORMING)
    nxt.check()
    return nxt


def terminal_count(state: ReductionState) -> int:
    if state.q == 0:
        return state.p - state.r + gcd_nn(state.r, state.s)
    if state.s == 0:
        return gcd_nn(state.p, state.q)
    raise ValueError(f"state {state.as_tuple()} is not terminal")


def terminal_rule(state: ReductionState) -> Terminal:
    if state.q == 0:
        return Terminal.QZERO
    if state.s == 0:
        return Terminal.SZERO
    raise ValueError(f"state {state.as_tuple()} is not terminal")


def trace(params: TTLParams) -> ReductionTrace:
    states = [normalize(params)]
    while True:
        nxt = reduce_step(states[-1])
        if isinstance(nxt, Terminal):
            break
        states.append(nxt)
    last = states[-1]
    return ReductionTrace(tuple(states), nxt, terminal_count(last))


def component_count(params: TTLParams) -> int:
    """Number of components NC(p, q; r, s).

    >>> component_count(TTLParams(5, 4, 3, 2))
    1
    """
    validate(params)
    p, q, r, s = params.as_tuple()
    if r <= 1:
        # r = 0 drops the twist block and r = 1 makes it the empty word
        return gcd_nn(p, q % p)
    return _count(p, q % p, r, s % r)


def _count(p, q, r, s):
    # Hot path for sweeps: same recursion as reduce_step without allocation.
    while True:
        if q == 0:
            return p - r + gcd_nn(r, s)
        if s == 0:
            return gcd_nn(p, q)
        if q >= r:
            p, q, s = q, p % q, -s % r
        else:
            p, q, r, s = r, (s + q) % r, q, (r - p) % q


def count(p: int, q: int, r: int, s: int) -> int:
    """Shorthand for ``component_count(TTLParams(p, q, r, s))``."""
    return component_count(TTLParams(p, q, r, s))
