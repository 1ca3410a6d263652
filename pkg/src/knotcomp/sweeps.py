"""Exhaustive verification sweeps over bounded parameter lattices.

Every suite is split into independent work units (one per leading strand
count) so that it can fan out over a process pool.  Results are merged and
sorted by parameter tuple, so reports do not depend on scheduling.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import formulas, oracle, ttl
from .core import TLink3Params, TTLParams, gcd_nn
from .formulas import FormulaConflict
from .tlink import component_count3

TWIST_SHIFTS = ((1, 0), (0, 1), (-1, 1), (2, -3))


@dataclass(frozen=True)
class Failure:
    check: str
    params: tuple
    expected: object
    got: object

    def to_json(self):
        return {"check": self.check, "params": list(self.params),
                "expected": self.expected, "got": self.got}


@dataclass
class Report:
    suite: str
    bounds: dict
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        return {"suite": self.suite, "bounds": self.bounds, "checked": self.checked,
                "failures": [f.to_json() for f in self.failures], "ok": self.ok}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "check", "params", "expected", "got"])
        for f in self.failures:
            w.writerow([self.suite, f.check, " ".join(map(str, f.params)), f.expected, f.got])
        return buf.getvalue()


def ttl_lattice(p):
    """Sweep tuples with strand count p: r in [1, p], q in [-p, 2p], s in [-r, 2r]."""
    for r in range(1, p + 1):
        for q in range(-p, 2 * p + 1):
            for s in range(-r, 2 * r + 1):
                yield p, q, r, s


def tlink_pairs(p_max):
    return [(p, q) for p in range(1, p_max + 1) for q in range(-p, p + 1)]


# -- work units; each returns (checked, failures) ----------------------------

def _oracle_ttl(p):
    checked, bad = 0, []
    for t in ttl_lattice(p):
        want = oracle.ttl_cycle_count(*t)
        got = ttl.count(*t)
        checked += 1
        if got != want:
            bad.append(Failure("engine=oracle", t, want, got))
    return checked, bad


def _oracle_tlink(p1, p_max):
    checked, bad = 0, []
    pairs = tlink_pairs(p_max)
    for q1 in range(-p1, p1 + 1):
        for b in pairs:
            for c in pairs:
                params = TLink3Params(((p1, q1), b, c))
                want = oracle.cycle_count(oracle.tlink_permutation(params))
                got = component_count3(params)
                checked += 1
                if got != want:
                    bad.append(Failure("engine=oracle", params.flat(), want, got))
    return checked, bad


def _shifted_count(p, q, r, s, k):
    # twist block on positions k-1 .. k+r-2 instead of 0 .. r-1
    sigma = oracle.torus_block_perm(p, q, p).images
    images = []
    for i in sigma:
        j = i - (k - 1)
        images.append((k - 1) + (j - s) % r if 0 <= j < r else i)
    return oracle.cycle_count(images)


def _lemmas(p):
    checked, bad = 0, []

    def check(name, t, want, got):
        nonlocal checked
        checked += 1
        if want != got:
            bad.append(Failure(name, t, want, got))

    for t in ttl_lattice(p):
        _, q, r, s = t
        n = ttl.count(*t)
        for k, l in TWIST_SHIFTS:
            check("full-twist", t, n, ttl.count(p, q + k * p, r, s + l * r))
        check("mirror", t, n, ttl.count(p, -q, r, -s))
        if q % p == 0:
            check("final-step-q", t, p - r + gcd_nn(r, s), n)
        if s % r == 0:
            check("final-step-s", t, gcd_nn(p, q), n)
        if p >= q >= r:
            check("swap", t, n, ttl.count(q, p, r, -s))
            check("swap-mirror", t, n, ttl.count(q, -p, r, s))
        if p >= r > q > 0:
            check("forming", t, n, ttl.count(r, s + q, q, r - p))
        for k in {1 + (p - r) // 2, p - r + 1}:
            check("shift", t, n, _shifted_count(p, q, r, s, k))
    return checked, bad


def _formulas(p):
    checked, bad = 0, []
    seen = set()
    for r in range(1, p + 1):
        for q in range(-p, 2 * p + 1):
            tuples = [(p, q, r, s) for s in range(-r, 2 * r + 1)]
            if q > 0:
                tuples += [(p, q, r, q), (p, q, r, -q)]
            for t in tuples:
                if t in seen:
                    continue
                seen.add(t)
                try:
                    results = formulas.applicable_formulas(*t)
                except FormulaConflict as exc:
                    checked += 1
                    bad.append(Failure("conflict", t, None, str(exc)))
                    continue
                if not results:
                    continue
                n = ttl.count(*t)
                m = oracle.ttl_cycle_count(*t)
                if n != m:
                    checked += 1
                    bad.append(Failure("engine=oracle", t, m, n))
                for res in results:
                    checked += 1
                    if res.count != n:
                        bad.append(Failure(res.rule.value, t, n, res.count))
    return checked, bad


def _gcd_ttl(p):
    checked, bad = 0, []
    for t in ttl_lattice(p):
        n = ttl.count(*t)
        g = gcd_nn(*t)
        checked += 1
        if n < 1 or n % g or (n == 1 and g != 1):
            bad.append(Failure("gcd-divides", t, f"multiple of {g}", n))
    return checked, bad


def _gcd_tlink(p1, p_max):
    checked, bad = 0, []
    pairs = tlink_pairs(p_max)
    for q1 in range(-p1, p1 + 1):
        for b in pairs:
            for c in pairs:
                params = TLink3Params(((p1, q1), b, c))
                n = component_count3(params)
                g = gcd_nn(*params.flat())
                checked += 1
                if n < 1 or n % g:
                    bad.append(Failure("gcd-divides", params.flat(), f"multiple of {g}", n))
    return checked, bad


def _knot_family(n_lo, n_hi):
    checked, bad = 0, []
    for n in range(n_lo, n_hi + 1):
        t = (2 * n + 3, 2 * n + 2, 2 * n + 1, 2 * n)
        got = ttl.count(*t)
        checked += 1
        if got != 1:
            bad.append(Failure("knot", t, 1, got))
    return checked, bad


def _torus_recovery(p):
    checked, bad = 0, []
    for q in range(-p, 2 * p + 1):
        g = gcd_nn(p, q)
        for s in range(-p, 2 * p + 1):
            for r in (0, 1):
                t = (p, q, r, s)
                got = ttl.count(*t)
                want_oracle = oracle.ttl_cycle_count(*t)
                checked += 1
                if got != g or want_oracle != g:
                    bad.append(Failure("torus-gcd", t, g, (got, want_oracle)))
    return checked, bad


def _n_component_family(p):
    # T(p, q; r, r) with gcd(q, r) = 1 has gcd(p, q) components
    checked, bad = 0, []
    for r in range(1, p + 1):
        for q in range(-2 * p, 3 * p + 1):
            if gcd_nn(q, r) != 1:
                continue
            t = (p, q, r, r)
            got = ttl.count(*t)
            checked += 1
            if got != gcd_nn(p, q):
                bad.append(Failure("n-components", t, gcd_nn(p, q), got))
    return checked, bad


def _traces(p):
    checked, bad = 0, []
    for t in ttl_lattice(p):
        tr = ttl.trace(TTLParams(*t))
        checked += 1
        problem = trace_problem(tr)
        if problem is None and tr.count != ttl.count(*t):
            problem = "trace count differs from component_count"
        if problem:
            bad.append(Failure("trace", t, "well-formed", problem))
    return checked, bad


def trace_problem(tr) -> str | None:
    """Describe the first well-formedness violation of a trace, if any."""
    states = tr.states
    for i, st in enumerate(states):
        try:
            st.check()
        except ValueError as exc:
            return f"state {i}: {exc}"
        if st.is_terminal != (i == len(states) - 1):
            return f"state {i}: terminal flag out of place"
        if i + 1 < len(states) and not states[i + 1].is_terminal:
            if not states[i + 1].p < st.p:
                return f"state {i + 1}: strand count did not decrease"
    if tr.count != ttl.terminal_count(states[-1]):
        return "count differs from terminal formula"
    return None


# -- suite table --------------------------------------------------------------

def _units(suite, b):
    if suite == "oracle-ttl":
        return [(_oracle_ttl, (p,)) for p in range(b["p_min"], b["p_max"] + 1)]
    if suite == "oracle-tlink":
        return [(_oracle_tlink, (p, b["p_max"])) for p in range(1, b["p_max"] + 1)]
    if suite == "lemmas":
        return [(_lemmas, (p,)) for p in range(b["p_min"], b["p_max"] + 1)]
    if suite == "formulas":
        return [(_formulas, (p,)) for p in range(max(b["p_min"], 1), b["p_max"] + 1)]
    if suite == "gcd-divisibility":
        units = [(_gcd_ttl, (p,)) for p in range(b["p_min"], b["p_max"] + 1)]
        return units + [(_gcd_tlink, (p, b["tlink_p_max"]))
                        for p in range(1, b["tlink_p_max"] + 1)]
    if suite == "knot-family":
        return [(_knot_family, (1, b["n_max"]))]
    if suite == "torus-recovery":
        return [(_torus_recovery, (p,)) for p in range(b["p_min"], b["p_max"] + 1)]
    if suite == "n-component-family":
        return [(_n_component_family, (p,)) for p in range(b["p_min"], b["p_max"] + 1)]
    if suite == "traces":
        return [(_traces, (p,)) for p in range(b["p_min"], b["p_max"] + 1)]
    raise KeyError(suite)


SUITES = ("oracle-ttl", "oracle-tlink", "lemmas", "formulas", "gcd-divisibility",
          "knot-family", "torus-recovery", "n-component-family", "traces")

DEFAULT_BOUNDS = {
    "oracle-ttl": {"p_min": 1, "p_max": 25},
    "oracle-tlink": {"p_max": 10},
    "lemmas": {"p_min": 1, "p_max": 25},
    "formulas": {"p_min": 1, "p_max": 25},
    "gcd-divisibility": {"p_min": 1, "p_max": 25, "tlink_p_max": 10},
    "knot-family": {"n_max": 50},
    "torus-recovery": {"p_min": 1, "p_max": 30},
    "n-component-family": {"p_min": 1, "p_max": 20},
    "traces": {"p_min": 1, "p_max": 25},
}


def _call(unit):
    fn, args = unit
    return fn(*args)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("KNOTCOMP_JOBS", "1")))
    except ValueError:
        return 1


def run_suite(suite: str, jobs: int | None = None, **bounds) -> Report:
    """Run a named suite; unspecified bounds take their defaults."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    b = dict(DEFAULT_BOUNDS[suite])
    b.update({k: v for k, v in bounds.items() if v is not None and k in b})
    units = _units(suite, b)
    jobs = default_jobs() if jobs is None else jobs
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_call, units))
    else:
        results = [_call(u) for u in units]
    report = Report(suite, b)
    for checked, bad in results:
        report.checked += checked
        report.failures.extend(bad)
    report.failures.sort(key=lambda f: (f.params, f.check))
    return report
