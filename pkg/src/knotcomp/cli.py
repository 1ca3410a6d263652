"""Command-line front end.

Exit codes: 0 success, 2 usage or invalid parameters, 3 integer overflow,
4 verification failures found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import braid, oracle, sweeps, tlink, ttl
from .core import InvalidParameters, ParameterOverflow, Terminal, TLink3Params, TTLParams

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_FAILURES = 4

MAX_ORACLE_STRANDS = 10_000_000

TTL_KEYS = ("p", "q", "r", "s")
TLINK_KEYS = ("p1", "q1", "p2", "q2", "p3", "q3")


class UsageError(Exception):
    pass


def _params(kind, nums):
    if kind == "ttl":
        if len(nums) != 4:
            raise UsageError(f"ttl takes 4 integers (p q r s), got {len(nums)}")
        return TTLParams(*nums)
    if len(nums) != 6:
        raise UsageError(f"tlink takes 6 integers (p1 q1 p2 q2 p3 q3), got {len(nums)}")
    return TLink3Params.of(*nums)


def _kind_from_arity(nums):
    return "ttl" if len(nums) == 4 else "tlink"


def _emit(obj):
    print(json.dumps(obj))


def cmd_nc(args):
    params = _params(_kind_from_arity(args.nums), args.nums)
    if isinstance(params, TTLParams):
        n = ttl.component_count(params)
        fields = dict(zip(TTL_KEYS, params.as_tuple()))
    else:
        n = tlink.component_count3(params)
        fields = dict(zip(TLINK_KEYS, params.flat()))
    if args.json:
        _emit({**fields, "count": n})
    else:
        print(n)
    return EXIT_OK


def _terminal_text(state, rule):
    if rule is Terminal.QZERO:
        return (f"QZero {state.p}-{state.r}+gcd({state.r},{state.s})="
                f"{ttl.terminal_count(state)}")
    return f"SZero gcd({state.p},{state.q})={ttl.terminal_count(state)}"


def cmd_trace(args):
    params = _params(_kind_from_arity(args.nums), args.nums)
    if isinstance(params, TLink3Params):
        return _trace3(params, args.json)
    if params.r < 1:
        raise InvalidParameters("r", "trace needs r >= 1 (r = 0 is the plain torus link)")
    tr = ttl.trace(params)
    if args.json:
        _emit({
            **dict(zip(TTL_KEYS, params.as_tuple())),
            "trace": [
                {"i": i, "p": st.p, "q": st.q, "r": st.r, "s": st.s, "branch": st.branch.value}
                for i, st in enumerate(tr.states, start=1)
            ],
            "terminal": tr.terminal.value,
            "count": tr.count,
        })
        return EXIT_OK
    for i, st in enumerate(tr.states, start=1):
        print(i, st.p, st.q, st.r, st.s, st.branch.value)
    print(_terminal_text(tr.last, tr.terminal))
    return EXIT_OK


def _trace3(params, as_json):
    tr = tlink.trace3(params)
    if as_json:
        _emit({
            **dict(zip(TLINK_KEYS, params.flat())),
            "trace": [
                {"i": i, "raw": list(st.raw.flat()), "standard": list(st.standard.flat()),
                 "branch": st.move.value if st.move else "Initial"}
                for i, st in enumerate(tr.steps, start=1)
            ],
            "terminal": f"q{tr.terminal.index}=0",
            "count": tr.count,
        })
        return EXIT_OK
    for i, st in enumerate(tr.steps, start=1):
        move = st.move.value if st.move else "Initial"
        print(i, " ".join(map(str, st.raw.flat())), "->", " ".join(map(str, st.standard.flat())), move)
    print(f"q{tr.terminal.index}=0 count={tr.count}")
    return EXIT_OK


def cmd_oracle(args):
    params = _params(args.kind, args.nums)
    strands = params.p if isinstance(params, TTLParams) else params.strands
    if strands > MAX_ORACLE_STRANDS:
        raise UsageError(f"oracle limited to {MAX_ORACLE_STRANDS} strands")
    if isinstance(params, TTLParams):
        perm = oracle.ttl_permutation(params)
        fields = dict(zip(TTL_KEYS, params.as_tuple()))
    else:
        perm = oracle.tlink_permutation(params)
        fields = dict(zip(TLINK_KEYS, params.flat()))
    part = oracle.component_partition(perm)
    if args.json:
        _emit({"kind": args.kind, **fields, "count": len(part),
               "partition": [list(c) for c in part.cycles]})
    else:
        print(f"{len(part)} / {part}")
    return EXIT_OK


def cmd_braid(args):
    params = _params(args.kind, args.nums)
    if isinstance(params, TTLParams):
        word = braid.ttl_braid(params)
    else:
        word = braid.tlink_braid(params)
    _emit(word.to_json())
    return EXIT_OK


def cmd_verify(args):
    if args.suite not in sweeps.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sweeps.SUITES)}")
    report = sweeps.run_suite(
        args.suite, jobs=args.jobs, p_min=args.p_min, p_max=args.p_max,
        n_max=args.n_max, tlink_p_max=args.tlink_p_max,
    )
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
        print(f"{report.suite}: checked={report.checked} failures={len(report.failures)}",
              file=sys.stderr)
    else:
        _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_FAILURES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcomp",
        description="Component counts of twisted torus links and three-block T-links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nc", help="component count: p q r s, or p1 q1 p2 q2 p3 q3")
    p.add_argument("nums", type=int, nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nc)

    p = sub.add_parser("trace", help="reduction sequence for p q r s (or a 6-integer T-link)")
    p.add_argument("nums", type=int, nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("oracle", help="brute-force cycle count and strand partition")
    p.add_argument("kind", choices=("ttl", "tlink"))
    p.add_argument("nums", type=int, nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("braid", help="braid word as JSON {strands, letters}")
    p.add_argument("kind", choices=("ttl", "tlink"))
    p.add_argument("nums", type=int, nargs="+")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("verify", help="exhaustive verification sweep")
    p.add_argument("suite", help=", ".join(sweeps.SUITES))
    p.add_argument("--p-min", type=int)
    p.add_argument("--p-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--tlink-p-max", type=int)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: $KNOTCOMP_JOBS or 1)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def _check_arity(args):
    nums = getattr(args, "nums", None)
    if args.command in ("nc", "trace") and len(nums) not in (4, 6):
        raise UsageError(f"expected 4 or 6 integers, got {len(nums)}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_arity(args)
        return args.func(args)
    except ParameterOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (InvalidParameters, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
