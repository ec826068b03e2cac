import argparse
from dataclasses import asdict
from logging import Logger

from gap import PreconditionViolated, omega_lower_bound
from ring import abs_sq
from result_store import get_result_store
from search import (
    SearchMode,
    find_m_tuples,
    get_available_strategies,
    quintuple_sweep,
    search_config_for,
)
from search.search_constants import DEFAULT_STRATEGY, DEFAULT_SWEEP_BOUND, DEFAULT_SWEEP_SIZE
from tuples import forbidden_double_regular

from .command_utils.command_constants import EXIT_OK, EXIT_VIOLATION, OUTCOME_OK, OUTCOME_VIOLATION
from .command_utils.element_syntax import UsageError, ring_spec
from .command_utils.report import emit, make_report, resolve_threads, tuple_payload

"""
Callback for the 'search' command: a bounded search in one ring (--d) or the sweep over every ring that matters at
this bound (--sweep). With --expect-empty any tuple found is a violation.
"""


def register(subparsers, parents):
    parser = subparsers.add_parser("search", parents=parents, help="Exhaustive bounded search for Diophantine m-tuples")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--d", type=ring_spec, help="Negative squarefree d of the ring")
    target.add_argument("--sweep", action="store_true", help="Search every ring that can hold a counterexample")
    parser.add_argument("--bound", type=int, default=DEFAULT_SWEEP_BOUND, help="Bound B on |z| (abs_sq <= B^2)")
    parser.add_argument("--min-bound", type=int, default=None, help="Lower bound B0 on |z| (abs_sq >= B0^2)")
    parser.add_argument("--size", type=int, default=DEFAULT_SWEEP_SIZE, help="Tuple size m")
    parser.add_argument("--mode", choices=[mode.value for mode in SearchMode], default=SearchMode.FIND_ALL.value)
    parser.add_argument("--strategy", choices=get_available_strategies(), default=DEFAULT_STRATEGY)
    parser.add_argument("--expect-empty", action="store_true", help="Exit 1 if any tuple is found")
    parser.set_defaults(callback=search_callback)


def _quadruple_checks(tuples):
    """Quadruples with every abs_sq >= 4 must satisfy |d| >= |ab|/8 and avoid the double-regular pairing."""
    omega_violations, pairing_violations = [], []
    for t in tuples:
        if t.size != 4 or any(abs_sq(e) < 4 for e in t.elems):
            continue
        try:
            if not omega_lower_bound(t).holds:
                omega_violations.append(tuple_payload(t))
        except PreconditionViolated:
            continue
        if forbidden_double_regular(*t.elems):
            pairing_violations.append(tuple_payload(t))
    return {"omega_violations": omega_violations, "double_regular_violations": pairing_violations}


def _check_bounds(args: argparse.Namespace):
    if args.bound < 1:
        raise UsageError(f"--bound must be at least 1, got {args.bound}")
    if args.size < 2:
        raise UsageError(f"--size must be at least 2, got {args.size}")
    if args.min_bound is not None and not 0 <= args.min_bound <= args.bound:
        raise UsageError(f"--min-bound must lie in [0, {args.bound}], got {args.min_bound}")


def search_callback(args: argparse.Namespace, logger: Logger) -> int:
    _check_bounds(args)
    threads = resolve_threads(args.threads)
    store = get_result_store(args.cache_dir)
    mode = SearchMode(args.mode)
    config = {
        "d": None if args.sweep else args.d.d,
        "sweep": args.sweep,
        "bound": args.bound,
        "min_bound": args.min_bound,
        "size": args.size,
        "mode": mode.value,
        "strategy": args.strategy,
        "expect_empty": args.expect_empty,
    }

    if args.sweep:
        sweep = quintuple_sweep(
            bound_sq=args.bound * args.bound,
            target_size=args.size,
            threads=threads,
            strategy=args.strategy,
            mode=mode,
            store=store,
            min_abs_sq=args.min_bound * args.min_bound if args.min_bound else 1,
        )
        tuples, count = sweep.tuples, sweep.total
        payload = {
            "count": count,
            "rings_covered": sweep.rings_covered,
            "ring_counts": {d: n for d, n in sweep.ring_counts.items() if n},
            "cutoffs": asdict(sweep.cutoffs),
            "rational_pass_all_real": sweep.rational_pass_all_real,
            "tuples": [tuple_payload(t) for t in tuples],
        }
    else:
        cfg = search_config_for(
            args.d, args.bound, args.size, args.min_bound, mode=mode, strategy=args.strategy, threads=threads
        )
        result = find_m_tuples(cfg, store)
        tuples, count = result.tuples, result.count
        payload = {"count": count, "tuples": [tuple_payload(t) for t in tuples]}

    checks = _quadruple_checks(tuples)
    payload["quadruple_checks"] = checks
    violated = any(checks.values()) or (args.sweep and not payload["rational_pass_all_real"])
    if args.expect_empty and count:
        logger.error(f"Expected no {args.size}-tuples with |z| <= {args.bound}, found {count}")
        violated = True

    emit(make_report("search", config, OUTCOME_VIOLATION if violated else OUTCOME_OK, payload), args.format)
    return EXIT_VIOLATION if violated else EXIT_OK
