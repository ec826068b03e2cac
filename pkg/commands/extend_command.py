import argparse
import math
from logging import Logger

from pell import build_system, extensions_from_orbit, first_equation_seeds
from ring import abs_sq, canonical_key, describe
from search import extend_tuple
from search.search_constants import DEFAULT_ENUMERATION_CAP
from tuples import TupleError, make_tuple, quadruple_extension_candidates

from .command_utils.command_constants import EXIT_OK, EXIT_VIOLATION, OUTCOME_OK, OUTCOME_VIOLATION
from .command_utils.element_syntax import UsageError, coordinates, elements, format_elements, ring_spec
from .command_utils.report import emit, make_report, tuple_payload

"""
Callback for the 'extend' command. Every extension e with abs_sq(e) <= min(B^2, cap) is enumerated exhaustively;
for triples the Pell orbits of the first equation reach further, up to |d| <= B, and the two standard extensions
a + b + c + 2abc +- 2rst are listed with their verdicts.
"""


def register(subparsers, parents):
    parser = subparsers.add_parser("extend", parents=parents, help="Extend a Diophantine tuple by one element")
    parser.add_argument("--d", type=ring_spec, required=True, help="Negative squarefree d of the ring")
    parser.add_argument("--elems", type=coordinates, required=True, help='Elements as "u,v;u,v;..."')
    parser.add_argument("--bound", type=int, required=True, help="Bound B on |e| for the new element")
    parser.add_argument(
        "--enumeration-cap",
        type=int,
        default=DEFAULT_ENUMERATION_CAP,
        help="Largest abs_sq covered by exhaustive enumeration",
    )
    parser.add_argument("--seed-bound", type=int, default=None, help="abs_sq bound on Pell seeds (default abs_sq(c))")
    parser.set_defaults(callback=extend_callback)


def _orbit_extensions(t, bound_sq: int, seed_bound):
    system = build_system(*t.elems)
    seed_bound = seed_bound if seed_bound is not None else abs_sq(system.c)
    z_bound = math.isqrt(abs_sq(system.c) * bound_sq) + 2
    found = {}
    seeds = first_equation_seeds(system, seed_bound)
    for seed in seeds:
        for e in extensions_from_orbit(system, seed, z_bound):
            if abs_sq(e) <= bound_sq:
                found[canonical_key(e)] = e
    return len(seeds), [found[key] for key in sorted(found)]


def extend_callback(args: argparse.Namespace, logger: Logger) -> int:
    spec = args.d
    if args.bound < 1 or args.enumeration_cap < 1:
        raise UsageError("--bound and --enumeration-cap must be positive")
    given = elements(spec, args.elems)
    bound_sq = args.bound * args.bound
    config = {
        "d": spec.d,
        "elems": format_elements(given),
        "bound": args.bound,
        "enumeration_cap": args.enumeration_cap,
        "seed_bound": args.seed_bound,
    }

    try:
        t = make_tuple(spec, given)
    except TupleError as e:
        logger.error(e)
        emit(make_report("extend", config, OUTCOME_VIOLATION, {"reason": str(e)}), args.format)
        return EXIT_VIOLATION

    complete_within = min(bound_sq, args.enumeration_cap)
    enumerated = extend_tuple(t, complete_within)
    payload = {
        "tuple": tuple_payload(t),
        "complete_within_abs_sq": complete_within,
        "extensions": [describe(e) for e in enumerated],
        "extensions_arg": format_elements(enumerated),
    }
    violated = False

    if t.size == 3:
        seed_count, orbit_found = _orbit_extensions(t, bound_sq, args.seed_bound)
        candidates = quadruple_extension_candidates(*t.elems)
        payload["pell_seeds"] = seed_count
        payload["orbit_extensions"] = [describe(e) for e in orbit_found]
        payload["candidates"] = {
            "verified": [describe(e) for e in candidates.verified],
            "rejected": [describe(e) for e in candidates.rejected],
        }
        # enumeration is exhaustive inside complete_within
        missed = [e for e in orbit_found if abs_sq(e) <= complete_within and e not in enumerated]
        if missed:
            logger.error(f"Enumeration missed orbit extensions {[describe(e) for e in missed]}")
            payload["enumeration_missed"] = [describe(e) for e in missed]
            violated = True
        outside_seeds = [e for e in enumerated if e not in orbit_found]
        if outside_seeds:
            logger.warning(f"Extensions {[describe(e) for e in outside_seeds]} lie on orbits beyond --seed-bound")
        payload["beyond_seed_bound"] = [describe(e) for e in outside_seeds]

    emit(make_report("extend", config, OUTCOME_VIOLATION if violated else OUTCOME_OK, payload), args.format)
    return EXIT_VIOLATION if violated else EXIT_OK
