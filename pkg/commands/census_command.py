import argparse
from logging import Logger

from ring import abs_sq, canonical_key, describe
from tuples import (
    NotDiophantine,
    double_regular_census,
    double_regular_factor_cases,
    forbidden_double_regular,
    make_tuple,
)

from .command_utils.command_constants import EXIT_OK, EXIT_VIOLATION, OUTCOME_OK, OUTCOME_VIOLATION
from .command_utils.element_syntax import UsageError, format_elements, ring_spec
from .command_utils.report import emit, make_report, tuple_payload

"""
Callback for the 'census' command: every triple {a, b, a + b +- 2r} whose pair {a, b} lies in the annulus and has
both regular extensions, and for each such pair whether the double-regular quadruple {a, b, a+b-2r, a+b+2r} is
Diophantine. With every element of abs_sq >= 4 it never should be.

The factor cases close the argument for the ring: every way of splitting 3 as (a - b - z)(a - b + z) bounds c and d,
and the quadruples left inside that bound are listed and checked.
"""


def register(subparsers, parents):
    parser = subparsers.add_parser("census", parents=parents, help="Census of double-regular triples in an annulus")
    parser.add_argument("--d", type=ring_spec, required=True, help="Negative squarefree d of the ring")
    parser.add_argument("--min-abs-sq", type=int, default=4, help="Smallest abs_sq of a and b")
    parser.add_argument("--max-abs-sq", type=int, default=6, help="Largest abs_sq of a and b")
    parser.set_defaults(callback=census_callback)


def _pairings(triples):
    """Group the census by its pair {a, b}: the two triples of a pair differ only in the third element."""
    by_pair = {}
    for t in triples:
        for i in range(3):
            pair = tuple(e for j, e in enumerate(t.elems) if j != i)
            by_pair.setdefault(pair, set()).add(t.elems[i])
    return {
        pair: tuple(sorted(thirds, key=canonical_key))
        for pair, thirds in by_pair.items()
        if len(thirds) == 2 and forbidden_double_regular(*pair, *thirds)
    }


def _factor_case_payload(case):
    return {
        "factors": [describe(x) for x in case.factors],
        "a_minus_b": describe(case.difference),
        "z": describe(case.z),
        "cd": describe(case.cd),
        "excluded": case.excluded,
        "max_abs_sq_c": case.max_abs_sq_c,
        "quadruples": [[describe(x) for x in quadruple] for quadruple in case.quadruples],
        "diophantine": [tuple_payload(t) for t in case.diophantine],
    }


def census_callback(args: argparse.Namespace, logger: Logger) -> int:
    spec = args.d
    if args.min_abs_sq < 1 or args.max_abs_sq < args.min_abs_sq:
        raise UsageError("need 1 <= --min-abs-sq <= --max-abs-sq")
    config = {"d": spec.d, "min_abs_sq": args.min_abs_sq, "max_abs_sq": args.max_abs_sq}
    triples = double_regular_census(spec, args.min_abs_sq, args.max_abs_sq)

    quadruples = []
    violated = False
    for pair, thirds in sorted(_pairings(triples).items(), key=lambda item: format_elements(item[0])):
        elems = (*pair, *thirds)
        try:
            quad = make_tuple(spec, elems)
        except NotDiophantine as e:
            quadruples.append({"elems": [describe(x) for x in elems], "diophantine": False, "reason": str(e)})
            continue
        if all(abs_sq(x) >= 4 for x in quad.elems):
            logger.error(f"Double-regular quadruple {quad} is Diophantine")
            violated = True
        quadruples.append({"elems": [describe(x) for x in quad.elems], "diophantine": True, "reason": None})

    cases = double_regular_factor_cases(spec, args.min_abs_sq)
    if args.min_abs_sq >= 4 and any(case.diophantine for case in cases):
        violated = True

    payload = {
        "count": len(triples),
        "triples": [tuple_payload(t) for t in triples],
        "double_regular_quadruples": quadruples,
        "factor_cases": [_factor_case_payload(case) for case in cases],
    }
    emit(make_report("census", config, OUTCOME_VIOLATION if violated else OUTCOME_OK, payload), args.format)
    return EXIT_VIOLATION if violated else EXIT_OK
