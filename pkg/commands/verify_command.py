import argparse
from itertools import combinations
from logging import Logger

from gap import extension_conjecture_check, omega_lower_bound
from ring import abs_sq, describe
from tuples import (
    NotDiophantine,
    TupleError,
    forbidden_double_regular,
    is_regular_triple,
    make_tuple,
    products_not_squares,
)

from .command_utils.command_constants import EXIT_OK, EXIT_VIOLATION, OUTCOME_OK, OUTCOME_VIOLATION
from .command_utils.element_syntax import coordinates, elements, format_elements, ring_spec
from .command_utils.report import emit, make_report, tuple_payload

"""
Callback for the 'verify' command. Builds the tuple with every witness, then runs the checks that apply to its
triples and quadruples. A tuple that is not Diophantine, or a check that fails, is a violation.
"""


def register(subparsers, parents):
    parser = subparsers.add_parser("verify", parents=parents, help="Verify a Diophantine tuple and check its triples and quadruples")
    parser.add_argument("--d", type=ring_spec, required=True, help="Negative squarefree d of the ring")
    parser.add_argument("--elems", type=coordinates, required=True, help='Elements as "u,v;u,v;..."')
    parser.set_defaults(callback=verify_callback)


def _triple_checks(t):
    checks = []
    for a, b, c in combinations(t.elems, 3):
        checks.append(
            {
                "triple": [describe(a), describe(b), describe(c)],
                "products_not_squares": products_not_squares(a, b, c),
                "regular": is_regular_triple(a, b, c),
            }
        )
    return checks


def _quadruple_checks(t):
    checks = []
    for quad in combinations(t.elems, 4):
        if any(abs_sq(e) < 4 for e in quad):
            continue
        sub = make_tuple(t.spec, quad)
        omega = omega_lower_bound(sub)
        conjecture = extension_conjecture_check(sub)
        checks.append(
            {
                "quadruple": [describe(e) for e in sub.elems],
                "omega_holds": omega.holds,
                "omega_margin": omega.margin,
                "forbidden_double_regular": forbidden_double_regular(*sub.elems),
                "conjecture_exempt": conjecture.exempt,
                "conjecture_holds": conjecture.holds,
                "conjecture_margin": conjecture.margin,
            }
        )
    return checks


def verify_callback(args: argparse.Namespace, logger: Logger) -> int:
    spec = args.d
    elems = elements(spec, args.elems)
    config = {"d": spec.d, "elems": format_elements(elems)}

    try:
        t = make_tuple(spec, elems)
    except NotDiophantine as e:
        logger.error(e)
        payload = {"failed_pair": list(e.pair), "reason": str(e)}
        emit(make_report("verify", config, OUTCOME_VIOLATION, payload), args.format)
        return EXIT_VIOLATION
    except TupleError as e:
        logger.error(e)
        emit(make_report("verify", config, OUTCOME_VIOLATION, {"reason": str(e)}), args.format)
        return EXIT_VIOLATION

    triples = _triple_checks(t)
    quadruples = _quadruple_checks(t)

    violated = any(not all(check["products_not_squares"].values()) for check in triples) or any(
        not check["omega_holds"] or check["forbidden_double_regular"] for check in quadruples
    )
    payload = {"tuple": tuple_payload(t), "triples": triples, "quadruples": quadruples}
    emit(make_report("verify", config, OUTCOME_VIOLATION if violated else OUTCOME_OK, payload), args.format)
    return EXIT_VIOLATION if violated else EXIT_OK
