"""
Simultaneous approximations of theta_1 = +-(s/a) sqrt(a/c) and theta_2 = +-(t/b) sqrt(b/c) by sx/(az) and ty/(bz).

For q = sx/(az) the two signs of theta give |theta - q|^2 |theta + q|^2 = |s|^4 |c - a|^2 / (|a|^4 |c|^2 |z|^4) and
|theta - q|^2 + |theta + q|^2 = 2(|theta|^2 + |q|^2), so the nearer distance is the smaller root of a real quadratic
whose coefficients are norms. Everything below is evaluated on those norms with certified intervals.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from pell import PellSolution, build_system
from ring import abs_sq

from .certified import Enclosure, decide, enclose, exact, less_equal, strictly_less
from .gap_constants import APPROXIMATION_FACTOR
from .gap_errors import PreconditionViolated

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ApproximationReport:
    first_holds: bool
    second_holds: bool
    margins: Dict[str, Enclosure]


def _nearer_distance_sq(ctx, n_root: int, n_elem: int, n_diff: int, n_c: int, n_z: int, n_unknown: int):
    # n_root = N(s), n_elem = N(a), n_diff = N(c - a), n_unknown = N(x) for theta_1
    product = exact(ctx, Fraction(n_root**2 * n_diff, n_elem**2 * n_c * n_z**2))
    total = 2 * (n_root / ctx.sqrt(exact(ctx, n_elem * n_c)) + exact(ctx, Fraction(n_root * n_unknown, n_elem * n_z)))
    discriminant = total * total - 4 * product
    if (discriminant.a < 0) is True:
        discriminant = ctx.mpf([0, discriminant.b])
    return 2 * product / (total + ctx.sqrt(discriminant))


def _first_bound_sq(ctx, n_root: int, n_elem: int, n_diff: int, n_c: int, n_z: int):
    return exact(ctx, Fraction(n_root * n_diff, n_elem * n_z**2)) / ctx.sqrt(exact(ctx, n_elem * n_c))


def approx_check(a, b, c, sol: PellSolution) -> ApproximationReport:
    system = build_system(a, b, c)
    a, b, c = system.a, system.b, system.c
    failed = []
    if abs_sq(c) <= 16 * abs_sq(b):
        failed.append("|c| > 4|b|")
    if abs_sq(a) < 4:
        failed.append("|a| >= 2")
    if not (system.solves_first(sol.z, sol.x) and system.solves_second(sol.z, sol.y)):
        failed.append("(x, y, z) solves the Pell system")
    if failed:
        raise PreconditionViolated(failed)

    n_a, n_b, n_c, n_z = abs_sq(a), abs_sq(b), abs_sq(c), abs_sq(sol.z)
    first = (abs_sq(system.s), n_a, abs_sq(c - a), n_c, n_z, abs_sq(sol.x))
    second = (abs_sq(system.t), n_b, abs_sq(c - b), n_c, n_z, abs_sq(sol.y))
    quoted_bound_sq = APPROXIMATION_FACTOR**2 * Fraction(n_c, n_a * n_z**2)

    def distance_gap(args):
        return lambda ctx: _first_bound_sq(ctx, *args[:5]) - _nearer_distance_sq(ctx, *args)

    def bound_gap(args):
        return lambda ctx: exact(ctx, quoted_bound_sq) - _first_bound_sq(ctx, *args[:5])

    verdicts = {}
    margins = {}
    for name, args in (("theta1", first), ("theta2", second)):
        distance_ok = decide(
            lambda ctx: less_equal(_nearer_distance_sq(ctx, *args), _first_bound_sq(ctx, *args[:5])),
            f"{name} distance within its bound",
        )
        bound_ok = decide(
            lambda ctx: strictly_less(_first_bound_sq(ctx, *args[:5]), exact(ctx, quoted_bound_sq)),
            f"{name} bound below (21/16)|c|/|a| |z|^-2",
        )
        verdicts[name] = distance_ok and bound_ok
        margins[f"{name}_distance_margin_sq"] = enclose(distance_gap(args), f"{name} distance margin")
        margins[f"{name}_bound_margin_sq"] = enclose(bound_gap(args), f"{name} bound margin")
        logger.debug(f"{name}: distance ok = {distance_ok}, bound ok = {bound_ok}")

    return ApproximationReport(first_holds=verdicts["theta1"], second_holds=verdicts["theta2"], margins=margins)
