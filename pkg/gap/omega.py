import logging
from dataclasses import dataclass

from ring import abs_sq
from tuples import DiophTuple, quadruple_extension_candidates

from .gap_constants import CONJECTURE_FACTOR_SQ, OMEGA_DIVISOR_SQ, OMEGA_MIN_ABS_SQ
from .gap_errors import PreconditionViolated

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OmegaReport:
    holds: bool
    margin: int


@dataclass(frozen=True)
class ConjectureReport:
    exempt: bool
    holds: bool
    margin: int


def _check_quadruple(quad: DiophTuple):
    failed = []
    if quad.size != 4:
        failed.append("quadruple")
    elif any(abs_sq(e) < OMEGA_MIN_ABS_SQ for e in quad.elems):
        failed.append("|a| >= 2")
    if failed:
        raise PreconditionViolated(failed)


def omega_lower_bound(quad: DiophTuple) -> OmegaReport:
    """64 abs_sq(d) >= abs_sq(a) abs_sq(b) for a quadruple sorted by absolute value, i.e. |d| >= |ab| / 8."""
    _check_quadruple(quad)
    a, b, _, d = quad.elems
    margin = OMEGA_DIVISOR_SQ * abs_sq(d) - abs_sq(a) * abs_sq(b)
    if margin < 0:
        logger.error(f"Lower bound |d| >= |ab|/8 fails for {quad}")
    return OmegaReport(holds=margin >= 0, margin=margin)


def extension_conjecture_check(quad: DiophTuple) -> ConjectureReport:
    """
    The stronger |d| >= 4|ab| expected whenever d is not one of a + b + c + 2abc +- 2rst. Violations are reported,
    not raised: the statement is conjectural.
    """
    _check_quadruple(quad)
    a, b, c, d = quad.elems
    candidates = quadruple_extension_candidates(a, b, c)
    exempt = d in candidates.verified or d in candidates.rejected
    margin = abs_sq(d) - CONJECTURE_FACTOR_SQ * abs_sq(a) * abs_sq(b)
    holds = exempt or margin >= 0
    if not holds:
        logger.warning(f"Quadruple {quad} has |d| < 4|ab| without being a standard extension")
    return ConjectureReport(exempt=exempt, holds=holds, margin=margin)
