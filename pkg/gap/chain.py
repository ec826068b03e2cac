"""
The cascade of lower bounds on abs_sq(a_i) for an m-tuple sorted by absolute value, and its collision with the gap
principle.

The omega bound on {a_k, ..., a_{k+3}} gives abs_sq(a_{k+3}) >= abs_sq(a_k)^2 / 64. Applied along 7, 10, ..., 25 and
25, 28, ..., 43 it forces abs_sq(a_43) >= abs_sq(a_25)^64 / 64^63, while the gap principle on {a4, a7, a25, a_43}
caps abs_sq(a_43) below K^2 abs_sq(a_25)^50.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from sympy import integer_nthroot

from .gap_constants import (
    CHAIN_FIRST_STEP,
    CHAIN_PIVOT,
    CHAIN_SEED_BOUNDS,
    CHAIN_STRIDE,
    GAP_C_EXPONENT,
    K_PROOF_BASE,
    OMEGA_DIVISOR_SQ,
    QUOTED_A25_THRESHOLD,
)
from .gap_errors import NoContradiction
from .gap_principle import k_constant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainCertificate:
    m: int
    k_base: int
    lower_bounds: Dict[int, int]
    upper_bound_rhs: Optional[int]
    contradiction_at: Optional[int]
    # pivot index 25 + 3j -> lb25^(2^j - 50) > 64^(2^j - 1) K^2
    relative_checks: Dict[int, bool] = field(default_factory=dict)
    gap_hypotheses: Dict[str, bool] = field(default_factory=dict)
    a25_threshold: Optional[int] = None
    quoted_threshold: int = QUOTED_A25_THRESHOLD

    @property
    def a25_exceeds_threshold(self) -> Optional[bool]:
        if self.a25_threshold is None or CHAIN_PIVOT not in self.lower_bounds:
            return None
        return self.lower_bounds[CHAIN_PIVOT] >= self.a25_threshold**2


def _ceil_div(n: int, k: int) -> int:
    return -(-n // k)


def _step_targets(m: int) -> Dict[int, int]:
    """target index -> source index along the omega-bound schedule."""
    targets = {}
    index = CHAIN_FIRST_STEP
    while index + CHAIN_STRIDE <= m:
        targets[index + CHAIN_STRIDE] = index
        index += CHAIN_STRIDE
    return targets


def chain_lower_bounds(m: int) -> Dict[int, int]:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    targets = _step_targets(m)
    bounds = {}
    for index in range(1, m + 1):
        previous = bounds.get(index - 1, 1)
        if index in targets:
            bound = _ceil_div(bounds[targets[index]] ** 2, OMEGA_DIVISOR_SQ)
        else:
            bound = CHAIN_SEED_BOUNDS.get(index, 1)
        bounds[index] = max(bound, previous)
    return bounds


def a25_threshold(k: int) -> int:
    """Smallest integer T with T^14 >= 8^63 K, so |a25| >= T makes |a25|^64 / 8^63 exceed K |a25|^50."""
    target = 8**63 * k
    root, is_exact = integer_nthroot(target, 14)
    return root if is_exact else root + 1


def chain_certificate(m: int, k_base: int = K_PROOF_BASE) -> ChainCertificate:
    k = k_constant(k_base)
    bounds = chain_lower_bounds(m)

    upper_bound_rhs = None
    contradiction_at = None
    relative_checks = {}
    hypotheses = {}
    if m >= CHAIN_PIVOT:
        lb4, lb5, lb7, lb25 = bounds[4], bounds[5], bounds[7], bounds[CHAIN_PIVOT]
        upper_bound_rhs = k * k * lb25**GAP_C_EXPONENT
        for index in range(CHAIN_PIVOT + 1, m + 1):
            if bounds[index] > upper_bound_rhs:
                contradiction_at = index
                break
        for index in range(CHAIN_PIVOT + CHAIN_STRIDE, m + 1, CHAIN_STRIDE):
            growth = 2 ** ((index - CHAIN_PIVOT) // CHAIN_STRIDE)
            exponent = growth - GAP_C_EXPONENT
            relative_checks[index] = exponent > 0 and lb25**exponent > OMEGA_DIVISOR_SQ ** (growth - 1) * k * k
        # gap-principle hypotheses on {a4, a7, a25}, each from lower bounds that only grow the left-hand side
        hypotheses = {
            "|a4 a25| >= 9": lb4 * lb25 >= 81,
            "|a7| >= 3/2 |a4|": 4 * lb5 >= 9 * OMEGA_DIVISOR_SQ,
            "|a7| > 5": lb7 > 25,
            "|a25| > |a7|^15": lb7**49 > OMEGA_DIVISOR_SQ**63,
        }

    certificate = ChainCertificate(
        m=m,
        k_base=k_base,
        lower_bounds=bounds,
        upper_bound_rhs=upper_bound_rhs,
        contradiction_at=contradiction_at,
        relative_checks=relative_checks,
        gap_hypotheses=hypotheses,
        a25_threshold=a25_threshold(k),
    )
    if contradiction_at is None:
        raise NoContradiction(certificate)
    logger.info(f"Lower-bound chain contradicts the gap principle at a_{contradiction_at} (K = {k_base}^20)")
    return certificate
