"""
The quintuple sweep over every ring in which a bounded search can differ from the search over rational integers.

An element with abs_sq(z) <= B^2 and nonzero v needs |d| <= 4B^2 - 1 in the half basis ((2u - v)^2 + |d| v^2 <= 4B^2
with 2u - v odd when v is odd) and |d| <= B^2 otherwise. A non-real witness y sqrt(d) for ab + 1 with |ab + 1| <= B^2 + 1
needs |d| <= B^2 + 1. So rings with |d| <= 4B^2 are searched one by one, and every ring beyond behaves like the first
squarefree |d| > 4B^2, which is searched once as the rational-integer pass.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ring import RingSpec, enumerate_up_to, is_squarefree
from tuples import DiophTuple

from .search_config import SearchConfig, SearchMode
from .search_constants import DEFAULT_STRATEGY, DEFAULT_SWEEP_BOUND, DEFAULT_SWEEP_SIZE, QUOTED_REAL_CUTOFF
from .tuple_search import find_m_tuples

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CutoffRecord:
    bound_sq: int
    half_basis_cutoff: int
    plain_cutoff: int
    witness_cutoff: int
    swept_up_to: int
    quoted_cutoff: int
    rational_representative: int


@dataclass
class SweepReport:
    bound_sq: int
    target_size: int
    cutoffs: CutoffRecord
    ring_counts: Dict[int, int] = field(default_factory=dict)
    tuples: List[DiophTuple] = field(default_factory=list)
    rational_pass_all_real: bool = True

    @property
    def rings_covered(self) -> int:
        return len(self.ring_counts)

    @property
    def total(self) -> int:
        return sum(self.ring_counts.values())


def rational_representative(bound_sq: int) -> RingSpec:
    n = 4 * bound_sq + 1
    while not is_squarefree(n):
        n += 1
    return RingSpec(-n)


def cutoff_record(bound_sq: int) -> CutoffRecord:
    return CutoffRecord(
        bound_sq=bound_sq,
        half_basis_cutoff=4 * bound_sq - 1,
        plain_cutoff=bound_sq,
        witness_cutoff=bound_sq + 1,
        swept_up_to=4 * bound_sq,
        quoted_cutoff=QUOTED_REAL_CUTOFF,
        rational_representative=rational_representative(bound_sq).d,
    )


def sweep_rings(bound_sq: int) -> List[RingSpec]:
    rings = [RingSpec(-n) for n in range(1, 4 * bound_sq + 1) if is_squarefree(n)]
    return rings + [rational_representative(bound_sq)]


def _sweep_one(cfg: SearchConfig, store):
    result = find_m_tuples(cfg, store)
    return cfg.spec.d, result.count, result.tuples


def quintuple_sweep(
    bound_sq: int = DEFAULT_SWEEP_BOUND**2,
    target_size: int = DEFAULT_SWEEP_SIZE,
    threads: int = 1,
    strategy: str = DEFAULT_STRATEGY,
    mode: SearchMode = SearchMode.FIND_ALL,
    store=None,
    rings: Optional[List[RingSpec]] = None,
    min_abs_sq: int = 1,
) -> SweepReport:
    """Run the bounded search in every ring of sweep_rings(bound_sq), in parallel over rings."""
    rings = rings if rings is not None else sweep_rings(bound_sq)
    report = SweepReport(bound_sq=bound_sq, target_size=target_size, cutoffs=cutoff_record(bound_sq))
    representative = rational_representative(bound_sq)
    report.rational_pass_all_real = all(z.v == 0 for z in enumerate_up_to(representative, bound_sq))
    if not report.rational_pass_all_real:
        logger.error(f"Ring d={representative.d} has non-real elements with abs_sq <= {bound_sq}")

    configs = [
        SearchConfig(
            spec=spec,
            max_abs_sq=bound_sq,
            target_size=target_size,
            mode=mode,
            min_abs_sq=min_abs_sq,
            strategy=strategy,
        )
        for spec in rings
    ]
    logger.info(f"Sweeping {len(configs)} rings at B^2={bound_sq}, m={target_size} with {threads} workers")
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            outcomes = list(executor.map(_sweep_one, configs, [store] * len(configs)))
    else:
        outcomes = [_sweep_one(cfg, store) for cfg in configs]

    for d, count, tuples in sorted(outcomes, key=lambda outcome: -outcome[0]):
        report.ring_counts[d] = count
        report.tuples.extend(tuples)
        if count:
            logger.info(f"d={d}: {count} tuples of size {target_size}")
    return report
