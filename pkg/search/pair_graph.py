"""
The Diophantine pair graph on a bounded set of ring elements: vertices are the nonzero elements with
min_abs_sq <= abs_sq <= max_abs_sq in canonical order, and {a, b} is an edge iff ab + 1 is a square.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from ring import RingElem, RingSpec, abs_sq, abs_sq_coords, enumerate_up_to, mul_coords
from tuples import canonical_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairGraph:
    spec: RingSpec
    vertices: Tuple[RingElem, ...]
    adjacency: Tuple[FrozenSet[int], ...]
    witnesses: Dict[Tuple[int, int], RingElem]
    pairs_tested: int

    @property
    def edge_count(self) -> int:
        return len(self.witnesses)

    def witness(self, i: int, j: int) -> RingElem:
        return self.witnesses[(min(i, j), max(i, j))]

    def degeneracy_order(self) -> List[int]:
        """Repeatedly remove a vertex of minimum remaining degree, lowest index first on ties."""
        degree = {v: len(neighbours) for v, neighbours in enumerate(self.adjacency)}
        order = []
        while degree:
            v = min(degree, key=lambda w: (degree[w], w))
            order.append(v)
            del degree[v]
            for w in self.adjacency[v]:
                if w in degree:
                    degree[w] -= 1
        return order


def build_pair_graph(spec: RingSpec, min_abs_sq: int, max_abs_sq: int) -> PairGraph:
    vertices = tuple(z for z in enumerate_up_to(spec, max_abs_sq) if abs_sq(z) >= min_abs_sq)
    adjacency = [set() for _ in vertices]
    witnesses = {}
    pairs_tested = 0
    for i, a in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            b = vertices[j]
            pairs_tested += 1
            u, v = mul_coords(spec, a.u, a.v, b.u, b.v)
            n = abs_sq_coords(spec, u + 1, v)
            # a square has a square norm
            root = math.isqrt(n)
            if root * root != n:
                continue
            r = canonical_witness(RingElem(u + 1, v, spec))
            if r is None:
                continue
            adjacency[i].add(j)
            adjacency[j].add(i)
            witnesses[(i, j)] = r
    logger.debug(
        f"Pair graph for d={spec.d}, {min_abs_sq} <= abs_sq <= {max_abs_sq}: "
        f"{len(vertices)} vertices, {len(witnesses)} edges"
    )
    return PairGraph(
        spec=spec,
        vertices=vertices,
        adjacency=tuple(frozenset(neighbours) for neighbours in adjacency),
        witnesses=witnesses,
        pairs_tested=pairs_tested,
    )