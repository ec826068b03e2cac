from collections import Counter
from itertools import combinations
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from ..pair_graph import PairGraph
from .base_strategy import CliqueStrategy


class PivotStrategy(CliqueStrategy):
    """
    Bron-Kerbosch with Tomita pivoting, rooted at each vertex of a degeneracy order: the root's later neighbours are
    candidates and its earlier neighbours are excluded, so every maximal clique is reported from exactly one root.
    k-cliques are the k-subsets of maximal cliques with at least k vertices.
    """

    name = "pivot"

    def root_order(self, graph: PairGraph) -> List[int]:
        return graph.degeneracy_order()

    def cliques_from_roots(
        self, graph: PairGraph, k: int, roots: Sequence[int], counter: Counter
    ) -> Iterator[Tuple[int, ...]]:
        position = {v: i for i, v in enumerate(self.root_order(graph))}
        for root in roots:
            neighbours = graph.adjacency[root]
            later = frozenset(w for w in neighbours if position[w] > position[root])
            earlier = frozenset(w for w in neighbours if position[w] < position[root])
            yield from self._expand(graph, k, [root], later, earlier, counter)

    def _expand(
        self,
        graph: PairGraph,
        k: int,
        clique: List[int],
        candidates: FrozenSet[int],
        excluded: FrozenSet[int],
        counter: Counter,
    ) -> Iterator[Tuple[int, ...]]:
        counter["cliques_explored"] += 1
        if len(clique) + len(candidates) < k:
            return
        if not candidates:
            if not excluded:
                yield from combinations(sorted(clique), k)
            return
        adjacency = graph.adjacency
        pivot = max(candidates | excluded, key=lambda u: (len(candidates & adjacency[u]), -u))
        for v in sorted(candidates - adjacency[pivot]):
            yield from self._expand(
                graph, k, clique + [v], candidates & adjacency[v], excluded & adjacency[v], counter
            )
            candidates = candidates - {v}
            excluded = excluded | {v}
