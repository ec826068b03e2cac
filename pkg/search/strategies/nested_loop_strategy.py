from collections import Counter
from typing import Iterator, List, Sequence, Tuple

from tuples import is_diophantine_pair

from ..pair_graph import PairGraph
from .base_strategy import CliqueStrategy


class NestedLoopStrategy(CliqueStrategy):
    """
    The naive oracle: increasing index tuples grown one vertex at a time, each new vertex checked against every
    member with is_diophantine_pair. Ignores the graph's edges and witnesses.
    """

    name = "nested-loop"

    def root_order(self, graph: PairGraph) -> List[int]:
        return list(range(len(graph.vertices)))

    def cliques_from_roots(
        self, graph: PairGraph, k: int, roots: Sequence[int], counter: Counter
    ) -> Iterator[Tuple[int, ...]]:
        for root in roots:
            yield from self._extend(graph, k, [root], counter)

    def _extend(self, graph: PairGraph, k: int, chosen: List[int], counter: Counter) -> Iterator[Tuple[int, ...]]:
        counter["cliques_explored"] += 1
        if len(chosen) == k:
            yield tuple(chosen)
            return
        vertices = graph.vertices
        for j in range(chosen[-1] + 1, len(vertices)):
            if all(is_diophantine_pair(vertices[i], vertices[j]) is not None for i in chosen):
                yield from self._extend(graph, k, chosen + [j], counter)
