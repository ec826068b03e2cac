# A base class for clique strategies, defining the interface shared by the search and its oracle.

from collections import Counter
from typing import Iterator, Sequence, Tuple

from ..pair_graph import PairGraph


class CliqueStrategy(object):
    name = ""

    def root_order(self, graph: PairGraph) -> Sequence[int]:
        """Vertices in the order the outer loop visits them; workers each take a slice of it."""
        raise NotImplementedError("Subclass must implement root_order")

    def cliques_from_roots(
        self, graph: PairGraph, k: int, roots: Sequence[int], counter: Counter
    ) -> Iterator[Tuple[int, ...]]:
        """
        Yield k-cliques (sorted vertex index tuples) reachable from the given roots. A clique may be yielded more
        than once; callers deduplicate.
        """
        raise NotImplementedError("Subclass must implement cliques_from_roots")

    def cliques(self, graph: PairGraph, k: int, counter: Counter) -> Iterator[Tuple[int, ...]]:
        yield from self.cliques_from_roots(graph, k, self.root_order(graph), counter)
