import logging
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from ring import RingElem, abs_sq, abs_sq_coords, canonical_key, iter_box, mul_coords, try_divide, zero
from tuples import DiophTuple, canonical_witness, make_tuple

from .pair_graph import PairGraph, build_pair_graph
from .search_config import SearchConfig, SearchMode, SearchResult, SearchStats
from .strategies import get_strategy

logger = logging.getLogger(__name__)

Clique = Tuple[int, ...]


def _search_roots(graph: PairGraph, strategy_name: str, k: int, roots: Sequence[int]) -> Tuple[List[Clique], Counter]:
    counter = Counter()
    found = set(get_strategy(strategy_name).cliques_from_roots(graph, k, roots, counter))
    return sorted(found), counter


def _all_cliques(graph: PairGraph, cfg: SearchConfig, counter: Counter) -> List[Clique]:
    roots = list(get_strategy(cfg.strategy).root_order(graph))
    workers = min(cfg.threads, len(roots))
    if workers <= 1:
        cliques, explored = _search_roots(graph, cfg.strategy, cfg.target_size, roots)
        counter.update(explored)
        return cliques

    # interleaved slices keep the expensive early roots of the order spread across workers
    chunks = [roots[i::workers] for i in range(workers)]
    found = set()
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_search_roots, graph, cfg.strategy, cfg.target_size, chunk) for chunk in chunks]
        for future in futures:
            cliques, explored = future.result()
            found.update(cliques)
            counter.update(explored)
    return sorted(found)


def find_m_tuples(cfg: SearchConfig, store=None) -> SearchResult:
    """
    Every Diophantine cfg.target_size-tuple with min_abs_sq <= abs_sq <= max_abs_sq in cfg.spec, once each, sorted by
    canonical order. Cached results are re-verified by the store before they are returned.
    """
    started = time.perf_counter()
    spec, k = cfg.spec, cfg.target_size
    if store is not None and cfg.cacheable:
        cached = store.load(spec, cfg.max_abs_sq, k)
        if cached is not None:
            logger.info(f"Cache hit for d={spec.d}, B^2={cfg.max_abs_sq}, m={k}: {len(cached)} tuples")
            stats = SearchStats(cached=True, elapsed_seconds=time.perf_counter() - started)
            return SearchResult(config=cfg, tuples=cached, count=len(cached), stats=stats)

    graph = build_pair_graph(spec, cfg.min_abs_sq, cfg.max_abs_sq)
    counter = Counter()
    if cfg.mode == SearchMode.FIND_FIRST:
        first = next(iter(get_strategy(cfg.strategy).cliques(graph, k, counter)), None)
        cliques = [first] if first is not None else []
    else:
        cliques = _all_cliques(graph, cfg, counter)

    tuples = []
    if cfg.mode != SearchMode.COUNT:
        tuples = sorted(
            (make_tuple(spec, [graph.vertices[i] for i in clique]) for clique in cliques), key=lambda t: t.key()
        )
    stats = SearchStats(
        elements=len(graph.vertices),
        pairs_tested=graph.pairs_tested,
        edges=graph.edge_count,
        cliques_explored=counter["cliques_explored"],
        elapsed_seconds=time.perf_counter() - started,
    )
    logger.info(
        f"d={spec.d}, B^2={cfg.max_abs_sq}, m={k}: {len(cliques)} tuples from {stats.elements} elements, "
        f"{stats.edges} pairs, {stats.cliques_explored} search nodes in {stats.elapsed_seconds:.2f}s"
    )
    if store is not None and cfg.cacheable:
        store.save(spec, cfg.max_abs_sq, k, tuples)
    return SearchResult(config=cfg, tuples=tuples, count=len(cliques), stats=stats)


def _extends(member: RingElem, e: RingElem) -> bool:
    spec = e.spec
    u, v = mul_coords(spec, member.u, member.v, e.u, e.v)
    n = abs_sq_coords(spec, u + 1, v)
    root = math.isqrt(n)
    if root * root != n:
        return False
    return canonical_witness(RingElem(u + 1, v, spec)) is not None


def extend_tuple(t: DiophTuple, max_abs_sq: int) -> List[RingElem]:
    """
    Every e outside t with abs_sq(e) <= max_abs_sq such that t + {e} is Diophantine.

    e is found through its witness for the smallest member a: ae + 1 = r^2 with abs_sq(r) <= sqrt(abs_sq(a) max) + 1,
    so enumerating r and dividing r^2 - 1 by a covers the whole box.
    """
    if max_abs_sq < 1:
        return []
    spec = t.spec
    anchor, others = t.elems[0], t.elems[1:]
    root_bound = math.isqrt(abs_sq(anchor) * max_abs_sq) + 2
    found = {}
    for r in [zero(spec), *iter_box(spec, root_bound)]:
        e = try_divide(r * r - 1, anchor)
        if e is None or not e or abs_sq(e) > max_abs_sq or e in t.elems:
            continue
        if all(_extends(member, e) for member in others):
            found[canonical_key(e)] = e
    extensions = [found[key] for key in sorted(found)]
    for e in extensions:
        make_tuple(spec, (*t.elems, e))
    logger.debug(f"{len(extensions)} extensions of {t} with abs_sq <= {max_abs_sq}")
    return extensions


def search_config_for(spec, bound: int, size: int, min_bound: Optional[int] = None, **kwargs) -> SearchConfig:
    """Config from absolute-value bounds as given on the command line (|z| <= bound)."""
    min_abs_sq = min_bound * min_bound if min_bound else 1
    return SearchConfig(spec=spec, max_abs_sq=bound * bound, target_size=size, min_abs_sq=min_abs_sq, **kwargs)
