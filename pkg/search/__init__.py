from .pair_graph import PairGraph, build_pair_graph
from .search_config import SearchConfig, SearchMode, SearchResult, SearchStats
from .strategies import get_available_strategies, get_strategy
from .sweep import CutoffRecord, SweepReport, cutoff_record, quintuple_sweep, rational_representative, sweep_rings
from .tuple_search import extend_tuple, find_m_tuples, search_config_for

__all__ = [
    "CutoffRecord",
    "PairGraph",
    "SearchConfig",
    "SearchMode",
    "SearchResult",
    "SearchStats",
    "SweepReport",
    "build_pair_graph",
    "cutoff_record",
    "extend_tuple",
    "find_m_tuples",
    "get_available_strategies",
    "get_strategy",
    "quintuple_sweep",
    "rational_representative",
    "search_config_for",
    "sweep_rings",
]
