from dataclasses import dataclass, field
from enum import Enum
from typing import List

from ring import RingSpec
from tuples import DiophTuple

from .search_constants import DEFAULT_STRATEGY


class SearchMode(str, Enum):
    FIND_ALL = "find-all"
    FIND_FIRST = "find-first"
    COUNT = "count"


@dataclass(frozen=True)
class SearchConfig:
    spec: RingSpec
    max_abs_sq: int
    target_size: int
    mode: SearchMode = SearchMode.FIND_ALL
    min_abs_sq: int = 1
    strategy: str = DEFAULT_STRATEGY
    threads: int = 1

    def __post_init__(self):
        if self.max_abs_sq < 1:
            raise ValueError(f"max_abs_sq must be at least 1, got {self.max_abs_sq}")
        if self.target_size < 2:
            raise ValueError(f"target_size must be at least 2, got {self.target_size}")
        if self.min_abs_sq < 1:
            raise ValueError(f"min_abs_sq must be at least 1, got {self.min_abs_sq}")
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")

    @property
    def cacheable(self) -> bool:
        return self.mode == SearchMode.FIND_ALL and self.min_abs_sq == 1


@dataclass
class SearchStats:
    elements: int = 0
    pairs_tested: int = 0
    edges: int = 0
    cliques_explored: int = 0
    cached: bool = False
    elapsed_seconds: float = 0.0


@dataclass
class SearchResult:
    config: SearchConfig
    tuples: List[DiophTuple] = field(default_factory=list)
    count: int = 0
    stats: SearchStats = field(default_factory=SearchStats)
