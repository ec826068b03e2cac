import os
from typing import Optional

from .file_result_store import FileResultStore
from .result_store import ResultStore

CACHE_DIR_ENV = "DIOPH_CACHE_DIR"


def get_result_store(cache_dir: Optional[str] = None) -> Optional[ResultStore]:
    """The file store under cache_dir, falling back to DIOPH_CACHE_DIR; None disables caching."""
    base_dir = cache_dir or os.environ.get(CACHE_DIR_ENV)
    if not base_dir:
        return None
    return FileResultStore(base_dir=base_dir)
