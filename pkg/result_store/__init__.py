from .cached_tuple import CachedTuple, from_record, to_record
from .file_result_store import FileResultStore
from .get_result_store import CACHE_DIR_ENV, get_result_store
from .result_store import ResultStore

__all__ = ["CACHE_DIR_ENV", "CachedTuple", "FileResultStore", "ResultStore", "from_record", "get_result_store", "to_record"]
