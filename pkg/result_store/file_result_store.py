import json
import logging
import os
import tempfile
from pathlib import Path
from typing import List, Optional

from ring import RingSpec, abs_sq, canonical_key
from tuples import DiophTuple, TupleError, check_witnesses, make_tuple

from .cached_tuple import from_record, to_record
from .result_store import ResultStore

# last line of every cache file: {"count": n} for the n tuple records above it
TRAILER_KEY = "count"


class FileResultStore(ResultStore):
    """One JSON-lines file per (d, bound_sq, m), closed by a count trailer; a bare trailer records an empty result."""

    def __init__(
        self,
        *,
        base_dir: str = "./data",
        logger: logging.Logger = logging.getLogger(__name__),
    ):
        self.base_dir = base_dir
        self.logger = logger

    def filepath(self, spec: RingSpec, bound_sq: int, m: int) -> str:
        return f"{self.base_dir}/d{spec.d}_b{bound_sq}_m{m}.jsonl"

    def save(self, spec: RingSpec, bound_sq: int, m: int, tuples: List[DiophTuple]):
        self._mkdir(self.base_dir)
        filepath = self.filepath(spec, bound_sq, m)
        with tempfile.NamedTemporaryFile("w", dir=self.base_dir, suffix=".tmp", delete=False) as file:
            for t in tuples:
                file.write(json.dumps(to_record(t)) + "\n")
            file.write(json.dumps({TRAILER_KEY: len(tuples)}) + "\n")
        os.replace(file.name, filepath)
        self.logger.debug(f"Cached {len(tuples)} tuples in {filepath}")
        return filepath

    def load(self, spec: RingSpec, bound_sq: int, m: int) -> Optional[List[DiophTuple]]:
        filepath = self.filepath(spec, bound_sq, m)
        if not os.path.exists(filepath):
            return None
        try:
            with open(filepath, "r") as file:
                records = [json.loads(line) for line in file if line.strip()]
            if not records or set(records[-1]) != {TRAILER_KEY} or records[-1][TRAILER_KEY] != len(records) - 1:
                raise ValueError("missing or mismatched count trailer")
            tuples = [from_record(record) for record in records[:-1]]
        except (ValueError, KeyError, TypeError) as e:
            self.logger.warning(f"Unreadable cache file {filepath} - {e}")
            self.discard(spec, bound_sq, m)
            return None
        if not all(self._verify(t, spec, bound_sq, m) for t in tuples):
            self.logger.warning(f"Cache file {filepath} failed re-verification, discarding it")
            self.discard(spec, bound_sq, m)
            return None
        return sorted(tuples, key=lambda t: t.key())

    def discard(self, spec: RingSpec, bound_sq: int, m: int):
        filepath = self.filepath(spec, bound_sq, m)
        try:
            os.remove(filepath)
            return filepath
        except FileNotFoundError as e:
            self.logger.warning(f"Failed to find cache file for d={spec.d}, B^2={bound_sq}, m={m} - {e}")
            raise e

    @staticmethod
    def _verify(t: DiophTuple, spec: RingSpec, bound_sq: int, m: int) -> bool:
        if t.spec != spec or t.size != m or any(abs_sq(e) > bound_sq for e in t.elems):
            return False
        if list(t.elems) != sorted(t.elems, key=canonical_key) or not check_witnesses(t):
            return False
        try:
            make_tuple(spec, t.elems)
        except TupleError:
            return False
        return True

    @staticmethod
    def _mkdir(path):
        if isinstance(path, str):
            path = Path(path)
        path.mkdir(parents=True, exist_ok=True)
