"""On-disk cache of computed sequences, one JSON file per (k, l, z).

Terms are stored as decimal strings.  Writes go to a temporary file in the
same directory followed by an atomic rename.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass, replace
from pathlib import Path

from . import __version__
from .asymptotics import AsymptoticExpansion
from .recurrence import RecurrenceOperator, verify
from .sequences import SequenceRecord, compute_series, extend_series

log = logging.getLogger(__name__)

ENV_VAR = "HOOKREC_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "hookrec"


@dataclass(frozen=True)
class CacheEntry:
    k: int
    l: int
    z: int
    start: int
    terms: tuple[int, ...]
    operator: RecurrenceOperator | None = None
    expansion: AsymptoticExpansion | None = None
    version: str = __version__

    @property
    def record(self) -> SequenceRecord:
        return SequenceRecord(self.k, self.l, self.z, self.start, self.terms)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "z": self.z,
            "start": self.start,
            "terms": [str(t) for t in self.terms],
            "operator": self.operator.to_json() if self.operator else None,
            "expansion": self.expansion.to_json() if self.expansion else None,
            "version": self.version,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CacheEntry":
        return cls(
            int(data["k"]),
            int(data["l"]),
            int(data["z"]),
            int(data.get("start", 0)),
            tuple(int(t) for t in data["terms"]),
            RecurrenceOperator.from_json(data["operator"]) if data.get("operator") else None,
            AsymptoticExpansion.from_json(data["expansion"]) if data.get("expansion") else None,
            str(data.get("version", "")),
        )


class SeriesCache:
    def __init__(self, directory: str | Path | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, k: int, l: int, z: int) -> Path:
        return self.directory / f"S_k{k}_l{l}_z{z}.json"

    def load(self, k: int, l: int, z: int) -> CacheEntry | None:
        path = self.path(k, l, z)
        try:
            entry = CacheEntry.from_json(json.loads(path.read_text()))
        except FileNotFoundError:
            return None
        except (ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", path, exc)
            return None
        if entry.operator is not None and not verify(entry.operator, entry.record, holdout=0).passed:
            log.warning("cached operator in %s does not annihilate cached terms; dropping it", path)
            entry = replace(entry, operator=None, expansion=None)
        return entry

    def save(self, entry: CacheEntry) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path(entry.k, entry.l, entry.z)
        fd, tmp = tempfile.mkstemp(prefix=path.name, suffix=".tmp", dir=self.directory)
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(entry.to_json(), fh, indent=1)
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        return path

    def series(self, k: int, l: int, z: int, n_max: int) -> SequenceRecord:
        """Terms ``0..n_max``, extending whatever prefix is already stored."""
        entry = self.load(k, l, z)
        if entry is not None and entry.start == 0 and len(entry.terms) > n_max:
            return entry.record.head(n_max + 1)
        if entry is not None and entry.start == 0 and entry.terms:
            rec = extend_series(entry.record, n_max)
            self.save(replace(entry, terms=rec.terms, version=__version__))
        else:
            rec = compute_series(k, l, z, n_max)
            self.save(CacheEntry(k, l, z, 0, rec.terms))
        return rec

    def store_results(self, k: int, l: int, z: int, operator=None, expansion=None) -> None:
        entry = self.load(k, l, z)
        if entry is None:
            return
        self.save(replace(entry, operator=operator or entry.operator, expansion=expansion or entry.expansion))


def get_series(k: int, l: int, z: int, n_max: int, cache: SeriesCache | None = None) -> SequenceRecord:
    if cache is None:
        return compute_series(k, l, z, n_max)
    return cache.series(k, l, z, n_max)
