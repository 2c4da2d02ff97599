"""Append-only JSONL store of solved ``lambda_k`` values keyed by canonical graph6."""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import asdict, dataclass
from pathlib import Path

from .packing import TreePacking

log = logging.getLogger(__name__)

SOLVER_VERSION = "steinerng-lambda-1"
CACHE_ENV = "STEINERNG_CACHE"


def certificate_digest(cert: dict | None) -> str:
    blob = json.dumps(cert, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class CacheEntry:
    key: str
    k: int
    value: int
    witness: tuple[int, ...]
    digest: str
    certificate: dict | None
    version: str = SOLVER_VERSION

    @classmethod
    def build(cls, key: str, k: int, value: int, witness, cert: TreePacking | None) -> CacheEntry:
        data = cert.to_json() if cert is not None else None
        return cls(key, k, value, tuple(witness), certificate_digest(data), data)

    @classmethod
    def from_dict(cls, d: dict) -> CacheEntry:
        entry = cls(str(d["key"]), int(d["k"]), int(d["value"]), tuple(int(v) for v in d["witness"]),
                    str(d["digest"]), d.get("certificate"), str(d["version"]))
        if entry.digest != certificate_digest(entry.certificate):
            raise ValueError("certificate digest mismatch")
        return entry

    def to_json(self) -> str:
        d = asdict(self)
        d["witness"] = list(self.witness)
        return json.dumps(d, sort_keys=True, separators=(",", ":"))

    def packing(self) -> TreePacking | None:
        return None if self.certificate is None else TreePacking.from_json(self.certificate)


class LambdaCache:
    """In-memory map backed by an optional append-only file.

    Lines that fail to parse are skipped with a warning.  Later lines win
    for the same ``(key, k, version)``; entries from other solver versions
    are ignored.
    """

    def __init__(self, path: str | os.PathLike | None = None, version: str = SOLVER_VERSION):
        self.path = Path(path) if path else None
        self.version = version
        self._data: dict[tuple[str, int], CacheEntry] = {}
        self.skipped = 0
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = CacheEntry.from_dict(json.loads(line))
                except (ValueError, KeyError, TypeError) as exc:
                    self.skipped += 1
                    log.warning("cache %s line %d skipped: %s", self.path, lineno, exc)
                    continue
                if entry.version == self.version:
                    self._data[(entry.key, entry.k)] = entry

    def __len__(self):
        return len(self._data)

    def get(self, key: str, k: int) -> CacheEntry | None:
        return self._data.get((key, k))

    def put(self, entry: CacheEntry) -> None:
        if entry.version != self.version:
            raise ValueError(f"entry version {entry.version!r} does not match cache {self.version!r}")
        if self._data.get((entry.key, entry.k)) == entry:
            return
        self._data[(entry.key, entry.k)] = entry
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(entry.to_json() + "\n")


def default_cache_path() -> str | None:
    return os.environ.get(CACHE_ENV) or None
