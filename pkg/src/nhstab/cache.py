"""Persistent, content-addressed store for branching decompositions.

Entries live under ``<root>/v<SCHEMA_VERSION>/<hh>/<hash>.json`` where the
hash covers the embedding data, the operation name and its arguments.
Bumping ``SCHEMA_VERSION`` orphans every old entry at once. Writes go to a
temporary file that is renamed into place, so concurrent writers of the
same entry are harmless.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

SCHEMA_VERSION = 1
CACHE_ENV = "NHSTAB_CACHE_DIR"


def default_cache_dir() -> Path | None:
    value = os.environ.get(CACHE_ENV)
    return Path(value) if value else None


def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(y) for y in x)
    return x


class DiskCache:
    def __init__(self, root):
        self.root = Path(root) / f"v{SCHEMA_VERSION}"
        self.hits = 0
        self.misses = 0

    def entry_key(self, embedding_key: str, op: str, args) -> str:
        payload = json.dumps([SCHEMA_VERSION, embedding_key, op, args], separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get_decomposition(self, embedding_key: str, op: str, args) -> dict | None:
        path = self._path(self.entry_key(embedding_key, op, args))
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            self.misses += 1
            return None
        self.hits += 1
        return {_tuplify(w): m for w, m in data["decomposition"]}

    def put_decomposition(self, embedding_key: str, op: str, args, dec: dict) -> None:
        key = self.entry_key(embedding_key, op, args)
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = {"op": op, "args": args, "decomposition": sorted([list(map(list, w)), m] for w, m in dec.items())}
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, separators=(",", ":"))
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
