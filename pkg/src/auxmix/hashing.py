"""Content hashing for run provenance.

Every artifact (scenario, checkpoint, score split, metrics log) is bound
into run manifests through sha256 content hashes so that any reported
number can be traced back to the exact bytes that produced it.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any


def canonical_json(obj: Any) -> str:
    """Serialize to JSON with sorted keys and fixed separators.

    Used wherever a dict feeds a hash: the byte stream must not depend on
    insertion order.
    """
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def sha256_of_json(obj: Any) -> str:
    return sha256_hex(canonical_json(obj).encode("utf-8"))


def sha256_of_file(path: str | Path, chunk_size: int = 1 << 20) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        while True:
            chunk = f.read(chunk_size)
            if not chunk:
                break
            h.update(chunk)
    return h.hexdigest()
