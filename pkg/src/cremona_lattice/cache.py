"""On-disk cache of enumerated Weyl groups.

Enabled by setting CREMONA_CACHE_DIR.  Each file is a small text header
followed by the raw uint8 permutation table; a header mismatch (format
version, type, shape) makes the entry be ignored and rebuilt.
"""
from __future__ import annotations

import os
from pathlib import Path

import numpy as np

FORMAT_VERSION = 1
ENV_VAR = "CREMONA_CACHE_DIR"


def cache_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def _path(label: str) -> Path | None:
    d = cache_dir()
    return d / f"weyl-{label}.v{FORMAT_VERSION}.bin" if d else None


def _header(label: str, shape: tuple[int, int]) -> bytes:
    return f"cremona-lattice group v{FORMAT_VERSION} {label} {shape[0]} {shape[1]}\n".encode()


def load_group(label: str) -> np.ndarray | None:
    path = _path(label)
    if path is None or not path.exists():
        return None
    with path.open("rb") as fh:
        head = fh.readline()
        parts = head.decode(errors="replace").split()
        if len(parts) != 6 or parts[:3] != ["cremona-lattice", "group", f"v{FORMAT_VERSION}"] or parts[3] != label:
            return None
        shape = (int(parts[4]), int(parts[5]))
        data = np.frombuffer(fh.read(), dtype=np.uint8)
    if data.size != shape[0] * shape[1]:
        return None
    return data.reshape(shape).copy()


def store_group(label: str, perms: np.ndarray) -> Path | None:
    path = _path(label)
    if path is None:
        return None
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with tmp.open("wb") as fh:
        fh.write(_header(label, perms.shape))
        fh.write(np.ascontiguousarray(perms, dtype=np.uint8).tobytes())
    tmp.replace(path)
    return path
