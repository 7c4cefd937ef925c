"""Content-addressed cache for sieves, zero sets, and convolutions.

Keys are sha256 digests of the input parameters plus a format version,
so a version bump invalidates everything stale.  Writes go through a
temporary file and an atomic rename; every artifact carries a sidecar
"<name>.sha256" checked on load (corruption means silent recompute, with
a log line).  The sieve payload itself is the documented GZSV1 binary
layout and the zero sets are the documented GZZEROS text format, so the
cache doubles as an export directory.
"""

from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path

from .lfunc import ZeroSet, export_zeros, find_zeros, import_zeros
from .numtheory import SieveTable, build_sieve, read_sieve_cache, write_sieve_cache

logger = logging.getLogger(__name__)

FORMAT_VERSION = "1"
ENV_CACHE_DIR = "GZ_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "gzeros"


def cache_key(kind: str, **params) -> str:
    blob = f"v{FORMAT_VERSION}|{kind}|" + "|".join(
        f"{k}={params[k]!r}" for k in sorted(params)
    )
    return hashlib.sha256(blob.encode()).hexdigest()[:24]


def _sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _store_atomic(path: Path, writer) -> None:
    """writer(tmp_path) produces the payload; rename + checksum sidecar."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    os.close(fd)
    tmp = Path(tmp)
    try:
        writer(tmp)
        digest = _sha256_file(tmp)
        os.replace(tmp, path)
        path.with_suffix(path.suffix + ".sha256").write_text(digest + "\n")
    finally:
        if tmp.exists():
            tmp.unlink()


def _verify(path: Path) -> bool:
    if not path.exists():
        return False
    side = path.with_suffix(path.suffix + ".sha256")
    if not side.exists():
        logger.warning("cache %s has no checksum sidecar; recomputing", path)
        return False
    if _sha256_file(path) != side.read_text().strip():
        logger.warning("cache %s failed its checksum; recomputing", path)
        return False
    return True


def load_or_build_sieve(x: int, cache_dir: Path | None = None) -> SieveTable:
    cache_dir = cache_dir or default_cache_dir()
    key = cache_key("sieve", x=x)
    path = cache_dir / f"sieve-{key}.gzsv"
    if _verify(path):
        try:
            return read_sieve_cache(path)
        except ValueError as exc:
            logger.warning("sieve cache unreadable (%s); recomputing", exc)
    sieve = build_sieve(x)
    _store_atomic(path, lambda tmp: write_sieve_cache(sieve, tmp))
    return sieve


def load_or_build_zeros(
    chi_label: str, T: float, cache_dir: Path | None = None
) -> ZeroSet:
    from .characters import character_from_label

    cache_dir = cache_dir or default_cache_dir()
    key = cache_key("zeros", label=chi_label, T=float(T))
    path = cache_dir / f"zeros-{key}.txt"
    if _verify(path):
        try:
            return import_zeros(path, chi_label, validate=False)
        except Exception as exc:  # damaged payload: rebuild
            logger.warning("zero cache unreadable (%s); recomputing", exc)
    zs = find_zeros(character_from_label(chi_label), T)
    _store_atomic(path, lambda tmp: export_zeros(zs, tmp))
    return zs


def sieve_hash(sieve: SieveTable) -> str:
    """Digest of the von Mangoldt payload (keys convolution caches)."""
    h = hashlib.sha256()
    h.update(int(sieve.limit).to_bytes(8, "little"))
    h.update(sieve.lambda_.astype("<f8").tobytes())
    return h.hexdigest()[:16]


def load_or_build_convolution(
    q: int, a: int, b: int, x: int, sieve: SieveTable,
    cache_dir: Path | None = None,
):
    """ClassConvolution cache keyed by (q, a, b, x, sieve hash)."""
    import numpy as np

    from .goldbach import ClassConvolution, build_class_convolution

    cache_dir = cache_dir or default_cache_dir()
    key = cache_key("conv", q=q, a=a, b=b, x=x, sieve=sieve_hash(sieve))
    path = cache_dir / f"conv-{key}.npy"
    if _verify(path):
        try:
            values = np.load(path)
            if len(values) == x + 1:
                return ClassConvolution(
                    q=q, a=a, b=b, x=x,
                    values=values, cumulative=np.cumsum(values),
                )
            logger.warning("convolution cache has wrong length; recomputing")
        except Exception as exc:
            logger.warning("convolution cache unreadable (%s); recomputing", exc)
    conv = build_class_convolution(q, a, b, x, sieve)

    def _write(tmp):
        with open(tmp, "wb") as fh:  # file object: np.save adds no suffix
            np.save(fh, conv.values, allow_pickle=False)

    _store_atomic(path, _write)
    return conv
