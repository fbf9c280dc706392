"""Compact ``.rnkl`` model files.

Layout (little-endian, no padding)::

    header   magic "RNKL" | u16 format version | 8-byte schema hash |
             u16 n_features | u32 n_trees | u8 depth | f32 base_score
    splits   n_trees * depth records of (u16 feature, f32 threshold, u8 missing_right)
    leaves   n_trees * 2**depth f32 values

Inference on the loaded tables is defined in float32; the ensemble's
``predict_matrix(..., single=True)`` follows the same arithmetic, so
scores agree exactly.
"""

from __future__ import annotations

import statistics
import struct
import time
from dataclasses import dataclass

import numpy as np

from .features import SchemaMismatchError
from .ranker import TreeEnsemble, evaluate_trees

MAGIC = b"RNKL"
FORMAT_VERSION = 1
DEFAULT_SIZE_LIMIT = 2 * 1024 * 1024
HEADER = struct.Struct("<4sH8sHIBf")
SPLIT_DTYPE = np.dtype([("feature", "<u2"), ("threshold", "<f4"), ("missing", "u1")])
LEAF_DTYPE = np.dtype("<f4")
MAX_DEPTH = 16


class ArtifactError(ValueError):
    pass


class BudgetExceededError(ArtifactError):
    pass


class BadMagicError(ArtifactError):
    pass


class VersionUnsupportedError(ArtifactError):
    pass


class TruncatedError(ArtifactError):
    pass


class CorruptModelError(ArtifactError):
    pass


class SchemaHashMismatchError(ArtifactError):
    pass


def _hash_bytes(schema_hash: str) -> bytes:
    if not schema_hash:
        return bytes(8)
    try:
        raw = bytes.fromhex(schema_hash)
    except ValueError:
        raw = b""
    if len(raw) != 8:
        raise ArtifactError(f"schema hash must be 16 hex digits, got {schema_hash!r}")
    return raw


@dataclass(frozen=True, eq=False)
class FlatModel:
    version: int
    schema_hash: str
    n_features: int
    depth: int
    base_score: np.float32
    features: np.ndarray  # (n_trees, depth) int64
    thresholds: np.ndarray  # (n_trees, depth) float32
    missing_right: np.ndarray  # (n_trees, depth) bool
    leaves: np.ndarray  # (n_trees, 2**depth) float32

    @property
    def n_trees(self) -> int:
        return len(self.features)

    def predict_matrix(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.float32)
        width = X.shape[-1] if X.ndim else 0
        if width != self.n_features:
            raise SchemaMismatchError(f"model expects {self.n_features} features, got {width}")
        return evaluate_trees(X, self.features, self.thresholds, self.missing_right,
                              self.leaves, self.base_score, np.float32)

    def predict(self, x) -> float:
        return float(self.predict_matrix(np.asarray(x)[None, :])[0])

    def header_fields(self) -> dict:
        return {
            "magic": MAGIC.decode(),
            "format_version": self.version,
            "schema_hash": self.schema_hash,
            "n_features": self.n_features,
            "n_trees": self.n_trees,
            "depth": self.depth,
            "base_score": float(self.base_score),
        }


def export_flat(ensemble: TreeEnsemble, limit: int | None = DEFAULT_SIZE_LIMIT) -> bytes:
    feats, thr, miss, leaves = ensemble.arrays()
    T, D = feats.shape
    if ensemble.n_features > 0xFFFF:
        raise ArtifactError("too many features for a u16 feature id")
    head = HEADER.pack(MAGIC, FORMAT_VERSION, _hash_bytes(ensemble.schema_hash),
                       ensemble.n_features, T, D, ensemble.base_score)
    splits = np.empty(T * D, dtype=SPLIT_DTYPE)
    splits["feature"] = feats.ravel()
    splits["threshold"] = thr.ravel()
    splits["missing"] = miss.ravel()
    data = head + splits.tobytes() + leaves.astype(LEAF_DTYPE).tobytes()
    if limit is not None and len(data) > limit:
        raise BudgetExceededError(f"model is {len(data)} bytes, budget is {limit}")
    return data


def load_flat(data: bytes, expected_schema_hash: str | None = None) -> FlatModel:
    data = bytes(data)
    if len(data) < 4 or data[:4] != MAGIC:
        if len(data) < 4 and MAGIC.startswith(data):
            raise TruncatedError("file ends inside the magic number")
        raise BadMagicError("not an RNKL model")
    if len(data) < HEADER.size:
        raise TruncatedError(f"header needs {HEADER.size} bytes, file has {len(data)}")
    _, version, raw_hash, n_features, T, D, base = HEADER.unpack_from(data)
    if version != FORMAT_VERSION:
        raise VersionUnsupportedError(f"format version {version} (supported: {FORMAT_VERSION})")
    if D > MAX_DEPTH or (T > 0 and D == 0):
        raise CorruptModelError(f"invalid depth {D}")
    schema_hash = "" if raw_hash == bytes(8) else raw_hash.hex()
    if expected_schema_hash is not None and schema_hash != expected_schema_hash:
        raise SchemaHashMismatchError(
            f"model built for schema {schema_hash or '<none>'}, expected {expected_schema_hash}"
        )
    split_bytes = T * D * SPLIT_DTYPE.itemsize
    leaf_bytes = T * (1 << D) * LEAF_DTYPE.itemsize
    need = HEADER.size + split_bytes + leaf_bytes
    if len(data) < need:
        raise TruncatedError(f"expected {need} bytes, file has {len(data)}")
    if len(data) > need:
        raise CorruptModelError(f"{len(data) - need} trailing bytes")
    splits = np.frombuffer(data, SPLIT_DTYPE, T * D, HEADER.size)
    leaves = np.frombuffer(data, LEAF_DTYPE, T * (1 << D), HEADER.size + split_bytes)
    feats = splits["feature"].astype(np.int64).reshape(T, D)
    if T and feats.max() >= n_features:
        raise CorruptModelError("split feature id outside n_features")
    if splits["missing"].size and splits["missing"].max() > 1:
        raise CorruptModelError("missing flag must be 0 or 1")
    return FlatModel(
        version=version,
        schema_hash=schema_hash,
        n_features=n_features,
        depth=D,
        base_score=np.float32(base),
        features=feats,
        thresholds=splits["threshold"].astype(np.float32).reshape(T, D),
        missing_right=splits["missing"].astype(bool).reshape(T, D),
        leaves=leaves.astype(np.float32).reshape(T, 1 << D),
    )


@dataclass(frozen=True)
class BudgetReport:
    size_bytes: int
    size_limit: int
    size_ok: bool
    median_latency_ms: float
    latency_limit_ms: float | None
    latency_ok: bool | None
    repetitions: int


def check_budget(
    data: bytes,
    limit: int = DEFAULT_SIZE_LIMIT,
    latency_limit_ms: float | None = 30.0,
    candidates: int = 100,
    repetitions: int = 1000,
    seed: int = 0,
) -> BudgetReport:
    """Size check plus median wall time to rank one look-up of ``candidates`` rows."""
    model = load_flat(data)
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(candidates, model.n_features)) * 3
    X[rng.random(X.shape) < 0.05] = np.nan
    timings = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        scores = model.predict_matrix(X)
        np.lexsort((np.arange(candidates), -scores))
        timings.append((time.perf_counter() - t0) * 1000.0)
    median = statistics.median(timings)
    return BudgetReport(
        size_bytes=len(data),
        size_limit=limit,
        size_ok=len(data) <= limit,
        median_latency_ms=median,
        latency_limit_ms=latency_limit_ms,
        latency_ok=None if latency_limit_ms is None else median < latency_limit_ms,
        repetitions=repetitions,
    )
