"""Listwise gradient boosting over oblivious trees.

Each look-up is a query group with exactly one positive row. The loss is
the softmax cross-entropy of the positive row within its group; trees are
grown with second-order (Newton) leaf values on quantile-binned features.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np
from numba import njit

from .features import SchemaMismatchError

GAIN_TIE_RTOL = 1e-12
HESS_FLOOR = 1e-16
MISSING_BIN = 255
_MAX_FINITE_BINS = 255


class RankerError(ValueError):
    pass


class InvalidParamsError(RankerError):
    pass


class EmptyDatasetError(RankerError):
    pass


class ArityMismatchError(RankerError):
    pass


class DegenerateGroupsError(RankerError):
    pass


class SizeMismatchError(RankerError):
    pass


@dataclass(frozen=True)
class TrainParams:
    iterations: int = 200
    depth: int = 6
    learning_rate: float = 0.1
    l2_leaf_reg: float = 3.0
    max_bins: int = 255
    row_subsample: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.iterations, int) or self.iterations < 1:
            raise InvalidParamsError(f"iterations must be >= 1, got {self.iterations}")
        if not isinstance(self.depth, int) or not 1 <= self.depth <= 16:
            raise InvalidParamsError(f"depth must be in [1, 16], got {self.depth}")
        if not 0 < self.learning_rate <= 1:
            raise InvalidParamsError(f"learning_rate must be in (0, 1], got {self.learning_rate}")
        if self.l2_leaf_reg < 0:
            raise InvalidParamsError("l2_leaf_reg must be non-negative")
        if not isinstance(self.max_bins, int) or not 2 <= self.max_bins <= 255:
            raise InvalidParamsError(f"max_bins must be in [2, 255], got {self.max_bins}")
        if not 0 < self.row_subsample <= 1:
            raise InvalidParamsError("row_subsample must be in (0, 1]")


@dataclass(frozen=True)
class QueryGroup:
    features: np.ndarray
    targets: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.targets)
        if len(t) < 2 or int((t == 1).sum()) != 1 or not np.isin(t, (0, 1)).all():
            raise RankerError("a query group needs >= 2 rows and exactly one positive")


# ---------------------------------------------------------------------------
# loss kernels


def softmax_probs(scores: Sequence[float]) -> np.ndarray:
    s = np.asarray(scores, dtype=np.float64)
    e = np.exp(s - s.max())
    return e / e.sum()


def _positive(targets) -> int:
    t = np.asarray(targets)
    pos = np.flatnonzero(t == 1)
    if len(pos) != 1:
        raise RankerError("group must have exactly one positive")
    return int(pos[0])


def group_loss(group, scores: Sequence[float]) -> float:
    """Negative log softmax probability of the positive row."""
    s = np.asarray(scores, dtype=np.float64)
    if len(s) != len(group.targets):
        raise SizeMismatchError(f"{len(s)} scores for {len(group.targets)} rows")
    m = s.max()
    lse = m + math.log(np.exp(s - m).sum())
    return float(lse - s[_positive(group.targets)])


def group_grad_hess(group, scores: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    s = np.asarray(scores, dtype=np.float64)
    if len(s) != len(group.targets):
        raise SizeMismatchError(f"{len(s)} scores for {len(group.targets)} rows")
    p = softmax_probs(s)
    t = np.zeros_like(p)
    t[_positive(group.targets)] = 1.0
    return p - t, np.maximum(p * (1.0 - p), HESS_FLOOR)


def _batch_softmax(scores: np.ndarray, starts: np.ndarray) -> np.ndarray:
    """Softmax within each group of a flat score array."""
    sizes = np.diff(np.append(starts, len(scores)))
    gmax = np.repeat(np.maximum.reduceat(scores, starts), sizes)
    e = np.exp(scores - gmax)
    return e / np.repeat(np.add.reduceat(e, starts), sizes)


def _batch_loss(scores: np.ndarray, starts: np.ndarray, pos: np.ndarray) -> float:
    sizes = np.diff(np.append(starts, len(scores)))
    gmax = np.maximum.reduceat(scores, starts)
    lse = gmax + np.log(np.add.reduceat(np.exp(scores - np.repeat(gmax, sizes)), starts))
    return float(np.mean(lse - scores[pos]))


# ---------------------------------------------------------------------------
# trees


@dataclass(frozen=True)
class ObliviousTree:
    features: tuple[int, ...]
    thresholds: tuple[float, ...]
    missing_right: tuple[bool, ...]
    leaf_values: tuple[float, ...]

    def __post_init__(self):
        d = len(self.features)
        if len(self.thresholds) != d or len(self.missing_right) != d:
            raise RankerError("split arrays must have one entry per level")
        if len(self.leaf_values) != 2**d:
            raise RankerError(f"depth {d} tree needs {2**d} leaves, got {len(self.leaf_values)}")

    @property
    def depth(self) -> int:
        return len(self.features)

    def leaf_index(self, x: Sequence[float]) -> int:
        idx = 0
        for level, (f, thr, mr) in enumerate(zip(self.features, self.thresholds, self.missing_right)):
            v = x[f]
            bit = mr if math.isnan(v) else v > thr
            idx |= int(bit) << level
        return idx


def evaluate_trees(X, features, thresholds, missing_right, leaves, base_score, dtype=np.float64):
    """Score rows of ``X`` against stacked oblivious trees.

    Bit ``level`` of a leaf index is set when the value exceeds that
    level's threshold (missing values follow ``missing_right``). Leaf
    contributions are accumulated left to right, starting from the base
    score, in ``dtype`` arithmetic.
    """
    X = np.asarray(X, dtype=dtype)
    if X.ndim == 1:
        X = X[None, :]
    n = X.shape[0]
    T = len(features)
    out = np.empty(n, dtype=dtype)
    if T == 0:
        out[:] = dtype(base_score)
        return out
    D = features.shape[1]
    weights = (1 << np.arange(D)).astype(np.int64)
    thr = thresholds.astype(dtype)
    lv = leaves.astype(dtype)
    step = max(1, 2_000_000 // (T * D))
    tree_ix = np.arange(T)
    for a in range(0, n, step):
        vals = X[a:a + step][:, features]  # (rows, T, D)
        bits = np.where(np.isnan(vals), missing_right, vals > thr)
        idx = bits.astype(np.int64) @ weights
        contrib = lv[tree_ix, idx]
        acc = np.empty((contrib.shape[0], T + 1), dtype=dtype)
        acc[:, 0] = dtype(base_score)
        acc[:, 1:] = contrib
        out[a:a + step] = np.cumsum(acc, axis=1, dtype=dtype)[:, -1]
    return out


@dataclass(frozen=True)
class TreeEnsemble:
    schema_hash: str
    n_features: int
    base_score: float = 0.0
    trees: tuple[ObliviousTree, ...] = ()
    params: TrainParams = field(default_factory=TrainParams)

    def __post_init__(self):
        depths = {t.depth for t in self.trees}
        if len(depths) > 1:
            raise RankerError("all trees of an ensemble share one depth")
        for t in self.trees:
            if any(not 0 <= f < self.n_features for f in t.features):
                raise RankerError("split feature outside schema arity")

    @property
    def depth(self) -> int:
        return self.trees[0].depth if self.trees else self.params.depth

    def arrays(self):
        T, D = len(self.trees), self.depth
        feats = np.array([t.features for t in self.trees], dtype=np.int64).reshape(T, D)
        thr = np.array([t.thresholds for t in self.trees], dtype=np.float64).reshape(T, D)
        miss = np.array([t.missing_right for t in self.trees], dtype=bool).reshape(T, D)
        leaves = np.array([t.leaf_values for t in self.trees], dtype=np.float64).reshape(T, 2**D)
        return feats, thr, miss, leaves

    def _check(self, X):
        X = np.asarray(X, dtype=np.float64)
        width = X.shape[-1] if X.ndim else 0
        if width != self.n_features:
            raise SchemaMismatchError(f"model expects {self.n_features} features, got {width}")
        return X

    def predict(self, x: Sequence[float]) -> float:
        x = self._check(x)
        acc = self.base_score
        for t in self.trees:
            acc += t.leaf_values[t.leaf_index(x)]
        return float(acc)

    def predict_matrix(self, X, single: bool = False) -> np.ndarray:
        """Scores for many rows; ``single=True`` is the canonical float32 path."""
        X = self._check(X)
        feats, thr, miss, leaves = self.arrays()
        dtype = np.float32 if single else np.float64
        return evaluate_trees(X, feats, thr, miss, leaves, self.base_score, dtype)

    def used_features(self) -> set[int]:
        return {f for t in self.trees for f in t.features}

    def to_dict(self) -> dict:
        return {
            "schema_hash": self.schema_hash,
            "n_features": self.n_features,
            "base_score": self.base_score,
            "params": asdict(self.params),
            "trees": [
                {
                    "features": list(t.features),
                    "thresholds": list(t.thresholds),
                    "missing_right": list(t.missing_right),
                    "leaf_values": list(t.leaf_values),
                }
                for t in self.trees
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "TreeEnsemble":
        trees = tuple(
            ObliviousTree(tuple(t["features"]), tuple(t["thresholds"]),
                          tuple(bool(m) for m in t["missing_right"]), tuple(t["leaf_values"]))
            for t in d["trees"]
        )
        return cls(d["schema_hash"], d["n_features"], d["base_score"], trees, TrainParams(**d["params"]))

    @classmethod
    def from_json(cls, text: str) -> "TreeEnsemble":
        return cls.from_dict(json.loads(text))


def rank_lookup(model, lookup) -> np.ndarray:
    """Candidate indices by descending score; ties keep baseline order."""
    scores = np.asarray(model.predict_matrix(lookup.features))
    return np.lexsort((np.arange(len(scores)), -scores))


# ---------------------------------------------------------------------------
# binning


def _midpoint32(lo: np.float32, hi: np.float32) -> float:
    m = np.float32((float(lo) + float(hi)) / 2.0)
    if not lo <= m < hi:
        m = lo
    return float(m)


def feature_borders(column: np.ndarray, max_bins: int) -> np.ndarray:
    """Split candidates for one feature, exactly representable in float32.

    With few distinct values every midpoint is a border; otherwise borders
    sit at count quantiles. When the column has missing values the largest
    finite value is appended so that "missing vs. rest" is a valid split.
    """
    col = np.asarray(column, dtype=np.float32)
    finite = col[~np.isnan(col)]
    has_missing = len(finite) < len(col)
    if len(finite) == 0:
        return np.zeros(0)
    uniq, counts = np.unique(finite, return_counts=True)
    allowed = max_bins - 1 - int(has_missing)
    if len(uniq) - 1 <= allowed:
        cuts = np.arange(len(uniq) - 1)
    else:
        cum = np.cumsum(counts)
        targets = cum[-1] * np.arange(1, allowed + 1) / (allowed + 1)
        cuts = np.unique(np.clip(np.searchsorted(cum, targets), 0, len(uniq) - 2))
    borders = [_midpoint32(uniq[i], uniq[i + 1]) for i in cuts]
    if has_missing:
        borders.append(float(uniq[-1]))
    return np.array(borders, dtype=np.float64)


def bin_matrix(X32: np.ndarray, borders: list[np.ndarray]) -> np.ndarray:
    n, F = X32.shape
    out = np.empty((n, F), dtype=np.uint8)
    for f in range(F):
        col = X32[:, f]
        b = np.searchsorted(borders[f].astype(np.float32), col, side="left")
        b[np.isnan(col)] = MISSING_BIN
        out[:, f] = b
    return out


@njit(nogil=True, cache=True)
def _accumulate(binned, nodes, g, h, f_lo, f_hi, out):
    for i in range(binned.shape[0]):
        nd = nodes[i]
        gi = g[i]
        hi = h[i]
        for f in range(f_lo, f_hi):
            b = binned[i, f]
            out[f, nd, b, 0] += gi
            out[f, nd, b, 1] += hi


def build_histograms(binned, nodes, g, h, n_nodes, workers=1):
    """Per (feature, node, bin) sums of gradients and hessians.

    Work is split by feature; each cell is summed in row order by a single
    thread, so the result does not depend on ``workers``.
    """
    F = binned.shape[1]
    out = np.zeros((F, n_nodes, MISSING_BIN + 1, 2))
    nodes = nodes.astype(np.int64)
    if workers <= 1 or F < 2:
        _accumulate(binned, nodes, g, h, 0, F, out)
        return out
    chunks = np.array_split(np.arange(F), min(workers, F))
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        jobs = [pool.submit(_accumulate, binned, nodes, g, h, int(c[0]), int(c[-1]) + 1, out)
                for c in chunks if len(c)]
        for j in jobs:
            j.result()
    return out


def best_split(hist: np.ndarray, n_borders: np.ndarray, l2: float):
    """Pick (feature, border index, missing_right, gain) maximizing
    sum over nodes of G_L^2/(H_L+l2) + G_R^2/(H_R+l2).

    Ties resolve to the lowest feature, then border, then missing-left.
    Returns ``None`` when no feature has a border.
    """
    F = hist.shape[0]
    finite = hist[:, :, :_MAX_FINITE_BINS, :]
    miss = hist[:, :, MISSING_BIN, :]  # (F, N, 2)
    total = finite.sum(axis=2) + miss  # (F, N, 2)
    # right side of border k holds bins k+1 .. end
    suffix = np.cumsum(finite[:, :, ::-1, :], axis=2)[:, :, ::-1, :]
    right = np.concatenate([suffix[:, :, 1:, :], np.zeros_like(suffix[:, :, :1, :])], axis=2)
    gains = np.full((F, _MAX_FINITE_BINS, 2), -np.inf)
    for m in (0, 1):
        R = right + m * miss[:, :, None, :]
        L = total[:, :, None, :] - R
        score = L[..., 0] ** 2 / (L[..., 1] + l2) + R[..., 0] ** 2 / (R[..., 1] + l2)
        gains[:, :, m] = score.sum(axis=1)
    valid = np.arange(_MAX_FINITE_BINS)[None, :] < n_borders[:, None]
    gains[~valid] = -np.inf
    top = gains.max()
    if not np.isfinite(top):
        return None
    # gains equal up to rounding count as ties so the tie rule is order-free
    flat = int(np.argmax(gains >= top - GAIN_TIE_RTOL * max(1.0, abs(top))))
    f, k, m = np.unravel_index(flat, gains.shape)
    return int(f), int(k), bool(m), float(gains[f, k, m])


# ---------------------------------------------------------------------------
# training


def _flatten_groups(groups):
    if not groups:
        raise EmptyDatasetError("no query groups")
    widths = {np.asarray(g.features).shape[1] for g in groups}
    if len(widths) != 1:
        raise ArityMismatchError(f"groups disagree on arity: {sorted(widths)}")
    kept = [g for g in groups if len(g.targets) >= 2]
    if not kept:
        raise DegenerateGroupsError("every group has a single row")
    X = np.vstack([np.asarray(g.features, dtype=np.float64) for g in kept])
    sizes = np.array([len(g.targets) for g in kept])
    starts = np.concatenate([[0], np.cumsum(sizes)[:-1]])
    pos = starts + np.array([_positive(g.targets) for g in kept])
    return X, starts, pos


def fit(
    groups,
    params: TrainParams = TrainParams(),
    schema_hash: str = "",
    workers: int = 1,
    callback: Callable[[int, float], None] | None = None,
) -> TreeEnsemble:
    """Boost ``params.iterations`` oblivious trees on listwise softmax loss.

    ``callback(iteration, loss)`` receives the training loss before each
    iteration and once more after the last one.
    """
    X, starts, pos = _flatten_groups(groups)
    n, F = X.shape
    X32 = X.astype(np.float32)
    borders = [feature_borders(X32[:, f], params.max_bins) for f in range(F)]
    n_borders = np.array([len(b) for b in borders])
    binned = bin_matrix(X32, borders)
    target = np.zeros(n)
    target[pos] = 1.0
    D, l2, lr = params.depth, params.l2_leaf_reg, params.learning_rate

    scores = np.zeros(n)
    trees = []
    for it in range(params.iterations):
        if callback is not None:
            callback(it, _batch_loss(scores, starts, pos))
        p = _batch_softmax(scores, starts)
        g = p - target
        h = np.maximum(p * (1.0 - p), HESS_FLOOR)
        if params.row_subsample < 1.0:
            keep = np.random.default_rng([params.seed, it]).random(n) < params.row_subsample
            g, h = g * keep, h * keep

        nodes = np.zeros(n, dtype=np.int64)
        feats, thrs, miss = [], [], []
        for level in range(D):
            hist = build_histograms(binned, nodes, g, h, 1 << level, workers)
            choice = best_split(hist, n_borders, l2)
            if choice is None:
                f, thr, m = 0, float(np.finfo(np.float32).max), False
                bit = np.zeros(n, dtype=bool)
            else:
                f, k, m, _ = choice
                thr = float(borders[f][k])
                col = binned[:, f]
                bit = np.where(col == MISSING_BIN, m, col > k)
            feats.append(f)
            thrs.append(thr)
            miss.append(m)
            nodes |= bit.astype(np.int64) << level

        G = np.bincount(nodes, weights=g, minlength=1 << D)
        H = np.bincount(nodes, weights=h, minlength=1 << D)
        leaves = -G / (H + l2) * lr
        scores = scores + leaves[nodes]
        trees.append(ObliviousTree(tuple(feats), tuple(thrs), tuple(miss),
                                   tuple(float(v) for v in leaves)))

    if callback is not None:
        callback(params.iterations, _batch_loss(scores, starts, pos))
    return TreeEnsemble(schema_hash, F, 0.0, tuple(trees), params)


def training_loss(model, groups) -> float:
    X, starts, pos = _flatten_groups(groups)
    return _batch_loss(np.asarray(model.predict_matrix(X), dtype=np.float64), starts, pos)
