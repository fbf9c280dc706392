"""Anonymized feature extraction and permutation-importance pruning.

Four language-agnostic groups are extracted per candidate: prefix
information, syntactic context, syntactic history and session history.
Every slot is numeric; no slot encodes token text.
"""

from __future__ import annotations

import enum
import hashlib
import json
from collections import Counter, deque
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .candidate_provider import Block, CaretContext, ScopeIndex, candidate_stats

MISSING = float("nan")
HISTORY_CAPACITY = 100
DEFAULT_PRUNE_EPSILON = 0.001


class FeatureError(ValueError):
    pass


class SchemaMismatchError(FeatureError):
    pass


class ArityMismatchError(FeatureError):
    pass


class EmptySchemaError(FeatureError):
    pass


class FeatureKind(str, enum.Enum):
    NUMERIC = "Numeric"
    BOOLEAN = "Boolean"
    ONE_HOT = "OneHotGroup"


@dataclass(frozen=True)
class FeatureDef:
    name: str
    kind: FeatureKind
    categories: tuple[str, ...] = ()

    @property
    def slots(self) -> list[str]:
        if self.kind is FeatureKind.ONE_HOT:
            return [f"{self.name}={c}" for c in self.categories]
        return [self.name]


@dataclass(frozen=True)
class FeatureSchema:
    features: tuple[FeatureDef, ...]
    version: int = 1

    def __post_init__(self):
        names = [f.name for f in self.features]
        if len(set(names)) != len(names):
            raise FeatureError("feature names must be unique")

    @property
    def slot_names(self) -> list[str]:
        return [s for f in self.features for s in f.slots]

    @property
    def arity(self) -> int:
        return len(self.slot_names)

    @property
    def hash(self) -> str:
        spec = [[f.name, f.kind.value, list(f.categories)] for f in self.features]
        return hashlib.sha256(json.dumps(spec).encode()).hexdigest()[:16]

    def slot_groups(self) -> list[list[int]]:
        """Slot indices belonging to each feature definition."""
        out, k = [], 0
        for f in self.features:
            out.append(list(range(k, k + len(f.slots))))
            k += len(f.slots)
        return out

    def to_json(self) -> str:
        feats = []
        for f in self.features:
            d = {"name": f.name, "kind": f.kind.value}
            if f.kind is FeatureKind.ONE_HOT:
                d["categories"] = list(f.categories)
            feats.append(d)
        return json.dumps({"version": self.version, "features": feats}, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "FeatureSchema":
        doc = json.loads(text)
        if set(doc) != {"version", "features"}:
            raise FeatureError("schema document must hold exactly 'version' and 'features'")
        feats = []
        for d in doc["features"]:
            kind = FeatureKind(d["kind"])
            extra = set(d) - {"name", "kind", "categories"}
            if extra:
                raise FeatureError(f"unknown schema keys {sorted(extra)}")
            cats = tuple(d.get("categories", ()))
            if kind is FeatureKind.ONE_HOT and not cats:
                raise FeatureError(f"one-hot feature {d['name']} needs categories")
            feats.append(FeatureDef(d["name"], kind, cats))
        return cls(tuple(feats), int(doc["version"]))

    def columns_in(self, other: "FeatureSchema") -> np.ndarray:
        """Positions of this schema's slots inside ``other``'s slot order."""
        where = {s: i for i, s in enumerate(other.slot_names)}
        missing = [s for s in self.slot_names if s not in where]
        if missing:
            raise SchemaMismatchError(f"slots not provided by the extractor: {missing}")
        return np.array([where[s] for s in self.slot_names], dtype=np.int64)


_N, _B, _H = FeatureKind.NUMERIC, FeatureKind.BOOLEAN, FeatureKind.ONE_HOT
BLOCK_CATEGORIES = ("TopLevel", "FunctionBody", "ConditionalBody", "LoopBody")
TRIGGER_CATEGORIES = ("Manual", "Auto")

DEFAULT_SCHEMA = FeatureSchema((
    # prefix
    FeatureDef("prefix_length", _N),
    FeatureDef("matched_chars", _N),
    FeatureDef("case_sensitive_match", _B),
    FeatureDef("exact_match", _B),
    FeatureDef("match_ratio", _N),
    # syntactic context
    FeatureDef("is_keyword", _B),
    FeatureDef("is_same_file", _B),
    FeatureDef("is_same_module", _B),
    FeatureDef("is_corpus_only", _B),
    FeatureDef("same_file_count", _N),
    FeatureDef("global_count", _N),
    FeatureDef("candidate_length", _N),
    FeatureDef("same_file_recency", _N),
    FeatureDef("enclosing_block", _H, BLOCK_CATEGORIES),
    # syntactic history
    FeatureDef("navigated_to_definition_before", _B),
    FeatureDef("selected_before_in_user_history", _B),
    FeatureDef("selections_of_this_candidate_in_buffer", _N),
    # session history
    FeatureDef("session_duration_s", _N),
    FeatureDef("lookup_ordinal", _N),
    FeatureDef("baseline_rank_prev_lookup", _N),
    FeatureDef("trigger", _H, TRIGGER_CATEGORIES),
))

CONTEXT_SCHEMA = FeatureSchema((
    FeatureDef("session_duration_s", _N),
    FeatureDef("lookup_ordinal", _N),
    FeatureDef("trigger", _H, TRIGGER_CATEGORIES),
))

_COL = {s: i for i, s in enumerate(DEFAULT_SCHEMA.slot_names)}


@dataclass
class UserHistory:
    """Per-user state: recent selections and navigated definitions.

    ``salt`` keys the candidate hash; it lives only in memory and is never
    written next to the hashes it produces.
    """

    salt: bytes
    selected: deque = field(default_factory=lambda: deque(maxlen=HISTORY_CAPACITY))
    navigated: set = field(default_factory=set)
    _cache: dict = field(default_factory=dict, repr=False)

    def candidate_hash(self, text: str) -> int:
        h = self._cache.get(text)
        if h is None:
            digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8, key=self.salt).digest()
            h = self._cache[text] = int.from_bytes(digest, "little")
        return h

    def record_selection(self, candidate_id: int) -> None:
        self.selected.append(candidate_id)

    def record_navigation(self, candidate_id: int) -> None:
        self.navigated.add(candidate_id)


@dataclass(frozen=True)
class LookupState:
    """Session-level inputs to extraction for one look-up."""

    offset_ms: int
    ordinal: int
    manual: bool
    prev_ranks: dict | None = None  # candidate hash -> baseline rank in previous look-up


def extract_context_features(state: LookupState) -> np.ndarray:
    return np.array([
        state.offset_ms / 1000.0,
        float(state.ordinal),
        1.0 if state.manual else 0.0,
        0.0 if state.manual else 1.0,
    ])


def _matched_chars(prefix: str, text: str) -> int:
    n = 0
    for a, b in zip(prefix.lower(), text.lower()):
        if a != b:
            break
        n += 1
    return n


def extract_lookup_features(
    index: ScopeIndex,
    ctx: CaretContext,
    ids: Sequence[int],
    hashes: Sequence[int],
    history: UserHistory,
    state: LookupState,
) -> np.ndarray:
    """Default-schema rows for the candidates ``ids`` (vocabulary ids)."""
    ids = np.asarray(ids, dtype=np.int64)
    n = len(ids)
    out = np.zeros((n, DEFAULT_SCHEMA.arity))
    if n == 0:
        return out
    st = candidate_stats(index, ctx, ids)
    texts = [index.vocab[i] for i in ids]
    lengths = index.lengths[ids].astype(float)
    p = ctx.prefix

    matched = np.array([_matched_chars(p, t) for t in texts], dtype=float)
    out[:, _COL["prefix_length"]] = len(p)
    out[:, _COL["matched_chars"]] = matched
    out[:, _COL["case_sensitive_match"]] = [t.startswith(p) for t in texts]
    out[:, _COL["exact_match"]] = [t == p for t in texts]
    out[:, _COL["match_ratio"]] = matched / lengths

    out[:, _COL["is_keyword"]] = st.is_keyword
    out[:, _COL["is_same_file"]] = st.same_file > 0
    out[:, _COL["is_same_module"]] = st.same_dir > 0
    out[:, _COL["is_corpus_only"]] = (st.same_file <= 0) & ~st.is_keyword
    out[:, _COL["same_file_count"]] = st.same_file
    out[:, _COL["global_count"]] = st.global_count
    out[:, _COL["candidate_length"]] = lengths
    out[:, _COL["same_file_recency"]] = st.recency
    out[:, _COL[f"enclosing_block={BLOCK_CATEGORIES[ctx.enclosing_block]}"]] = 1.0

    buffer = Counter(history.selected)
    hashes = [int(h) for h in hashes]
    out[:, _COL["navigated_to_definition_before"]] = [h in history.navigated for h in hashes]
    out[:, _COL["selected_before_in_user_history"]] = [buffer[h] > 0 for h in hashes]
    out[:, _COL["selections_of_this_candidate_in_buffer"]] = [buffer[h] for h in hashes]

    out[:, _COL["session_duration_s"]] = state.offset_ms / 1000.0
    out[:, _COL["lookup_ordinal"]] = state.ordinal
    if state.prev_ranks is None:
        out[:, _COL["baseline_rank_prev_lookup"]] = MISSING
    else:
        out[:, _COL["baseline_rank_prev_lookup"]] = [state.prev_ranks.get(h, MISSING) for h in hashes]
    out[:, _COL["trigger=Manual" if state.manual else "trigger=Auto"]] = 1.0
    return out


def extract_candidate_features(
    candidate: str,
    ctx: CaretContext,
    index: ScopeIndex,
    history: UserHistory,
    state: LookupState,
    schema: FeatureSchema = DEFAULT_SCHEMA,
) -> np.ndarray:
    """Feature vector of one candidate, laid out in ``schema`` order."""
    cols = schema.columns_in(DEFAULT_SCHEMA)
    vid = index.vocab_id.get(candidate)
    if vid is None:
        raise FeatureError(f"candidate {candidate!r} is not in the index")
    row = extract_lookup_features(index, ctx, [vid], [history.candidate_hash(candidate)], history, state)
    return row[0, cols]


# ---------------------------------------------------------------------------
# permutation importance


def _stack(groups):
    feats = [np.asarray(g.features, dtype=np.float64) for g in groups]
    bounds = np.cumsum([0] + [len(f) for f in feats])
    return np.vstack(feats), bounds


def recall_at_1(model, X: np.ndarray, bounds: np.ndarray, targets: Sequence[np.ndarray]) -> float:
    """Share of groups whose top-scored row is the positive.

    Ties resolve to the earliest row, i.e. the better baseline rank.
    """
    scores = np.asarray(model.predict_matrix(X), dtype=np.float64)
    hits = 0
    for g, t in enumerate(targets):
        s = scores[bounds[g]:bounds[g + 1]]
        hits += int(t[int(np.argmax(s))] == 1)
    return hits / len(targets)


def permutation_importance(model, groups, feature: int, repeats: int = 3, seed: int = 0) -> float:
    if not groups:
        raise FeatureError("empty dataset")
    X, bounds = _stack(groups)
    if not 0 <= feature < X.shape[1]:
        raise ArityMismatchError(f"feature index {feature} outside arity {X.shape[1]}")
    n_model = getattr(model, "n_features", X.shape[1])
    if n_model != X.shape[1]:
        raise ArityMismatchError(f"model expects {n_model} features, data has {X.shape[1]}")
    targets = [np.asarray(g.targets) for g in groups]
    base = recall_at_1(model, X, bounds, targets)
    drops = []
    for r in range(repeats):
        rng = np.random.default_rng([seed, feature, r])
        Xp = X.copy()
        Xp[:, feature] = Xp[rng.permutation(len(Xp)), feature]
        drops.append(base - recall_at_1(model, Xp, bounds, targets))
    return float(np.mean(drops))


def all_importances(model, groups, repeats: int = 3, seed: int = 0) -> np.ndarray:
    arity = np.asarray(groups[0].features).shape[1]
    return np.array([permutation_importance(model, groups, f, repeats, seed) for f in range(arity)])


def prune_schema(
    schema: FeatureSchema,
    importances: Sequence[float],
    epsilon: float = DEFAULT_PRUNE_EPSILON,
    used: set[int] | None = None,
) -> FeatureSchema:
    """Drop definitions the model does not split on or whose importance is
    at most ``epsilon``. A one-hot group survives if any of its slots does."""
    importances = np.asarray(importances, dtype=float)
    if len(importances) != schema.arity:
        raise ArityMismatchError(f"{len(importances)} importances for arity {schema.arity}")
    keep = []
    for fdef, slots in zip(schema.features, schema.slot_groups()):
        if any(importances[s] > epsilon and (used is None or s in used) for s in slots):
            keep.append(fdef)
    if not keep:
        raise EmptySchemaError(f"no feature survives epsilon={epsilon}")
    return replace(schema, features=tuple(keep), version=schema.version + 1)
