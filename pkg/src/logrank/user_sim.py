"""Replays a corpus as simulated completion sessions.

Each simulated user walks through a few files token by token and opens a
completion session at every sufficiently long identifier or keyword. The
simulated user only ever accepts the true next token, so every positive
label in the resulting logs is correct.

Randomness is split so that A/B arms differ only in ranking: the walk,
trigger kind and salt come from a per-user stream, and every session's
policy draws come from its own stream keyed by the session ordinal.
"""

from __future__ import annotations

import datetime as dt
import zlib
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .candidate_provider import (
    CaretContext,
    EmptyCorpusError,
    ScopeIndex,
    provide,
)
from .features import (
    DEFAULT_SCHEMA,
    FeatureSchema,
    LookupState,
    SchemaMismatchError,
    UserHistory,
    extract_context_features,
    extract_lookup_features,
)
from .log_schema import (
    CompletionSession,
    EventKind,
    LookupRecord,
    Outcome,
    SessionEvent,
    SessionHeader,
    Trigger,
    validate_session,
)
from .ranker import rank_lookup


@dataclass(frozen=True)
class SimConfig:
    visible_window: int = 5
    select_prob_by_rank: tuple[float, ...] = (0.8, 0.55, 0.35, 0.2, 0.1)
    manual_start_prob: float = 0.05
    explicit_cancel_prob_per_step: float = 0.01
    min_token_length: int = 3
    users: int = 120
    sessions_per_user: int = 50
    master_seed: int = 42
    files_per_user: int = 4
    sessions_per_visit: int = 15
    navigate_prob: float = 0.2
    candidate_cap: int = 64
    action_ms: int = 120
    start_date: str = "2026-09-07"
    days: int = 7

    def __post_init__(self):
        object.__setattr__(self, "select_prob_by_rank", tuple(float(q) for q in self.select_prob_by_rank))
        q = self.select_prob_by_rank
        if len(q) != self.visible_window:
            raise ValueError("select_prob_by_rank needs one entry per visible rank")
        if any(b > a for a, b in zip(q, q[1:])):
            raise ValueError("select_prob_by_rank must be non-increasing")
        probs = q + (self.manual_start_prob, self.explicit_cancel_prob_per_step, self.navigate_prob)
        if any(not 0.0 <= p <= 1.0 for p in probs):
            raise ValueError("probabilities must lie in [0, 1]")
        if self.users < 1 or self.sessions_per_user < 1 or self.min_token_length < 1:
            raise ValueError("users, sessions_per_user and min_token_length must be positive")
        dt.date.fromisoformat(self.start_date)


# ---------------------------------------------------------------------------
# rankers under test


class HeuristicRanker:
    """Keeps the provider's baseline order."""

    name = "heuristic"
    n_features = None

    def order(self, lookup: LookupRecord) -> np.ndarray:
        return np.arange(len(lookup))


@dataclass
class ModelRanker:
    model: object
    name: str = "model"

    @property
    def n_features(self) -> int:
        return self.model.n_features

    def order(self, lookup: LookupRecord) -> np.ndarray:
        return rank_lookup(self.model, lookup)


# ---------------------------------------------------------------------------
# policy


@dataclass(frozen=True)
class Action:
    kind: str  # "select", "type" or "cancel"
    rank: int = 0  # 1-based visible rank for "select"


def policy_step(rng, visible: Sequence[int], truth: int, config: SimConfig) -> Action:
    """One decision of the simulated user at the current look-up."""
    window = list(visible)[: config.visible_window]
    if truth in window:
        r = window.index(truth) + 1
        if rng.random() < config.select_prob_by_rank[r - 1]:
            return Action("select", r)
    if rng.random() < config.explicit_cancel_prob_per_step:
        return Action("cancel")
    return Action("type")


# ---------------------------------------------------------------------------
# replay


def _population_code(population: str) -> int:
    return zlib.crc32(population.encode("utf-8"))


@dataclass
class ReplayState:
    """Mutable state of one open session."""

    file_id: str
    cursor: int  # byte offset of the token under completion
    prefix: str
    history: UserHistory
    rng: np.random.Generator  # this session's policy stream


def _eligible(index: ScopeIndex, min_len: int) -> dict[str, np.ndarray]:
    ok = index.lengths >= min_len
    return {fid: np.flatnonzero(ok[ft.token_ids]) for fid, ft in index.files.items()}


def simulate_session(index: ScopeIndex, ranker, config: SimConfig, state: ReplayState, token: str,
                     block, manual: bool, schema_cols=None) -> list[SessionEvent] | None:
    """Events of one session completing ``token``; ``None`` if the first
    look-up would be empty (no session opens)."""
    history = state.history
    truth = history.candidate_hash(token)
    offset_ms, lk_ordinal, prev_ranks = 0, 0, None
    events: list[SessionEvent] = []
    outcome, selected = None, None
    while True:
        ctx = CaretContext(state.file_id, state.cursor, state.prefix, block)
        ids = provide(index, ctx, config.candidate_cap)
        if len(ids) == 0:
            if not events:
                return None
            # the character just typed closed the empty pop-up
            outcome = Outcome.TYPED_CANCEL
            offset_ms -= config.action_ms
            break
        hashes = [history.candidate_hash(index.vocab[i]) for i in ids]
        lk_state = LookupState(offset_ms, lk_ordinal, manual, prev_ranks)
        feats = extract_lookup_features(index, ctx, ids, hashes, history, lk_state)
        if schema_cols is not None:
            feats = feats[:, schema_cols]
        lookup = LookupRecord(lk_ordinal, len(state.prefix), extract_context_features(lk_state), hashes, feats)
        kind = EventKind.STARTED if lk_ordinal == 0 else EventKind.CHAR_TYPED
        events.append(SessionEvent(kind, offset_ms, lookup))

        if len(state.prefix) == len(token):
            if truth in hashes:
                outcome, selected = Outcome.TYPED_SELECT, truth
            else:
                outcome = Outcome.TYPED_CANCEL
            break
        order = ranker.order(lookup)
        visible = [hashes[i] for i in order[: config.visible_window]]
        action = policy_step(state.rng, visible, truth, config)
        if action.kind == "select":
            for _ in range(action.rank - 1):
                offset_ms += config.action_ms
                events.append(SessionEvent(EventKind.NAV_DOWN, offset_ms))
            outcome, selected = Outcome.EXPLICIT_SELECT, truth
            break
        if action.kind == "cancel":
            outcome = Outcome.EXPLICIT_CANCEL
            break
        state.prefix = token[: len(state.prefix) + 1]
        offset_ms += config.action_ms
        prev_ranks = {h: r for r, h in enumerate(hashes)}
        lk_ordinal += 1

    offset_ms += config.action_ms
    events.append(SessionEvent(EventKind.FINISHED, offset_ms, outcome=outcome, selected_candidate=selected))
    if outcome.is_select:
        history.record_selection(truth)
    if state.rng.random() < config.navigate_prob:
        history.record_navigation(truth)
    return events


def simulate_user(index, ranker, config: SimConfig, u: int, population: str = "logs",
                  schema: FeatureSchema = DEFAULT_SCHEMA, eligible=None) -> list[CompletionSession]:
    pop = _population_code(population)
    rng = np.random.default_rng([config.master_seed, pop, u])
    user_id = f"u{int(rng.integers(10**9, 10**10))}"
    history = UserHistory(salt=rng.bytes(16))
    cols = schema.columns_in(DEFAULT_SCHEMA)
    eligible = eligible if eligible is not None else _eligible(index, config.min_token_length)
    file_ids = sorted(f for f, e in eligible.items() if len(e))
    if not file_ids:
        raise EmptyCorpusError("no file holds a token long enough to open a session")
    k = min(config.files_per_user, len(file_ids))
    assigned = [file_ids[i] for i in rng.choice(len(file_ids), size=k, replace=False)]
    start = dt.date.fromisoformat(config.start_date)

    sessions: list[CompletionSession] = []
    opened = 0
    visit = 0
    idle_visits = 0
    while opened < config.sessions_per_user and idle_visits < len(assigned):
        fid = assigned[visit % len(assigned)]
        visit += 1
        positions = eligible[fid]
        begin = int(rng.integers(0, len(positions)))
        produced = 0
        for ordinal in positions[begin:].tolist():
            if produced >= config.sessions_per_visit or opened >= config.sessions_per_user:
                break
            manual = bool(rng.random() < config.manual_start_prob)
            ft = index.files[fid]
            token = index.vocab[int(ft.token_ids[ordinal])]
            cursor = int(ft.offsets[ordinal])
            state = ReplayState(fid, cursor, "" if manual else token[0], history,
                                np.random.default_rng([config.master_seed, pop, u, opened]))
            events = simulate_session(index, ranker, config, state, token, ft.block_at(cursor), manual, cols)
            if events is None:
                continue
            day = start + dt.timedelta(days=opened * config.days // config.sessions_per_user)
            header = SessionHeader(user_id, f"{user_id}s{opened:05d}", day,
                                   Trigger.MANUAL if manual else Trigger.AUTO)
            sessions.append(validate_session(events, header))
            opened += 1
            produced += 1
        idle_visits = idle_visits + 1 if produced == 0 else 0
    return sessions


def replay_corpus(index: ScopeIndex, ranker, config: SimConfig, population: str = "logs",
                  schema: FeatureSchema = DEFAULT_SCHEMA) -> list[CompletionSession]:
    """Simulated sessions of every user, concatenated in user-ordinal order."""
    if not index.files:
        raise EmptyCorpusError("corpus has no files")
    if ranker.n_features is not None and ranker.n_features != schema.arity:
        raise SchemaMismatchError(
            f"ranker expects {ranker.n_features} features, schema has {schema.arity}"
        )
    eligible = _eligible(index, config.min_token_length)
    out = []
    for u in range(config.users):
        out.extend(simulate_user(index, ranker, config, u, population, schema, eligible))
    return out
