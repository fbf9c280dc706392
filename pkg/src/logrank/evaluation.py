"""Offline Recall@K and online A/B metrics with a user-grouped bootstrap."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .log_schema import CompletionSession, Outcome, Trigger
from .ranker import rank_lookup

METRICS = ("explicit_select", "typed_select", "typing_actions", "prefix_length", "manual_start")
SCOPES = ("all", "initial")
TYPING_QUANTILE = 0.99


class EvaluationError(ValueError):
    pass


class EmptyScopeError(EvaluationError):
    pass


class TooFewUsersError(EvaluationError):
    pass


class NoQualifyingSessionsError(EvaluationError):
    pass


# ---------------------------------------------------------------------------
# offline


@dataclass(frozen=True)
class RankedLookup:
    """Where the ground truth landed after ranking; ``None`` if it was not listed."""

    ordinal: int
    position: int | None


def recall_at_k(lookups: Sequence[RankedLookup], k: int, scope: str = "all") -> float:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    chosen = [lk for lk in lookups if scope == "all" or lk.ordinal == 0]
    if not chosen:
        raise EmptyScopeError(f"no look-ups in scope {scope!r}")
    hits = sum(1 for lk in chosen if lk.position is not None and lk.position < k)
    return hits / len(chosen)


def ranked_lookups(sessions: Iterable[CompletionSession], model=None) -> list[RankedLookup]:
    """Ground-truth positions over every look-up of the select sessions.

    ``model=None`` keeps the logged baseline order; otherwise the model
    re-ranks the logged feature rows.
    """
    out = []
    for s in sessions:
        if not s.outcome.is_select:
            continue
        sel = s.selected_candidate
        for lk in s.lookups:
            pos = lk.position_of(sel)
            if pos is not None and model is not None:
                order = rank_lookup(model, lk)
                pos = int(np.flatnonzero(order == pos)[0])
            out.append(RankedLookup(lk.ordinal, pos))
    return out


@dataclass(frozen=True)
class OfflineReport:
    r_at: dict  # (k, scope) -> fraction
    counts: dict  # scope -> look-ups evaluated

    def as_dict(self) -> dict:
        d = {f"R@{k}_{scope}": v for (k, scope), v in sorted(self.r_at.items(), key=lambda kv: (kv[0][1], kv[0][0]))}
        d.update({f"lookups_{scope}": n for scope, n in self.counts.items()})
        return d


def offline_report(sessions: Sequence[CompletionSession], model=None, ks=(1, 5)) -> OfflineReport:
    lookups = ranked_lookups(sessions, model)
    r_at = {(k, scope): recall_at_k(lookups, k, scope) for scope in SCOPES for k in ks}
    counts = {"all": len(lookups), "initial": sum(1 for lk in lookups if lk.ordinal == 0)}
    return OfflineReport(r_at, counts)


def format_offline(reports: dict[str, OfflineReport]) -> str:
    cols = ["R@1_all", "R@5_all", "R@1_initial", "R@5_initial"]
    width = max(len(n) for n in reports) + 2
    lines = ["system".ljust(width) + "".join(c.rjust(13) for c in cols)]
    for name, rep in reports.items():
        d = rep.as_dict()
        lines.append(name.ljust(width) + "".join(f"{d[c]:13.4f}" for c in cols))
    any_rep = next(iter(reports.values()))
    lines.append(f"look-ups evaluated: all={any_rep.counts['all']} initial={any_rep.counts['initial']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# user split


def split_by_user(sessions: Sequence[CompletionSession], ratio: float = 0.8, seed: int = 0):
    """Partition users (not sessions) into train and holdout sides."""
    users = sorted({s.user_id for s in sessions})
    if len(users) < 2:
        raise TooFewUsersError(f"need at least 2 users, got {len(users)}")
    order = np.random.default_rng(seed).permutation(len(users))
    n_train = min(max(int(round(ratio * len(users))), 1), len(users) - 1)
    train_users = {users[i] for i in order[:n_train]}
    train = [s for s in sessions if s.user_id in train_users]
    holdout = [s for s in sessions if s.user_id not in train_users]
    return train, holdout


# ---------------------------------------------------------------------------
# online metrics


def nearest_rank(values: Sequence[float], q: float = TYPING_QUANTILE) -> float:
    ordered = sorted(values)
    rank = math.ceil(round(q * len(ordered), 9))
    return ordered[max(rank, 1) - 1]


def online_metric(kind: str, sessions: Sequence[CompletionSession], cutoff: bool = True) -> float:
    if kind not in METRICS:
        raise ValueError(f"unknown metric {kind!r}")
    if not sessions:
        raise NoQualifyingSessionsError("no sessions")
    n = len(sessions)
    if kind == "explicit_select":
        return sum(s.outcome is Outcome.EXPLICIT_SELECT for s in sessions) / n
    if kind == "typed_select":
        return sum(s.outcome is Outcome.TYPED_SELECT for s in sessions) / n
    if kind == "manual_start":
        return sum(s.trigger is Trigger.MANUAL for s in sessions) / n
    if kind == "typing_actions":
        counts = [s.typing_actions for s in sessions]
        if cutoff:
            q = nearest_rank(counts)
            counts = [c for c in counts if c <= q]
        return sum(counts) / len(counts)
    prefixes = [s.final_prefix_length for s in sessions if s.outcome is Outcome.EXPLICIT_SELECT]
    if not prefixes:
        raise NoQualifyingSessionsError("no explicit-select sessions")
    return sum(prefixes) / len(prefixes)


@dataclass(frozen=True)
class BootstrapConfig:
    resamples: int = 1000
    seed: int = 0
    alpha: float = 0.01

    def __post_init__(self):
        if self.resamples < 1:
            raise ValueError("resamples must be >= 1")
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must be in (0, 1)")


class UserStats:
    """Per-user sufficient statistics for every online metric.

    A metric over any multiset of users is a function of the weighted sums
    of these rows, which keeps each bootstrap resample a matrix product.
    """

    def __init__(self, sessions: Sequence[CompletionSession]):
        by_user: dict[str, list[CompletionSession]] = {}
        for s in sessions:
            by_user.setdefault(s.user_id, []).append(s)
        self.users = sorted(by_user)
        U = len(self.users)
        top = max((s.typing_actions for s in sessions), default=0)
        self.sessions = np.zeros(U)
        self.explicit = np.zeros(U)
        self.typed = np.zeros(U)
        self.manual = np.zeros(U)
        self.prefix_sum = np.zeros(U)
        self.typing_hist = np.zeros((U, top + 1))
        for u, name in enumerate(self.users):
            for s in by_user[name]:
                self.sessions[u] += 1
                self.typed[u] += s.outcome is Outcome.TYPED_SELECT
                self.manual[u] += s.trigger is Trigger.MANUAL
                self.typing_hist[u, s.typing_actions] += 1
                if s.outcome is Outcome.EXPLICIT_SELECT:
                    self.explicit[u] += 1
                    self.prefix_sum[u] += s.final_prefix_length

    def metric(self, kind: str, weights: np.ndarray) -> np.ndarray:
        """Metric value for each row of user multiplicities ``weights`` (R, U)."""
        W = np.atleast_2d(weights)
        with np.errstate(invalid="ignore", divide="ignore"):
            if kind == "explicit_select":
                return W @ self.explicit / (W @ self.sessions)
            if kind == "typed_select":
                return W @ self.typed / (W @ self.sessions)
            if kind == "manual_start":
                return W @ self.manual / (W @ self.sessions)
            if kind == "prefix_length":
                return W @ self.prefix_sum / (W @ self.explicit)
            if kind == "typing_actions":
                hist = W @ self.typing_hist  # (R, C)
                total = hist.sum(axis=1)
                rank = np.ceil(np.round(TYPING_QUANTILE * total, 9))
                cum = np.cumsum(hist, axis=1)
                q = (cum < rank[:, None]).sum(axis=1)  # first value whose cumulative count reaches rank
                keep = np.arange(hist.shape[1])[None, :] <= q[:, None]
                kept = np.where(keep, hist, 0.0)
                return (kept @ np.arange(hist.shape[1])) / kept.sum(axis=1)
        raise ValueError(f"unknown metric {kind!r}")


def _resample_weights(rng, n_users: int) -> np.ndarray:
    return np.bincount(rng.integers(0, n_users, n_users), minlength=n_users).astype(float)


def bootstrap_diffs(stats_a: UserStats, stats_b: UserStats, kind: str, config: BootstrapConfig) -> np.ndarray:
    """Resampled ``metric(B) - metric(A)``; resample ``r`` draws from a
    generator seeded with ``(config.seed, r)``."""
    Ua, Ub = len(stats_a.users), len(stats_b.users)
    Wa = np.empty((config.resamples, Ua))
    Wb = np.empty((config.resamples, Ub))
    for r in range(config.resamples):
        rng = np.random.default_rng([config.seed, r])
        Wa[r] = _resample_weights(rng, Ua)
        Wb[r] = _resample_weights(rng, Ub)
    return stats_b.metric(kind, Wb) - stats_a.metric(kind, Wa)


def pvalue_from_diffs(diffs: np.ndarray) -> float:
    lo = int(np.sum(diffs <= 0)) + 1
    hi = int(np.sum(diffs >= 0)) + 1
    return min(1.0, 2.0 * min(lo, hi) / (len(diffs) + 1))


def bootstrap_pvalue(sessions_a, sessions_b, kind: str, config: BootstrapConfig = BootstrapConfig()) -> float:
    """Two-sided bootstrap p-value for a difference in ``kind``, users resampled
    with replacement within each group."""
    stats_a, stats_b = UserStats(sessions_a), UserStats(sessions_b)
    for name, st in (("A", stats_a), ("B", stats_b)):
        if len(st.users) < 2:
            raise TooFewUsersError(f"group {name} has {len(st.users)} users, need >= 2")
    return pvalue_from_diffs(bootstrap_diffs(stats_a, stats_b, kind, config))


@dataclass(frozen=True)
class MetricResult:
    a: float
    b: float
    p: float
    significant: bool


@dataclass(frozen=True)
class AbReport:
    metrics: dict  # name -> MetricResult
    config: BootstrapConfig
    sessions: tuple[int, int]
    users: tuple[int, int]

    def as_dict(self) -> dict:
        d = {name: asdict(r) for name, r in self.metrics.items()}
        d["config"] = {**asdict(self.config), "sessions": list(self.sessions), "users": list(self.users)}
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, allow_nan=False) + "\n"

    def to_text(self, names=("A", "B")) -> str:
        lines = [f"{'metric':<18}{names[0]:>12}{names[1]:>12}{'p-value':>10}  sig"]
        for name, r in self.metrics.items():
            flag = "*" if r.significant else ""
            lines.append(f"{name:<18}{r.a:>12.4f}{r.b:>12.4f}{r.p:>10.4f}  {flag}")
        lines.append(
            f"resamples={self.config.resamples} alpha={self.config.alpha} seed={self.config.seed} "
            f"sessions={self.sessions[0]}/{self.sessions[1]} users={self.users[0]}/{self.users[1]}"
        )
        return "\n".join(lines) + "\n"


def ab_report(sessions_a, sessions_b, config: BootstrapConfig = BootstrapConfig()) -> AbReport:
    stats_a, stats_b = UserStats(sessions_a), UserStats(sessions_b)
    for name, st in (("A", stats_a), ("B", stats_b)):
        if len(st.users) < 2:
            raise TooFewUsersError(f"group {name} has {len(st.users)} users, need >= 2")
    results = {}
    for kind in METRICS:
        a = online_metric(kind, sessions_a)
        b = online_metric(kind, sessions_b)
        p = pvalue_from_diffs(bootstrap_diffs(stats_a, stats_b, kind, config))
        results[kind] = MetricResult(a, b, p, p < config.alpha)
    return AbReport(results, config, (len(sessions_a), len(sessions_b)),
                    (len(stats_a.users), len(stats_b.users)))
