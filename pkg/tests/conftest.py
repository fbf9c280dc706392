import datetime as dt

import numpy as np
import pytest

from logrank.candidate_provider import build_index, load_keywords, read_corpus
from logrank.demo_corpus import bundled_path
from logrank.log_schema import (
    EventKind,
    LookupRecord,
    Outcome,
    SessionEvent,
    SessionHeader,
    Trigger,
    validate_session,
)
from logrank.ranker import QueryGroup
from logrank.user_sim import HeuristicRanker, SimConfig, replay_corpus


@pytest.fixture(scope="session")
def demo_index():
    return build_index(read_corpus(bundled_path(), ["**/*.py"]), load_keywords())


@pytest.fixture(scope="session")
def small_config():
    return SimConfig(users=12, sessions_per_user=20, master_seed=42)


@pytest.fixture(scope="session")
def small_log(demo_index, small_config):
    return replay_corpus(demo_index, HeuristicRanker(), small_config)


def lookup(ordinal, prefix_length, ids, width=3, seed=0):
    rng = np.random.default_rng([seed, ordinal])
    return LookupRecord(ordinal, prefix_length, np.array([0.0, ordinal, 0.0, 1.0]),
                        np.array(ids, dtype=np.uint64), rng.normal(size=(len(ids), width)))


def make_session(lookups, outcome, selected=None, navs=0, user="u1", sid="s1", trigger=Trigger.AUTO):
    """Started, one CharTyped per further look-up, ``navs`` NavDown, Finished."""
    events, t = [], 0
    for i, lk in enumerate(lookups):
        kind = EventKind.STARTED if i == 0 else EventKind.CHAR_TYPED
        events.append(SessionEvent(kind, t, lk))
        t += 120
    for _ in range(navs):
        events.append(SessionEvent(EventKind.NAV_DOWN, t))
        t += 120
    events.append(SessionEvent(EventKind.FINISHED, t, outcome=outcome, selected_candidate=selected))
    return validate_session(events, SessionHeader(user, sid, dt.date(2026, 9, 7), trigger))


def random_groups(n_groups, n_features=3, seed=0, informative=True, sizes=(2, 8)):
    rng = np.random.default_rng(seed)
    groups = []
    for _ in range(n_groups):
        n = int(rng.integers(sizes[0], sizes[1] + 1))
        X = rng.normal(size=(n, n_features))
        pos = int(rng.integers(n))
        if informative:
            X[pos, 0] += 2.0
        t = np.zeros(n, dtype=int)
        t[pos] = 1
        groups.append(QueryGroup(X, t))
    return groups


__all__ = ["lookup", "make_session", "random_groups", "Outcome"]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for ac in sorted(results):
            terminalreporter.write_line(results[ac])
