import dataclasses

import numpy as np
import pytest

from logrank.candidate_provider import Block, EmptyCorpusError, build_index
from logrank.features import UserHistory
from logrank.log_schema import EventKind, Outcome, Trigger, encode_sessions, labeled_groups
from logrank.ranker import TrainParams, fit
from logrank.user_sim import (
    HeuristicRanker,
    ModelRanker,
    ReplayState,
    SimConfig,
    policy_step,
    replay_corpus,
    simulate_session,
)


class Draws:
    """Stand-in generator returning scripted uniform draws."""

    def __init__(self, *values):
        self.values = list(values)

    def random(self):
        return self.values.pop(0)


CFG = SimConfig()


def test_policy_select_rank_one():
    a = policy_step(Draws(0.3), [7, 8, 9], 7, CFG)
    assert (a.kind, a.rank) == ("select", 1)


def test_policy_rank_probabilities():
    assert policy_step(Draws(0.5, 0.5), [1, 2, 3], 3, CFG).kind == "type"  # 0.5 >= q3 = 0.35
    a = policy_step(Draws(0.3), [1, 2, 3], 3, CFG)
    assert (a.kind, a.rank) == ("select", 3)


def test_policy_cancel_and_type():
    assert policy_step(Draws(0.005), [1, 2], 99, CFG).kind == "cancel"
    assert policy_step(Draws(0.5), [1, 2], 99, CFG).kind == "type"


def test_policy_ignores_rows_past_window():
    vis = list(range(10))
    assert policy_step(Draws(0.5), vis, 7, CFG).kind == "type"


@pytest.mark.parametrize("kw", [dict(select_prob_by_rank=(0.1, 0.2, 0.1, 0.1, 0.1)),
                                dict(manual_start_prob=1.5), dict(select_prob_by_rank=(0.8,)),
                                dict(explicit_cancel_prob_per_step=-0.1), dict(users=0)])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        SimConfig(**kw)


@pytest.fixture
def mini():
    idx = build_index([("a.py", "selfish = 1\nsend(selfish)\n"), ("b.py", "sel")])
    return idx


def _state(idx, prefix, seed=0):
    return ReplayState("b.py", 0, prefix, UserHistory(salt=b"s" * 16), np.random.default_rng(seed))


def test_absent_token_types_to_cancel(mini):
    cfg = SimConfig(explicit_cancel_prob_per_step=0.0)
    events = simulate_session(mini, HeuristicRanker(), cfg, _state(mini, "s"), "sexton", Block.TOP_LEVEL, False)
    kinds = [e.kind for e in events]
    assert kinds[0] is EventKind.STARTED and kinds[-1] is EventKind.FINISHED
    assert set(kinds[1:-1]) <= {EventKind.CHAR_TYPED}
    assert events[-1].outcome is Outcome.TYPED_CANCEL
    # "s" and "se" list candidates, "sex" lists none
    assert [e.lookup.prefix_length for e in events if e.lookup is not None] == [1, 2]
    assert [e.offset_ms for e in events] == [0, 120, 240]


def test_never_selected_but_present_is_typed_select(mini):
    cfg = SimConfig(select_prob_by_rank=(0.0,) * 5, explicit_cancel_prob_per_step=0.0)
    events = simulate_session(mini, HeuristicRanker(), cfg, _state(mini, "s"), "selfish", Block.TOP_LEVEL, False)
    assert events[-1].outcome is Outcome.TYPED_SELECT
    assert events[-1].lookup is None and events[-2].lookup.prefix_length == len("selfish")


def test_manual_session_starts_empty(mini):
    cfg = SimConfig(select_prob_by_rank=(1.0,) * 5)
    events = simulate_session(mini, HeuristicRanker(), cfg, _state(mini, ""), "selfish", Block.TOP_LEVEL, True)
    assert events[0].lookup.prefix_length == 0
    assert events[0].lookup.shared_features.tolist() == [0.0, 0.0, 1.0, 0.0]
    assert events[-1].outcome is Outcome.EXPLICIT_SELECT


def test_select_at_rank_emits_nav_downs(mini):
    # at prefix "s" both candidates are corpus-only; "send" wins on the 2*|p|/|c| term
    cfg = SimConfig(select_prob_by_rank=(1.0,) * 5)
    events = simulate_session(mini, HeuristicRanker(), cfg, _state(mini, "s"), "selfish", Block.TOP_LEVEL, False)
    navs = sum(e.kind is EventKind.NAV_DOWN for e in events)
    first = events[0].lookup
    h = UserHistory(salt=b"s" * 16).candidate_hash("selfish")
    assert navs == first.position_of(h) > 0
    assert events[-1].outcome is Outcome.EXPLICIT_SELECT
    assert events[-1].offset_ms == 120 * (navs + 1)


def test_no_session_when_first_lookup_empty(mini):
    assert simulate_session(mini, HeuristicRanker(), CFG, _state(mini, "q"), "qqq", Block.TOP_LEVEL, False) is None


def test_empty_corpus():
    with pytest.raises(EmptyCorpusError):
        replay_corpus(build_index([]), HeuristicRanker(), SimConfig(users=1))
    with pytest.raises(EmptyCorpusError):
        replay_corpus(build_index([("a.py", "x y z")]), HeuristicRanker(), SimConfig(users=1))


def test_replay_is_deterministic(demo_index, small_config, small_log):
    again = replay_corpus(demo_index, HeuristicRanker(), small_config)
    assert encode_sessions(again) == encode_sessions(small_log)


def test_session_counts_and_ids(small_log, small_config):
    assert len(small_log) == small_config.users * small_config.sessions_per_user
    assert len({s.session_id for s in small_log}) == len(small_log)
    assert len({s.user_id for s in small_log}) == small_config.users


def test_selections_only_inside_window(small_log, small_config):
    for s in small_log:
        if s.outcome is Outcome.EXPLICIT_SELECT:
            pos = s.lookups[-1].position_of(s.selected_candidate)
            navs = sum(e.kind is EventKind.NAV_DOWN for e in s.events)
            assert pos == navs < small_config.visible_window
    assert labeled_groups(small_log)


def test_auto_sessions_start_after_one_char(small_log):
    for s in small_log:
        expected = 0 if s.trigger is Trigger.MANUAL else 1
        assert s.lookups[0].prefix_length == expected


def test_triggers_independent_of_ranker(demo_index, small_config, small_log):
    model = fit(labeled_groups(small_log), TrainParams(iterations=15, depth=4))
    other = replay_corpus(demo_index, ModelRanker(model), small_config)
    assert len(other) == len(small_log)
    assert [(s.session_id, s.trigger, s.lookups[0].prefix_length, s.session_date) for s in other] == \
           [(s.session_id, s.trigger, s.lookups[0].prefix_length, s.session_date) for s in small_log]
    assert [s.outcome for s in other] != [s.outcome for s in small_log] or \
           [s.typing_actions for s in other] != [s.typing_actions for s in small_log]


def test_zero_select_probability(demo_index):
    cfg = SimConfig(users=4, sessions_per_user=15, select_prob_by_rank=(0.0,) * 5)
    ss = replay_corpus(demo_index, HeuristicRanker(), cfg)
    assert ss
    assert {s.outcome for s in ss} <= {Outcome.TYPED_SELECT, Outcome.TYPED_CANCEL, Outcome.EXPLICIT_CANCEL}
    no_cancel = dataclasses.replace(cfg, explicit_cancel_prob_per_step=0.0)
    ss = replay_corpus(demo_index, HeuristicRanker(), no_cancel)
    assert {s.outcome for s in ss} <= {Outcome.TYPED_SELECT, Outcome.TYPED_CANCEL}


def test_population_tag_changes_users(demo_index):
    cfg = SimConfig(users=2, sessions_per_user=3)
    a = replay_corpus(demo_index, HeuristicRanker(), cfg, population="logs")
    b = replay_corpus(demo_index, HeuristicRanker(), cfg, population="ab")
    assert {s.user_id for s in a} != {s.user_id for s in b}
