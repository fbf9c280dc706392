import datetime as dt
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lookup, make_session
from logrank.log_schema import (
    SCHEMA_VERSION,
    EventKind,
    LookupGapError,
    LookupRecord,
    MalformedRecordError,
    MissingFinishedError,
    MissingStartedError,
    NonMonotoneTimeError,
    NotASelectOutcomeError,
    Outcome,
    SchemaVersionMismatchError,
    SelectWithoutCandidateError,
    SessionEvent,
    SessionHeader,
    Trigger,
    decode_log,
    decode_sessions,
    encode_sessions,
    labeled_groups,
    leakage_scan,
    to_labeled_groups,
    validate_session,
)

HEADER = SessionHeader("u7", "s1", dt.date(2026, 9, 7), Trigger.AUTO)


def test_minimal_session_is_valid():
    lk = lookup(0, 1, [11, 22])
    s = validate_session([SessionEvent(EventKind.STARTED, 0, lk),
                          SessionEvent(EventKind.FINISHED, 120, outcome=Outcome.EXPLICIT_SELECT,
                                       selected_candidate=22)], HEADER)
    assert s.outcome is Outcome.EXPLICIT_SELECT
    assert len(s.lookups) == 1


def test_char_typed_without_lookup_is_rejected():
    events = [SessionEvent(EventKind.STARTED, 0, lookup(0, 1, [1, 2])),
              SessionEvent(EventKind.CHAR_TYPED, 120)]
    with pytest.raises(LookupGapError):
        validate_session(events, HEADER)


def test_typed_twice_then_second_suggestion():
    # started, two typed characters, one step down, select the second item
    lks = [lookup(0, 0, [5, 6, 7]), lookup(1, 1, [6, 5]), lookup(2, 2, [5, 6])]
    s = make_session(lks, Outcome.EXPLICIT_SELECT, selected=6, navs=1)
    assert len(s.lookups) == 3
    assert s.typing_actions == 2
    assert [e.kind for e in s.events] == [EventKind.STARTED, EventKind.CHAR_TYPED, EventKind.CHAR_TYPED,
                                          EventKind.NAV_DOWN, EventKind.FINISHED]
    groups = to_labeled_groups(s)
    assert [g.targets.tolist() for g in groups][-1] == [0, 1]


@pytest.mark.parametrize("events,err", [
    ([], MissingStartedError),
    ([SessionEvent(EventKind.CHAR_TYPED, 0, lookup(0, 1, [1, 2]))], MissingStartedError),
    ([SessionEvent(EventKind.STARTED, 0, lookup(0, 1, [1, 2]))], MissingFinishedError),
    ([SessionEvent(EventKind.STARTED, 0, lookup(0, 1, [1, 2])),
      SessionEvent(EventKind.CHAR_TYPED, 240, lookup(1, 2, [1, 2])),
      SessionEvent(EventKind.FINISHED, 120, outcome=Outcome.EXPLICIT_CANCEL)], NonMonotoneTimeError),
    ([SessionEvent(EventKind.STARTED, 0, lookup(0, 1, [1, 2])),
      SessionEvent(EventKind.CHAR_TYPED, 120, lookup(2, 2, [1, 2])),
      SessionEvent(EventKind.FINISHED, 240, outcome=Outcome.EXPLICIT_CANCEL)], LookupGapError),
    ([SessionEvent(EventKind.STARTED, 0, lookup(0, 1, [1, 2])),
      SessionEvent(EventKind.FINISHED, 120, outcome=Outcome.EXPLICIT_SELECT)], SelectWithoutCandidateError),
    ([SessionEvent(EventKind.STARTED, 0, lookup(0, 1, [1, 2])),
      SessionEvent(EventKind.FINISHED, 120, outcome=Outcome.EXPLICIT_SELECT,
                   selected_candidate=3)], SelectWithoutCandidateError),
])
def test_validation_errors(events, err):
    with pytest.raises(err):
        validate_session(events, HEADER)


def test_started_offset_must_be_zero():
    events = [SessionEvent(EventKind.STARTED, 5, lookup(0, 1, [1, 2])),
              SessionEvent(EventKind.FINISHED, 120, outcome=Outcome.EXPLICIT_CANCEL)]
    with pytest.raises(NonMonotoneTimeError):
        validate_session(events, HEADER)


def test_prefix_must_grow_by_one_per_char():
    with pytest.raises(LookupGapError):
        make_session([lookup(0, 1, [1, 2]), lookup(1, 3, [1, 2])], Outcome.EXPLICIT_CANCEL)


def test_typed_select_may_use_any_lookup():
    s = make_session([lookup(0, 1, [1, 2]), lookup(1, 2, [2])], Outcome.TYPED_SELECT, selected=1)
    assert s.selected_candidate == 1


def test_cancel_yields_no_groups():
    s = make_session([lookup(0, 1, [1, 2])], Outcome.EXPLICIT_CANCEL)
    with pytest.raises(NotASelectOutcomeError):
        to_labeled_groups(s)
    assert labeled_groups([s]) == []


def test_lookups_without_selected_id_are_dropped():
    lks = [lookup(0, 1, [1, 2, 3]), lookup(1, 2, [9, 2]), lookup(2, 3, [9, 4])]
    s = make_session(lks, Outcome.EXPLICIT_SELECT, selected=9)
    groups = to_labeled_groups(s)
    assert [g.group_id for g in groups] == [("s1", 1), ("s1", 2)]
    assert [g.targets.tolist() for g in groups] == [[1, 0], [1, 0]]


def test_single_candidate_lookup_is_dropped():
    s = make_session([lookup(0, 1, [1, 2]), lookup(1, 2, [1])], Outcome.EXPLICIT_SELECT, selected=1)
    assert [g.group_id for g in to_labeled_groups(s)] == [("s1", 0)]


def test_round_trip_two_sessions():
    a = make_session([lookup(0, 1, [1, 2]), lookup(1, 2, [2, 1])], Outcome.EXPLICIT_SELECT, selected=1,
                     sid="a")
    b = make_session([lookup(0, 0, [3, 4, 5])], Outcome.EXPLICIT_CANCEL, sid="b", trigger=Trigger.MANUAL)
    data = encode_sessions([a, b], "0123456789abcdef")
    header, back = decode_log(data)
    assert header.schema_version == SCHEMA_VERSION
    assert header.feature_schema_hash == "0123456789abcdef"
    assert back == [a, b]
    assert encode_sessions(back, "0123456789abcdef") == data


def test_nan_survives_round_trip():
    lk = LookupRecord(0, 1, np.array([0.0, 0, 0, 1]), np.array([1, 2], dtype=np.uint64),
                      np.array([[np.nan, 1.0], [2.0, np.nan]]))
    s = make_session([lk], Outcome.EXPLICIT_CANCEL)
    back = decode_sessions(encode_sessions([s]))[0]
    assert np.isnan(back.lookups[0].features[0, 0]) and back == s


def test_extra_field_is_rejected():
    s = make_session([lookup(0, 1, [1, 2])], Outcome.EXPLICIT_CANCEL)
    head, line = encode_sessions([s]).decode().splitlines()
    obj = json.loads(line)
    obj["source_text"] = "print"
    with pytest.raises(MalformedRecordError) as info:
        decode_log((head + "\n" + json.dumps(obj) + "\n").encode())
    assert info.value.line == 2


def test_nested_extra_field_is_rejected():
    s = make_session([lookup(0, 1, [1, 2])], Outcome.EXPLICIT_CANCEL)
    head, line = encode_sessions([s]).decode().splitlines()
    obj = json.loads(line)
    obj["events"][0]["lookup"]["candidates"][0]["text"] = "foo"
    with pytest.raises(MalformedRecordError):
        decode_log((head + "\n" + json.dumps(obj) + "\n").encode())


def test_schema_version_mismatch():
    data = b'{"schema_version":99,"feature_schema_hash":""}\n'
    with pytest.raises(SchemaVersionMismatchError):
        decode_log(data)


def test_empty_stream():
    assert decode_sessions(b"") == []


def test_invalid_json_reports_line():
    s = make_session([lookup(0, 1, [1, 2])], Outcome.EXPLICIT_CANCEL)
    data = encode_sessions([s]) + b"{not json\n"
    with pytest.raises(MalformedRecordError) as info:
        decode_log(data)
    assert info.value.line == 3


def test_leakage_planted_and_whitelist():
    s = make_session([lookup(0, 1, [1, 2])], Outcome.EXPLICIT_CANCEL)
    data = encode_sessions([s], "0123456789abcdef")
    vocab = {"setOut", "features", "candidates", "ExplicitCancel", "null"}
    assert leakage_scan(data, vocab) == set()
    planted = data.replace(b'"user_id":"u1"', b'"user_id":"setOut"')
    assert leakage_scan(planted, vocab) == {"setOut"}


def test_simulated_log_has_no_leaks(demo_index, small_log):
    data = encode_sessions(small_log)
    vocab = {w for w in demo_index.vocab if len(w) >= 3}
    assert leakage_scan(data, vocab) == set()


def test_simulated_groups_have_one_positive(small_log):
    groups = labeled_groups(small_log)
    assert groups
    for g in groups:
        assert g.targets.sum() == 1 and len(g.targets) >= 2


def test_simulated_prefix_steps(small_log):
    for s in small_log:
        lens = [lk.prefix_length for lk in s.lookups]
        assert lens == list(range(lens[0], lens[0] + len(lens)))


def test_lookup_arrays_are_read_only():
    lk = lookup(0, 1, [1, 2])
    with pytest.raises(ValueError):
        lk.features[0, 0] = 5.0


ids = st.lists(st.integers(0, 2**64 - 1), min_size=1, max_size=6, unique=True)
floats = st.one_of(st.floats(allow_nan=False, allow_infinity=False, width=64), st.just(float("nan")))


@st.composite
def sessions(draw):
    n_lookups = draw(st.integers(1, 4))
    start = draw(st.integers(0, 5))
    width = draw(st.integers(1, 4))
    lks = []
    for k in range(n_lookups):
        cands = draw(ids)
        feats = np.array(draw(st.lists(floats, min_size=len(cands) * width, max_size=len(cands) * width)))
        shared = np.array(draw(st.lists(floats, min_size=4, max_size=4)))
        lks.append(LookupRecord(k, start + k, shared, np.array(cands, dtype=np.uint64),
                                feats.reshape(len(cands), width)))
    outcome = draw(st.sampled_from(list(Outcome)))
    selected = None
    if outcome is Outcome.EXPLICIT_SELECT:
        selected = int(draw(st.sampled_from(lks[-1].candidate_ids.tolist())))
    elif outcome is Outcome.TYPED_SELECT:
        selected = int(draw(st.sampled_from(lks[0].candidate_ids.tolist())))
    navs = draw(st.integers(0, 3))
    trigger = draw(st.sampled_from(list(Trigger)))
    return make_session(lks, outcome, selected, navs, trigger=trigger)


@settings(max_examples=60, deadline=None)
@given(st.lists(sessions(), max_size=3))
def test_round_trip_property(ss):
    ss = [make_session(s.lookups, s.outcome, s.selected_candidate, sid=f"s{i}") for i, s in enumerate(ss)]
    assert decode_sessions(encode_sessions(ss)) == ss


@settings(max_examples=60, deadline=None)
@given(sessions())
def test_groups_one_positive_property(s):
    if not s.outcome.is_select:
        return
    for g in to_labeled_groups(s):
        assert int(g.targets.sum()) == 1
        assert len(g.targets) >= 2
