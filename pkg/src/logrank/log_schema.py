"""Anonymized completion-session logs: types, validation, labeling and the
line-delimited file format.

A log file is UTF-8 text. Line 1 is a header object
``{"schema_version": 1, "feature_schema_hash": "<hex>"}``; every following
line is one session. The schema is closed: unknown fields are rejected.
Candidate tokens only ever appear as salted 64-bit hashes.
"""

from __future__ import annotations

import datetime as dt
import enum
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

SCHEMA_VERSION = 1


class EventKind(str, enum.Enum):
    STARTED = "Started"
    CHAR_TYPED = "CharTyped"
    NAV_UP = "NavUp"
    NAV_DOWN = "NavDown"
    FINISHED = "Finished"


class Outcome(str, enum.Enum):
    EXPLICIT_SELECT = "ExplicitSelect"
    TYPED_SELECT = "TypedSelect"
    EXPLICIT_CANCEL = "ExplicitCancel"
    TYPED_CANCEL = "TypedCancel"

    @property
    def is_select(self) -> bool:
        return self in (Outcome.EXPLICIT_SELECT, Outcome.TYPED_SELECT)


class Trigger(str, enum.Enum):
    MANUAL = "Manual"
    AUTO = "Auto"


# ---------------------------------------------------------------------------
# errors


class LogSchemaError(ValueError):
    """Base class for every log validation or decoding failure."""


class SessionValidationError(LogSchemaError):
    pass


class MissingStartedError(SessionValidationError):
    pass


class MissingFinishedError(SessionValidationError):
    pass


class NonMonotoneTimeError(SessionValidationError):
    pass


class LookupGapError(SessionValidationError):
    pass


class SelectWithoutCandidateError(SessionValidationError):
    pass


class NotASelectOutcomeError(LogSchemaError):
    pass


class SchemaVersionMismatchError(LogSchemaError):
    pass


class MalformedRecordError(LogSchemaError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


# ---------------------------------------------------------------------------
# types


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class CandidateRecord:
    candidate_id: int
    baseline_rank: int
    features: np.ndarray


@dataclass(frozen=True, eq=False)
class LookupRecord:
    """One list of suggestions shown at a given prefix state.

    Candidates are stored column-wise: ``candidate_ids[i]`` and
    ``features[i]`` describe the candidate at baseline rank ``i``.
    """

    ordinal: int
    prefix_length: int
    shared_features: np.ndarray
    candidate_ids: np.ndarray
    features: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "shared_features", _frozen_array(self.shared_features, np.float64))
        object.__setattr__(self, "candidate_ids", _frozen_array(self.candidate_ids, np.uint64))
        feats = _frozen_array(self.features, np.float64)
        if feats.ndim != 2:
            feats = _frozen_array(feats.reshape(len(self.candidate_ids), -1), np.float64)
        object.__setattr__(self, "features", feats)

    def __len__(self) -> int:
        return len(self.candidate_ids)

    @property
    def candidates(self) -> list[CandidateRecord]:
        return [
            CandidateRecord(int(cid), rank, self.features[rank])
            for rank, cid in enumerate(self.candidate_ids)
        ]

    def position_of(self, candidate_id: int) -> int | None:
        hits = np.flatnonzero(self.candidate_ids == np.uint64(candidate_id))
        return int(hits[0]) if len(hits) else None

    def __eq__(self, other):
        if not isinstance(other, LookupRecord):
            return NotImplemented
        return (
            self.ordinal == other.ordinal
            and self.prefix_length == other.prefix_length
            and np.array_equal(self.shared_features, other.shared_features, equal_nan=True)
            and np.array_equal(self.candidate_ids, other.candidate_ids)
            and self.features.shape == other.features.shape
            and np.array_equal(self.features, other.features, equal_nan=True)
        )

    __hash__ = None


@dataclass(frozen=True)
class SessionEvent:
    kind: EventKind
    offset_ms: int
    lookup: LookupRecord | None = None
    outcome: Outcome | None = None
    selected_candidate: int | None = None


@dataclass(frozen=True)
class SessionHeader:
    user_id: str
    session_id: str
    session_date: dt.date
    trigger: Trigger


@dataclass(frozen=True)
class CompletionSession:
    user_id: str
    session_id: str
    session_date: dt.date
    trigger: Trigger
    events: tuple[SessionEvent, ...]

    @property
    def lookups(self) -> list[LookupRecord]:
        return [e.lookup for e in self.events if e.lookup is not None]

    @property
    def finish(self) -> SessionEvent:
        return self.events[-1]

    @property
    def outcome(self) -> Outcome:
        return self.events[-1].outcome

    @property
    def selected_candidate(self) -> int | None:
        return self.events[-1].selected_candidate

    @property
    def typing_actions(self) -> int:
        return sum(1 for e in self.events if e.kind is EventKind.CHAR_TYPED)

    @property
    def final_prefix_length(self) -> int:
        return self.lookups[-1].prefix_length


@dataclass(frozen=True, eq=False)
class LabeledGroup:
    """A look-up turned into a training query: feature rows plus 0/1 targets."""

    group_id: tuple[str, int]
    features: np.ndarray
    targets: np.ndarray = field(repr=False)

    @property
    def rows(self) -> list[tuple[np.ndarray, int]]:
        return list(zip(self.features, (int(t) for t in self.targets)))


# ---------------------------------------------------------------------------
# validation and labeling


def validate_session(events: Sequence[SessionEvent], header: SessionHeader) -> CompletionSession:
    """Check every structural invariant and return an immutable session."""
    if not events:
        raise MissingStartedError("session has no events")
    if events[0].kind is not EventKind.STARTED:
        raise MissingStartedError(f"first event is {events[0].kind.value}, expected Started")

    for i, ev in enumerate(events):
        carries = ev.kind in (EventKind.STARTED, EventKind.CHAR_TYPED)
        if carries and ev.lookup is None:
            raise LookupGapError(f"event {i} ({ev.kind.value}) has no look-up attached")
        if not carries and ev.lookup is not None:
            raise SessionValidationError(f"event {i} ({ev.kind.value}) must not carry a look-up")
        if ev.kind is EventKind.STARTED and i != 0:
            raise SessionValidationError("more than one Started event")
        if ev.kind is EventKind.FINISHED and i != len(events) - 1:
            raise SessionValidationError("Finished must be the last event")
        if ev.kind is not EventKind.FINISHED and (ev.outcome is not None or ev.selected_candidate is not None):
            raise SessionValidationError(f"event {i} carries an outcome but is not Finished")

    if events[-1].kind is not EventKind.FINISHED:
        raise MissingFinishedError("last event is not Finished")

    if events[0].offset_ms != 0:
        raise NonMonotoneTimeError("Started must have offset_ms = 0")
    prev = 0
    for ev in events:
        if ev.offset_ms < prev:
            raise NonMonotoneTimeError(f"offset {ev.offset_ms} ms after {prev} ms")
        prev = ev.offset_ms

    lookups = [ev.lookup for ev in events if ev.lookup is not None]
    width = None
    for k, lk in enumerate(lookups):
        if lk.ordinal != k:
            raise LookupGapError(f"look-up ordinal {lk.ordinal} at position {k}")
        if k and lk.prefix_length != lookups[k - 1].prefix_length + 1:
            raise LookupGapError(
                f"prefix length {lk.prefix_length} after {lookups[k - 1].prefix_length}"
            )
        if lk.prefix_length < 0:
            raise SessionValidationError("negative prefix length")
        if len(lk) == 0:
            raise SessionValidationError(f"look-up {k} has no candidates")
        if len(np.unique(lk.candidate_ids)) != len(lk):
            raise SessionValidationError(f"look-up {k} has duplicate candidate ids")
        if lk.features.shape[0] != len(lk):
            raise SessionValidationError(f"look-up {k} feature rows do not match candidates")
        if width is None:
            width = lk.features.shape[1]
        elif lk.features.shape[1] != width:
            raise SessionValidationError(f"look-up {k} feature width differs")

    fin = events[-1]
    if fin.outcome is None:
        raise SessionValidationError("Finished event has no outcome")
    if fin.outcome.is_select:
        if fin.selected_candidate is None:
            raise SelectWithoutCandidateError(f"{fin.outcome.value} without a selected candidate")
        sel = fin.selected_candidate
        if fin.outcome is Outcome.EXPLICIT_SELECT:
            found = lookups[-1].position_of(sel) is not None
        else:
            found = any(lk.position_of(sel) is not None for lk in lookups)
        if not found:
            raise SelectWithoutCandidateError("selected candidate does not occur in the look-ups")
    elif fin.selected_candidate is not None:
        raise SessionValidationError(f"{fin.outcome.value} must not carry a selected candidate")

    return CompletionSession(
        user_id=header.user_id,
        session_id=header.session_id,
        session_date=header.session_date,
        trigger=header.trigger,
        events=tuple(events),
    )


def to_labeled_groups(session: CompletionSession) -> list[LabeledGroup]:
    """Label the selected candidate as correct in every look-up that lists it.

    Look-ups that lack the selected candidate, or hold a single candidate,
    carry no ranking signal and are skipped.
    """
    outcome = session.outcome
    if outcome is None or not outcome.is_select:
        raise NotASelectOutcomeError(f"session {session.session_id} ended with {outcome}")
    sel = session.selected_candidate
    groups = []
    for lk in session.lookups:
        pos = lk.position_of(sel)
        if pos is None or len(lk) < 2:
            continue
        targets = np.zeros(len(lk), dtype=np.int8)
        targets[pos] = 1
        groups.append(LabeledGroup((session.session_id, lk.ordinal), lk.features, targets))
    return groups


def labeled_groups(sessions: Iterable[CompletionSession]) -> list[LabeledGroup]:
    """All training groups from the select-outcome sessions of a log."""
    out = []
    for s in sessions:
        if s.outcome.is_select:
            out.extend(to_labeled_groups(s))
    return out


# ---------------------------------------------------------------------------
# encoding

SESSION_FIELDS = ("user_id", "session_id", "session_date", "trigger", "events")
EVENT_FIELDS = ("kind", "offset_ms", "lookup", "outcome", "selected_candidate")
LOOKUP_FIELDS = ("ordinal", "prefix_length", "shared_features", "candidates")
CANDIDATE_FIELDS = ("candidate_id", "baseline_rank", "features")
HEADER_FIELDS = ("schema_version", "feature_schema_hash")

#: Literals that legitimately appear in an encoded log.
FIELD_WHITELIST = frozenset(
    SESSION_FIELDS + EVENT_FIELDS + LOOKUP_FIELDS + CANDIDATE_FIELDS + HEADER_FIELDS
    + tuple(e.value for e in EventKind)
    + tuple(o.value for o in Outcome)
    + tuple(t.value for t in Trigger)
)


@dataclass(frozen=True)
class LogHeader:
    schema_version: int = SCHEMA_VERSION
    feature_schema_hash: str = ""


def _vector_to_json(arr: np.ndarray) -> list:
    out = arr.tolist()
    if arr.ndim == 1:
        for i in np.flatnonzero(np.isnan(arr)):
            out[i] = None
    else:
        for r, c in zip(*np.nonzero(np.isnan(arr))):
            out[r][c] = None
    return out


def _lookup_to_json(lk: LookupRecord) -> dict:
    rows = _vector_to_json(lk.features)
    return {
        "ordinal": lk.ordinal,
        "prefix_length": lk.prefix_length,
        "shared_features": _vector_to_json(lk.shared_features),
        "candidates": [
            {"candidate_id": int(cid), "baseline_rank": rank, "features": rows[rank]}
            for rank, cid in enumerate(lk.candidate_ids.tolist())
        ],
    }


def session_to_json(s: CompletionSession) -> dict:
    return {
        "user_id": s.user_id,
        "session_id": s.session_id,
        "session_date": s.session_date.isoformat(),
        "trigger": s.trigger.value,
        "events": [
            {
                "kind": e.kind.value,
                "offset_ms": e.offset_ms,
                "lookup": None if e.lookup is None else _lookup_to_json(e.lookup),
                "outcome": None if e.outcome is None else e.outcome.value,
                "selected_candidate": e.selected_candidate,
            }
            for e in s.events
        ],
    }


def encode_sessions(sessions: Iterable[CompletionSession], feature_schema_hash: str = "") -> bytes:
    lines = [json.dumps(
        {"schema_version": SCHEMA_VERSION, "feature_schema_hash": feature_schema_hash},
        separators=(",", ":"),
    )]
    seen = set()
    for s in sessions:
        if s.session_id in seen:
            raise SessionValidationError(f"duplicate session id {s.session_id}")
        seen.add(s.session_id)
        lines.append(json.dumps(session_to_json(s), separators=(",", ":"), allow_nan=False))
    return ("\n".join(lines) + "\n").encode("utf-8")


def _expect_keys(obj, keys, what):
    if not isinstance(obj, dict):
        raise ValueError(f"{what} is not an object")
    got = set(obj)
    if got != set(keys):
        extra = sorted(got - set(keys))
        missing = sorted(set(keys) - got)
        raise ValueError(f"{what} fields mismatch (unknown={extra}, missing={missing})")


def _expect_int(value, what) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{what} must be an integer")
    return value


def _float_vector(values, what) -> list:
    if not isinstance(values, list):
        raise ValueError(f"{what} must be a list")
    for v in values:
        if v is not None and (isinstance(v, bool) or not isinstance(v, (int, float))):
            raise ValueError(f"{what} holds a non-numeric value")
    return values


def _lookup_from_json(obj) -> LookupRecord:
    _expect_keys(obj, LOOKUP_FIELDS, "lookup")
    cands = obj["candidates"]
    if not isinstance(cands, list):
        raise ValueError("candidates must be a list")
    ids, rows = [], []
    for rank, c in enumerate(cands):
        _expect_keys(c, CANDIDATE_FIELDS, "candidate")
        cid = _expect_int(c["candidate_id"], "candidate_id")
        if not 0 <= cid < 2**64:
            raise ValueError("candidate_id out of 64-bit range")
        if _expect_int(c["baseline_rank"], "baseline_rank") != rank:
            raise ValueError("baseline_rank differs from list position")
        ids.append(cid)
        rows.append(_float_vector(c["features"], "features"))
    if len({len(r) for r in rows}) > 1:
        raise ValueError("ragged candidate feature rows")
    feats = np.array(rows, dtype=np.float64).reshape(len(rows), len(rows[0]) if rows else 0)
    return LookupRecord(
        ordinal=_expect_int(obj["ordinal"], "ordinal"),
        prefix_length=_expect_int(obj["prefix_length"], "prefix_length"),
        shared_features=np.array(_float_vector(obj["shared_features"], "shared_features"), dtype=np.float64),
        candidate_ids=np.array(ids, dtype=np.uint64),
        features=feats,
    )


def session_from_json(obj) -> CompletionSession:
    _expect_keys(obj, SESSION_FIELDS, "session")
    for key in ("user_id", "session_id", "session_date", "trigger"):
        if not isinstance(obj[key], str):
            raise ValueError(f"{key} must be a string")
    header = SessionHeader(
        user_id=obj["user_id"],
        session_id=obj["session_id"],
        session_date=dt.date.fromisoformat(obj["session_date"]),
        trigger=Trigger(obj["trigger"]),
    )
    if not isinstance(obj["events"], list):
        raise ValueError("events must be a list")
    events = []
    for e in obj["events"]:
        _expect_keys(e, EVENT_FIELDS, "event")
        sel = e["selected_candidate"]
        if sel is not None:
            _expect_int(sel, "selected_candidate")
        events.append(SessionEvent(
            kind=EventKind(e["kind"]),
            offset_ms=_expect_int(e["offset_ms"], "offset_ms"),
            lookup=None if e["lookup"] is None else _lookup_from_json(e["lookup"]),
            outcome=None if e["outcome"] is None else Outcome(e["outcome"]),
            selected_candidate=sel,
        ))
    return validate_session(events, header)


def decode_log(data: bytes) -> tuple[LogHeader | None, list[CompletionSession]]:
    """Parse a whole log, returning its header and validated sessions."""
    if not data.strip():
        return None, []
    lines = data.decode("utf-8").splitlines()
    try:
        head = json.loads(lines[0])
        _expect_keys(head, HEADER_FIELDS, "header")
    except (ValueError, json.JSONDecodeError) as exc:
        raise MalformedRecordError(1, f"bad header: {exc}") from None
    if head["schema_version"] != SCHEMA_VERSION:
        raise SchemaVersionMismatchError(
            f"log schema version {head['schema_version']}, expected {SCHEMA_VERSION}"
        )
    header = LogHeader(head["schema_version"], head["feature_schema_hash"])
    sessions, seen = [], set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            s = session_from_json(json.loads(line))
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedRecordError(lineno, str(exc)) from None
        if s.session_id in seen:
            raise MalformedRecordError(lineno, f"duplicate session id {s.session_id}")
        seen.add(s.session_id)
        sessions.append(s)
    return header, sessions


def decode_sessions(data: bytes) -> list[CompletionSession]:
    return decode_log(data)[1]


# ---------------------------------------------------------------------------
# leakage scan

_IDENT_RUN = re.compile(r"[A-Za-z0-9_]+")
_JSON_LITERAL = re.compile(r"\b(?:null|true|false)\b")
_QUOTED_WHITELIST = re.compile(
    '"(?:' + "|".join(sorted(map(re.escape, FIELD_WHITELIST), key=len, reverse=True)) + ')"'
)


def leakage_scan(data: bytes, vocabulary: Iterable[str]) -> set[str]:
    """Return the vocabulary strings that occur in ``data``.

    Whitelisted field names, enum values, JSON literals and the header's
    schema hash are masked out first, so a vocabulary word that merely
    equals a field name is not reported.
    """
    text = data.decode("utf-8", errors="replace")
    first, _, rest = text.partition("\n")
    try:
        head = json.loads(first)
    except json.JSONDecodeError:
        head = None
    if isinstance(head, dict) and set(head) == set(HEADER_FIELDS):
        digest = head.get("feature_schema_hash")
        if isinstance(digest, str) and re.fullmatch(r"[0-9a-f]*", digest):
            first = first.replace(f'"{digest}"', '""')
        text = first + "\n" + rest
    masked = _JSON_LITERAL.sub(" ", _QUOTED_WHITELIST.sub('""', text))

    runs = {r for r in _IDENT_RUN.findall(masked) if not r.isdigit()}
    found = set()
    for word in set(vocabulary):
        if not word:
            continue
        if _IDENT_RUN.fullmatch(word):
            if any(word in r for r in runs):
                found.add(word)
        elif word in masked:
            found.add(word)
    return found
