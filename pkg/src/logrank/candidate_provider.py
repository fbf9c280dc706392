"""Lexical candidate provider and heuristic baseline ranking.

The index stands in for an IDE's static analyzer: candidates are the
distinct identifiers and keywords of a corpus that extend the typed prefix.
"""

from __future__ import annotations

import bisect
import enum
import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path, PurePosixPath
from typing import Iterable, Sequence

import numpy as np

DEFAULT_CANDIDATE_CAP = 64

_WORD = re.compile(rb"[A-Za-z0-9_]+")


class TokenKind(str, enum.Enum):
    IDENTIFIER = "Identifier"
    KEYWORD = "Keyword"


class Block(enum.IntEnum):
    TOP_LEVEL = 0
    FUNCTION_BODY = 1
    CONDITIONAL_BODY = 2
    LOOP_BODY = 3


# Block-opening keywords of indentation-structured languages. Keywords not
# listed here (class, with, try, ...) keep the enclosing block kind.
BLOCK_OPENERS = {
    "def": Block.FUNCTION_BODY,
    "if": Block.CONDITIONAL_BODY,
    "elif": Block.CONDITIONAL_BODY,
    "else": Block.CONDITIONAL_BODY,
    "for": Block.LOOP_BODY,
    "while": Block.LOOP_BODY,
}


class ProviderError(ValueError):
    pass


class DuplicateFileIdError(ProviderError):
    pass


class UnknownFileError(ProviderError):
    pass


class EmptyCorpusError(ProviderError):
    pass


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    file_id: str
    byte_offset: int


def load_keywords(path: str | Path | None = None) -> frozenset[str]:
    """Read one keyword per line; ``None`` loads the bundled Python list."""
    if path is None:
        text = resources.files("logrank").joinpath("data/keywords_python.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip() and not w.startswith("#"))


def tokenize(text: str, keywords: Iterable[str] = (), file_id: str = "") -> list[Token]:
    """Maximal-munch identifiers and keywords; everything else is skipped.

    Offsets are UTF-8 byte offsets. Runs starting with a digit are numeric
    literals and produce no token.
    """
    kw = keywords if isinstance(keywords, (set, frozenset)) else set(keywords)
    out = []
    for m in _WORD.finditer(text.encode("utf-8")):
        word = m.group()
        if word[:1].isdigit():
            continue
        s = word.decode("ascii")
        out.append(Token(s, TokenKind.KEYWORD if s in kw else TokenKind.IDENTIFIER, file_id, m.start()))
    return out


def _line_blocks(data: bytes) -> tuple[np.ndarray, np.ndarray]:
    """Per line: start byte offset and enclosing block kind."""
    starts, kinds = [], []
    stack: list[tuple[int, Block]] = []
    pos = 0
    for raw in data.split(b"\n"):
        line = raw.split(b"#", 1)[0].rstrip()
        body = line.lstrip()
        if body:
            indent = len(line) - len(body)
            while stack and indent <= stack[-1][0]:
                stack.pop()
        current = stack[-1][1] if stack else Block.TOP_LEVEL
        starts.append(pos)
        kinds.append(current)
        if body.endswith(b":"):
            head = _WORD.match(body)
            opener = BLOCK_OPENERS.get(head.group().decode("ascii")) if head else None
            stack.append((len(line) - len(body), opener if opener is not None else current))
        pos += len(raw) + 1
    return np.array(starts, dtype=np.int64), np.array(kinds, dtype=np.int8)


@dataclass
class FileTable:
    file_id: str
    directory: str
    token_ids: np.ndarray  # vocabulary id per token
    offsets: np.ndarray  # byte offset per token
    blocks: np.ndarray  # Block per token
    counts: np.ndarray  # occurrences per vocabulary id
    positions: dict[int, list[int]] = field(repr=False)  # vocab id -> token ordinals

    def token_at(self, byte_offset: int) -> int | None:
        """Ordinal of the token starting exactly at ``byte_offset``."""
        i = int(np.searchsorted(self.offsets, byte_offset))
        if i < len(self.offsets) and self.offsets[i] == byte_offset:
            return i
        return None

    def block_at(self, byte_offset: int) -> Block:
        i = int(np.searchsorted(self.offsets, byte_offset, side="right")) - 1
        return Block(int(self.blocks[i])) if i >= 0 else Block.TOP_LEVEL


@dataclass(frozen=True)
class CaretContext:
    file_id: str
    byte_offset: int
    prefix: str
    enclosing_block: Block = Block.TOP_LEVEL


class ScopeIndex:
    """Token tables over a corpus: global, per directory and per file.

    Immutable once :func:`build_index` returns.
    """

    def __init__(self, vocab, is_keyword, global_counts, files, dir_counts, keywords):
        self.vocab: list[str] = vocab
        self.vocab_id = {w: i for i, w in enumerate(vocab)}
        self.is_keyword: np.ndarray = is_keyword
        self.global_counts: np.ndarray = global_counts
        self.files: dict[str, FileTable] = files
        self.dir_counts: dict[str, np.ndarray] = dir_counts
        self.keywords: frozenset[str] = keywords
        self.lengths = np.array([len(w) for w in vocab], dtype=np.int64)
        lower = sorted((w.lower(), i) for i, w in enumerate(vocab))
        self._lower_keys = [k for k, _ in lower]
        self._lower_ids = np.array([i for _, i in lower], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.vocab)

    def count(self, text: str, file_id: str | None = None) -> int:
        i = self.vocab_id.get(text)
        if i is None:
            return 0
        if file_id is None:
            return int(self.global_counts[i])
        return int(self.files[file_id].counts[i])

    def file(self, file_id: str) -> FileTable:
        try:
            return self.files[file_id]
        except KeyError:
            raise UnknownFileError(f"file {file_id!r} is not indexed") from None

    def prefix_range(self, prefix: str) -> np.ndarray:
        lo = bisect.bisect_left(self.vocab, prefix)
        hi = bisect.bisect_left(self.vocab, prefix + "\U0010ffff")
        return np.arange(lo, hi, dtype=np.int64)

    def prefix_range_ci(self, prefix: str) -> np.ndarray:
        p = prefix.lower()
        lo = bisect.bisect_left(self._lower_keys, p)
        hi = bisect.bisect_left(self._lower_keys, p + "\U0010ffff")
        return np.sort(self._lower_ids[lo:hi])

    def last_use_before(self, file_id: str, vocab_id: int, ordinal: int) -> int | None:
        pos = self.files[file_id].positions.get(vocab_id)
        if not pos:
            return None
        i = bisect.bisect_left(pos, ordinal)
        return pos[i - 1] if i else None


def _directory(file_id: str) -> str:
    return str(PurePosixPath(file_id).parent)


def build_index(files: Sequence[tuple[str, str]], keywords: Iterable[str] = ()) -> ScopeIndex:
    keywords = frozenset(keywords)
    ids = [fid for fid, _ in files]
    if len(set(ids)) != len(ids):
        dup = sorted({f for f in ids if ids.count(f) > 1})
        raise DuplicateFileIdError(f"duplicate file ids: {dup}")

    tokenized = []
    words = set(keywords)
    for fid, text in files:
        toks = tokenize(text, keywords, fid)
        tokenized.append((fid, text, toks))
        words.update(t.text for t in toks)
    vocab = sorted(words)
    vid = {w: i for i, w in enumerate(vocab)}
    n = len(vocab)

    global_counts = np.zeros(n, dtype=np.int64)
    tables, dir_counts = {}, {}
    for fid, text, toks in tokenized:
        tid = np.array([vid[t.text] for t in toks], dtype=np.int64)
        offs = np.array([t.byte_offset for t in toks], dtype=np.int64)
        line_starts, line_kinds = _line_blocks(text.encode("utf-8"))
        line_of = np.searchsorted(line_starts, offs, side="right") - 1
        blocks = line_kinds[line_of] if len(toks) else np.zeros(0, dtype=np.int8)
        counts = np.bincount(tid, minlength=n).astype(np.int64)
        positions: dict[int, list[int]] = {}
        for k, v in enumerate(tid.tolist()):
            positions.setdefault(v, []).append(k)
        d = _directory(fid)
        tables[fid] = FileTable(fid, d, tid, offs, blocks, counts, positions)
        global_counts += counts
        dir_counts.setdefault(d, np.zeros(n, dtype=np.int64))
        dir_counts[d] += counts

    is_kw = np.array([w in keywords for w in vocab], dtype=bool)
    return ScopeIndex(vocab, is_kw, global_counts, tables, dir_counts, keywords)


def read_corpus(root: str | Path, globs: Sequence[str] = ("*.py",)) -> list[tuple[str, str]]:
    """Collect ``(file_id, text)`` pairs below ``root``; ids are relative posix paths."""
    root = Path(root)
    if not root.is_dir():
        raise EmptyCorpusError(f"corpus directory {root} does not exist")
    paths = set()
    for pattern in globs:
        paths.update(p for p in root.rglob(pattern) if p.is_file())
    return [(p.relative_to(root).as_posix(), p.read_text("utf-8")) for p in sorted(paths)]


# ---------------------------------------------------------------------------
# candidates and the heuristic


@dataclass(frozen=True)
class CandidateStats:
    """Per-candidate statistics relative to a caret; the caret token itself
    is excluded from every count."""

    ids: np.ndarray
    same_file: np.ndarray
    same_dir: np.ndarray
    global_count: np.ndarray
    is_keyword: np.ndarray
    recency: np.ndarray  # 1 / (1 + token distance to previous same-file use), 0 if none


def _caret_token(index: ScopeIndex, ctx: CaretContext) -> tuple[FileTable, int | None, int | None]:
    ft = index.file(ctx.file_id)
    ordinal = ft.token_at(ctx.byte_offset)
    own = int(ft.token_ids[ordinal]) if ordinal is not None else None
    return ft, ordinal, own


def candidate_ids(index: ScopeIndex, ctx: CaretContext) -> np.ndarray:
    """Vocabulary ids of the candidates at ``ctx``, ascending."""
    ft, _, own = _caret_token(index, ctx)

    def alive(ids):
        counts = index.global_counts[ids].copy()
        if own is not None:
            counts[ids == own] -= 1
        return ids[(counts > 0) | index.is_keyword[ids]]

    ids = alive(index.prefix_range(ctx.prefix))
    if len(ids) == 0 and ctx.prefix:
        ids = alive(index.prefix_range_ci(ctx.prefix))
    return ids


def candidates_at(index: ScopeIndex, ctx: CaretContext) -> list[str]:
    return [index.vocab[i] for i in candidate_ids(index, ctx)]


def candidate_stats(index: ScopeIndex, ctx: CaretContext, ids: np.ndarray) -> CandidateStats:
    ft, ordinal, own = _caret_token(index, ctx)
    ids = np.asarray(ids, dtype=np.int64)
    same_file = ft.counts[ids].copy()
    same_dir = index.dir_counts[ft.directory][ids].copy()
    glob = index.global_counts[ids].copy()
    if own is not None:
        mine = ids == own
        same_file[mine] -= 1
        same_dir[mine] -= 1
        glob[mine] -= 1
    here = ordinal if ordinal is not None else int(np.searchsorted(ft.offsets, ctx.byte_offset))
    recency = np.zeros(len(ids))
    for k in np.flatnonzero(same_file > 0):
        last = index.last_use_before(ctx.file_id, int(ids[k]), here)
        if last is not None:
            recency[k] = 1.0 / (1.0 + (here - last))
    return CandidateStats(ids, same_file, same_dir, glob, index.is_keyword[ids], recency)


def heuristic_scores(index: ScopeIndex, ctx: CaretContext, stats: CandidateStats) -> np.ndarray:
    texts = [index.vocab[i] for i in stats.ids]
    p = len(ctx.prefix)
    exact = np.array([t.startswith(ctx.prefix) for t in texts], dtype=float)
    ratio = p / index.lengths[stats.ids]
    bonus = np.where(stats.is_keyword, 0.5, np.where(stats.same_file > 0, 1.0, 0.0))
    return 3.0 * exact + 2.0 * ratio + np.log1p(stats.same_file) + 0.5 * stats.recency + bonus


def heuristic_order(index: ScopeIndex, ctx: CaretContext, ids: np.ndarray) -> np.ndarray:
    """Ids sorted by descending heuristic score, then shorter, then lexicographic."""
    ids = np.asarray(ids, dtype=np.int64)
    if len(ids) == 0:
        return ids
    scores = heuristic_scores(index, ctx, candidate_stats(index, ctx, ids))
    # vocab ids are in lexicographic order, so the id is the final tie-break
    order = np.lexsort((ids, index.lengths[ids], -scores))
    return ids[order]


def heuristic_rank(cands: Sequence[str], ctx: CaretContext, index: ScopeIndex) -> list[str]:
    ids = np.array([index.vocab_id[c] for c in cands], dtype=np.int64)
    return [index.vocab[i] for i in heuristic_order(index, ctx, ids)]


def provide(index: ScopeIndex, ctx: CaretContext, cap: int = DEFAULT_CANDIDATE_CAP) -> np.ndarray:
    """Heuristically ranked candidate ids at ``ctx``, truncated to ``cap``."""
    return heuristic_order(index, ctx, candidate_ids(index, ctx))[:cap]
