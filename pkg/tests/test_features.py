import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logrank.candidate_provider import Block, CaretContext, build_index, candidates_at, provide
from logrank.features import (
    CONTEXT_SCHEMA,
    DEFAULT_SCHEMA,
    EmptySchemaError,
    FeatureDef,
    FeatureKind,
    FeatureSchema,
    LookupState,
    SchemaMismatchError,
    UserHistory,
    ArityMismatchError,
    extract_candidate_features,
    extract_context_features,
    extract_lookup_features,
    permutation_importance,
    prune_schema,
)
from logrank.ranker import ObliviousTree, QueryGroup, TreeEnsemble

COL = {s: i for i, s in enumerate(DEFAULT_SCHEMA.slot_names)}
TEXT = "setOut(a)\nsetOut(b)\nif x:\n    se"


@pytest.fixture
def tiny():
    idx = build_index([("main.py", TEXT), ("lib/io.py", "setOpt set")], {"if"})
    ctx = CaretContext("main.py", TEXT.rindex("se"), "se", Block.CONDITIONAL_BODY)
    return idx, ctx


def fresh():
    return UserHistory(salt=b"k" * 16)


def test_schema_shape():
    assert DEFAULT_SCHEMA.arity == 25
    assert len(DEFAULT_SCHEMA.features) == 21
    assert CONTEXT_SCHEMA.slot_names == ["session_duration_s", "lookup_ordinal", "trigger=Manual", "trigger=Auto"]
    assert all(f.kind in FeatureKind for f in DEFAULT_SCHEMA.features)


def test_two_typed_chars(tiny):
    idx, ctx = tiny
    v = extract_candidate_features("setOut", ctx, idx, fresh(), LookupState(240, 2, False))
    assert v[COL["prefix_length"]] == 2
    assert v[COL["matched_chars"]] == 2
    assert v[COL["exact_match"]] == 0
    assert v[COL["case_sensitive_match"]] == 1
    assert v[COL["match_ratio"]] == pytest.approx(2 / 6)
    assert v[COL["same_file_count"]] == 2
    assert v[COL["is_same_file"]] == 1 and v[COL["is_corpus_only"]] == 0
    assert v[COL["enclosing_block=ConditionalBody"]] == 1


def test_exact_match(tiny):
    idx, _ = tiny
    ctx = CaretContext("main.py", TEXT.rindex("se"), "set")
    v = extract_candidate_features("set", ctx, idx, fresh(), LookupState(0, 0, False))
    assert v[COL["exact_match"]] == 1 and v[COL["match_ratio"]] == 1.0
    assert v[COL["is_corpus_only"]] == 1 and v[COL["is_same_module"]] == 0


def test_fresh_user_first_lookup(tiny):
    idx, ctx = tiny
    v = extract_candidate_features("setOut", ctx, idx, fresh(), LookupState(0, 0, False))
    assert v[COL["selected_before_in_user_history"]] == 0
    assert np.isnan(v[COL["baseline_rank_prev_lookup"]])


def test_history_features(tiny):
    idx, ctx = tiny
    h = fresh()
    sid = h.candidate_hash("setOut")
    h.record_selection(sid)
    h.record_selection(sid)
    h.record_navigation(sid)
    v = extract_candidate_features("setOut", ctx, idx, h, LookupState(0, 1, False, {sid: 3}))
    assert v[COL["selected_before_in_user_history"]] == 1
    assert v[COL["selections_of_this_candidate_in_buffer"]] == 2
    assert v[COL["navigated_to_definition_before"]] == 1
    assert v[COL["baseline_rank_prev_lookup"]] == 3


def test_history_capacity():
    h = fresh()
    for i in range(250):
        h.record_selection(i)
    assert len(h.selected) == 100 and list(h.selected)[0] == 150


def test_salted_hash_differs_per_user():
    a, b = UserHistory(salt=b"a" * 16), UserHistory(salt=b"b" * 16)
    assert a.candidate_hash("setOut") != b.candidate_hash("setOut")
    assert a.candidate_hash("setOut") == a.candidate_hash("setOut")
    assert 0 <= a.candidate_hash("x") < 2**64


def test_context_features():
    assert extract_context_features(LookupState(1500, 0, False))[0] == 1.5
    v = extract_context_features(LookupState(0, 2, True))
    assert v[1] == 2 and v[2] == 1 and v[3] == 0


def test_schema_projection(tiny):
    idx, ctx = tiny
    sub = FeatureSchema((FeatureDef("prefix_length", FeatureKind.NUMERIC),
                         FeatureDef("candidate_length", FeatureKind.NUMERIC)))
    v = extract_candidate_features("setOut", ctx, idx, fresh(), LookupState(0, 0, False), sub)
    assert v.tolist() == [2.0, 6.0]
    bad = FeatureSchema((FeatureDef("source_code", FeatureKind.NUMERIC),))
    with pytest.raises(SchemaMismatchError):
        extract_candidate_features("setOut", ctx, idx, fresh(), LookupState(0, 0, False), bad)


def test_schema_hash_and_json():
    again = FeatureSchema.from_json(DEFAULT_SCHEMA.to_json())
    assert again == DEFAULT_SCHEMA and again.hash == DEFAULT_SCHEMA.hash
    bumped = FeatureSchema(DEFAULT_SCHEMA.features, version=7)
    assert bumped.hash == DEFAULT_SCHEMA.hash
    reordered = FeatureSchema(DEFAULT_SCHEMA.features[::-1])
    assert reordered.hash != DEFAULT_SCHEMA.hash


def test_duplicate_names_rejected():
    with pytest.raises(ValueError):
        FeatureSchema((FeatureDef("a", FeatureKind.NUMERIC), FeatureDef("a", FeatureKind.BOOLEAN)))


def test_lookup_rows_invariants(demo_index):
    rng = np.random.default_rng(0)
    fids = sorted(demo_index.files)
    h = fresh()
    bools = [COL[f.name] for f in DEFAULT_SCHEMA.features if f.kind is FeatureKind.BOOLEAN]
    groups = [g for g in DEFAULT_SCHEMA.slot_groups() if len(g) > 1]
    for _ in range(100):
        fid = fids[int(rng.integers(len(fids)))]
        ft = demo_index.files[fid]
        k = int(rng.integers(len(ft.token_ids)))
        word = demo_index.vocab[int(ft.token_ids[k])]
        ctx = CaretContext(fid, int(ft.offsets[k]), word[: int(rng.integers(0, len(word) + 1))],
                           ft.block_at(int(ft.offsets[k])))
        ids = provide(demo_index, ctx)
        if len(ids) == 0:
            continue
        hashes = [h.candidate_hash(demo_index.vocab[i]) for i in ids]
        X = extract_lookup_features(demo_index, ctx, ids, hashes, h, LookupState(0, 0, False))
        X2 = extract_lookup_features(demo_index, ctx, ids, hashes, h, LookupState(0, 0, False))
        assert np.array_equal(X, X2, equal_nan=True)
        assert np.isin(X[:, bools], (0, 1)).all()
        for g in groups:
            assert (X[:, g].sum(axis=1) <= 1).all()
        m, p, c = X[:, COL["matched_chars"]], X[:, COL["prefix_length"]], X[:, COL["candidate_length"]]
        assert (m <= p).all() and (m <= c).all()
        ex = X[:, COL["exact_match"]] == 1
        assert (m[ex] == c[ex]).all()


# --- permutation importance -------------------------------------------------


def _one_split_model(feature=0, n_features=2):
    tree = ObliviousTree((feature,), (0.5,), (False,), (0.0, 1.0))
    return TreeEnsemble("", n_features, 0.0, (tree,))


def _separable(n=40, seed=0):
    rng = np.random.default_rng(seed)
    groups = []
    for _ in range(n):
        X = np.zeros((3, 2))
        X[:, 1] = 7.0
        pos = int(rng.integers(3))
        X[pos, 0] = 1.0
        t = np.zeros(3, dtype=int)
        t[pos] = 1
        groups.append(QueryGroup(X, t))
    return groups


def test_constant_column_importance_is_zero():
    assert permutation_importance(_one_split_model(), _separable(), 1, repeats=3, seed=0) == 0.0


def test_used_feature_is_important():
    imp = permutation_importance(_one_split_model(), _separable(), 0, repeats=3, seed=0)
    assert imp > 0
    again = permutation_importance(_one_split_model(), _separable(), 0, repeats=3, seed=0)
    assert imp == again


def test_importance_arity():
    with pytest.raises(ArityMismatchError):
        permutation_importance(_one_split_model(), _separable(), 5)


# --- pruning -----------------------------------------------------------------


SMALL = FeatureSchema((
    FeatureDef("a", FeatureKind.NUMERIC),
    FeatureDef("b", FeatureKind.BOOLEAN),
    FeatureDef("c", FeatureKind.ONE_HOT, ("x", "y")),
))


def test_prune_keeps_all():
    out = prune_schema(SMALL, [0.1, 0.2, 0.3, 0.0], 0.001)
    assert out.features == SMALL.features and out.version == SMALL.version + 1


def test_prune_dead_feature():
    out = prune_schema(SMALL, [0.1, 0.0, 0.3, 0.0], 0.001, used={0, 2})
    assert [f.name for f in out.features] == ["a", "c"]
    assert out.arity == SMALL.arity - 1


def test_prune_unused_feature_even_if_important():
    out = prune_schema(SMALL, [0.1, 0.2, 0.3, 0.0], 0.001, used={0, 2})
    assert [f.name for f in out.features] == ["a", "c"]


def test_prune_everything():
    with pytest.raises(EmptySchemaError):
        prune_schema(SMALL, [0.1, 0.2, 0.3, 0.0], 1e9, used=set())


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-0.1, 0.1), min_size=4, max_size=4), st.sets(st.integers(0, 3)),
       st.floats(0, 0.05))
def test_prune_properties(imps, used, eps):
    try:
        once = prune_schema(SMALL, imps, eps, used)
    except EmptySchemaError:
        return
    assert once.arity <= SMALL.arity
    # slots of the kept schema carry their original scores; pruning again drops nothing
    keep = [SMALL.slot_names.index(s) for s in once.slot_names]
    used2 = {i for i, s in enumerate(keep) if s in used}
    twice = prune_schema(once, [imps[s] for s in keep], eps, used2)
    assert twice.features == once.features
