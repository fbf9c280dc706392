import math
from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_groups
from logrank.features import SchemaMismatchError
from logrank.log_schema import LookupRecord
from logrank.ranker import (
    ArityMismatchError,
    DegenerateGroupsError,
    EmptyDatasetError,
    InvalidParamsError,
    ObliviousTree,
    QueryGroup,
    SizeMismatchError,
    TrainParams,
    TreeEnsemble,
    feature_borders,
    fit,
    group_grad_hess,
    group_loss,
    rank_lookup,
    softmax_probs,
    training_loss,
)


def naive_softmax(scores):
    m = max(scores)
    e = [math.exp(s - m) for s in scores]
    z = sum(e)
    return [v / z for v in e]


def group(n, pos=0):
    t = np.zeros(n, dtype=int)
    t[pos] = 1
    return QueryGroup(np.zeros((n, 1)), t)


# --- loss kernels ----------------------------------------------------------


def test_softmax_examples():
    assert softmax_probs([0, 0]).tolist() == [0.5, 0.5]
    np.testing.assert_allclose(softmax_probs([2, 0, 0]),
                               [0.7869860421615985, 0.10650697891920075, 0.10650697891920075], rtol=1e-14)
    p = softmax_probs([1000, 999])
    assert np.isfinite(p).all()
    np.testing.assert_allclose(p, [0.7310585786300049, 1 - 0.7310585786300049], rtol=1e-12)


def test_loss_examples():
    assert group_loss(group(2), [0, 0]) == pytest.approx(math.log(2), abs=1e-12)
    assert group_loss(group(5), [0] * 5) == pytest.approx(1.6094379124341003, abs=1e-12)
    # -ln(e^2 / (e^2 + 2)) evaluated independently
    assert group_loss(group(3), [2, 0, 0]) == pytest.approx(0.2395447662218845, abs=1e-12)


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        group_loss(group(3), [0, 0])
    with pytest.raises(SizeMismatchError):
        group_grad_hess(group(3), [0, 0])


def test_grad_examples():
    g, h = group_grad_hess(group(2, 0), [0, 0])
    assert g.tolist() == [-0.5, 0.5]
    assert h.tolist() == [0.25, 0.25]
    g, h = group_grad_hess(group(2, 0), [50, 0])
    assert np.abs(g).max() < 1e-12
    assert g[0] <= 0 <= g[1]
    assert (h >= 1e-16).all()


def test_finite_differences():
    rng = np.random.default_rng(11)
    for _ in range(30):
        n = int(rng.integers(2, 21))
        grp = group(n, int(rng.integers(n)))
        s = rng.uniform(-3, 3, n)
        g, _ = group_grad_hess(grp, s)
        for i in range(n):
            e = np.zeros(n)
            e[i] = 1e-5
            fd = (group_loss(grp, s + e) - group_loss(grp, s - e)) / 2e-5
            assert abs(fd - g[i]) <= 1e-4 * max(abs(g[i]), 1e-3)


scores = st.lists(st.floats(-30, 30), min_size=2, max_size=20)


@settings(max_examples=200, deadline=None)
@given(scores, st.floats(-100, 100), st.data())
def test_loss_properties(s, c, data):
    pos = data.draw(st.integers(0, len(s) - 1))
    grp = group(len(s), pos)
    p = softmax_probs(s)
    assert abs(p.sum() - 1) < 1e-12
    np.testing.assert_allclose(p, naive_softmax(s), rtol=1e-9, atol=1e-300)
    loss = group_loss(grp, s)
    assert loss >= 0
    assert abs(group_loss(grp, np.asarray(s) + c) - loss) < 1e-9
    g, h = group_grad_hess(grp, s)
    assert abs(g.sum()) < 1e-12
    assert (h >= 1e-16).all()


# --- params and data gates -------------------------------------------------------


@pytest.mark.parametrize("kw", [dict(iterations=0), dict(depth=0), dict(depth=17), dict(learning_rate=0),
                                dict(learning_rate=1.5), dict(max_bins=1), dict(max_bins=256),
                                dict(l2_leaf_reg=-1), dict(row_subsample=0)])
def test_invalid_params(kw):
    with pytest.raises(InvalidParamsError):
        TrainParams(**kw)


def test_data_gates():
    with pytest.raises(EmptyDatasetError):
        fit([])
    with pytest.raises(ArityMismatchError):
        fit([QueryGroup(np.zeros((2, 1)), [1, 0]), QueryGroup(np.zeros((2, 2)), [1, 0])])
    single = SimpleNamespace(features=np.zeros((1, 2)), targets=np.array([1]))
    with pytest.raises(DegenerateGroupsError):
        fit([single, single])


# --- fitting ---------------------------------------------------------------------


def separable(n=50):
    out = []
    rng = np.random.default_rng(5)
    for _ in range(n):
        k = int(rng.integers(2, 6))
        X = np.zeros((k, 1))
        pos = int(rng.integers(k))
        X[pos, 0] = 1.0
        t = np.zeros(k, dtype=int)
        t[pos] = 1
        out.append(QueryGroup(X, t))
    return out


def test_fit_separable():
    groups = separable()
    losses = []
    model = fit(groups, TrainParams(), callback=lambda it, loss: losses.append(loss))
    assert losses[0] == pytest.approx(training_loss(TreeEnsemble("", 1), groups))
    assert training_loss(model, groups) < 0.05 * losses[0]
    assert losses[-1] == pytest.approx(training_loss(model, groups), rel=1e-9)


def test_loss_non_increasing():
    groups = random_groups(150, n_features=4, seed=2)
    losses = []
    fit(groups, TrainParams(iterations=40, depth=4), callback=lambda it, loss: losses.append(loss))
    assert len(losses) == 41
    assert all(b <= a + 1e-9 for a, b in zip(losses, losses[1:]))


def test_worker_count_independent():
    groups = random_groups(200, n_features=6, seed=4)
    a = fit(groups, TrainParams(iterations=15, depth=4), workers=1)
    b = fit(groups, TrainParams(iterations=15, depth=4), workers=8)
    assert a.to_json() == b.to_json()


def test_subsample_is_seeded():
    groups = random_groups(100, n_features=3, seed=6)
    p = TrainParams(iterations=10, depth=3, row_subsample=0.5, seed=9)
    assert fit(groups, p).to_json() == fit(groups, p).to_json()
    assert fit(groups, p).to_json() != fit(groups, TrainParams(iterations=10, depth=3, row_subsample=0.5,
                                                               seed=10)).to_json()


def test_missing_values_route_by_default_direction():
    # positives carry a missing value in feature 0, negatives a number
    rng = np.random.default_rng(0)
    groups = []
    for _ in range(60):
        X = rng.normal(size=(4, 1))
        X[0, 0] = np.nan
        groups.append(QueryGroup(X, [1, 0, 0, 0]))
    model = fit(groups, TrainParams(iterations=30, depth=2))
    assert training_loss(model, groups) < 0.2 * math.log(4)
    for g in groups:
        assert int(np.argmax(model.predict_matrix(g.features))) == 0


def test_borders_are_float32_midpoints():
    col = np.array([0.1, 0.2, 0.2, 0.3, np.nan])
    b = feature_borders(col, 255)
    assert (b.astype(np.float32).astype(np.float64) == b).all()
    assert b[-1] == float(np.float32(0.3))
    assert len(b) == 3
    many = feature_borders(np.arange(10_000, dtype=float), 16)
    assert len(many) <= 15


def test_constant_features_give_finite_model():
    groups = [QueryGroup(np.ones((3, 2)), [0, 1, 0]) for _ in range(5)]
    model = fit(groups, TrainParams(iterations=3, depth=2))
    assert np.isfinite(model.predict_matrix(np.ones((2, 2)))).all()


# --- prediction -----------------------------------------------------------------


def test_empty_ensemble():
    assert TreeEnsemble("", 3).predict([1.0, 2.0, 3.0]) == 0.0


def test_depth_one_trace():
    lr = 0.1
    tree = ObliviousTree((0,), (0.5,), (False,), (-1.0 * lr, 1.0 * lr))
    m = TreeEnsemble("", 2, 0.0, (tree,))
    assert m.predict([0.7, 0.0]) == pytest.approx(0.1)
    assert m.predict([0.3, 0.0]) == pytest.approx(-0.1)
    assert m.predict([np.nan, 0.0]) == pytest.approx(-0.1)
    right = TreeEnsemble("", 2, 0.0, (ObliviousTree((0,), (0.5,), (True,), (-0.1, 0.1)),))
    assert right.predict([np.nan, 0.0]) == pytest.approx(0.1)


def test_predict_arity():
    with pytest.raises(SchemaMismatchError):
        TreeEnsemble("", 3).predict([1.0])


def test_tree_shape_checks():
    with pytest.raises(Exception):
        ObliviousTree((0, 1), (0.5, 0.5), (False, False), (0.0, 1.0))
    with pytest.raises(Exception):
        TreeEnsemble("", 1, 0.0, (ObliviousTree((3,), (0.5,), (False,), (0.0, 1.0)),))


def test_predict_matrix_matches_scalar():
    groups = random_groups(80, n_features=4, seed=8)
    model = fit(groups, TrainParams(iterations=20, depth=3))
    X = np.vstack([g.features for g in groups])
    X[::7, 1] = np.nan
    fast = model.predict_matrix(X)
    slow = np.array([model.predict(x) for x in X])
    assert np.array_equal(fast, slow)


def test_json_round_trip():
    model = fit(random_groups(40, seed=1), TrainParams(iterations=5, depth=3), schema_hash="00ff00ff00ff00ff")
    back = TreeEnsemble.from_json(model.to_json())
    assert back == model and back.to_json() == model.to_json()


def _lookup(features):
    n = len(features)
    return LookupRecord(0, 1, np.zeros(4), np.arange(1, n + 1, dtype=np.uint64), np.asarray(features))


def test_rank_ties_keep_baseline():
    m = TreeEnsemble("", 1)
    assert rank_lookup(m, _lookup([[0.0], [1.0], [2.0]])).tolist() == [0, 1, 2]


def test_rank_by_score():
    m = TreeEnsemble("", 1, 0.0, (ObliviousTree((0,), (0.5,), (False,), (0.1, 0.9)),))
    assert rank_lookup(m, _lookup([[0.0], [1.0]])).tolist() == [1, 0]


def test_rank_shift_invariant():
    model = fit(random_groups(60, seed=3), TrainParams(iterations=10, depth=3))
    shifted = TreeEnsemble(model.schema_hash, model.n_features, model.base_score, tuple(
        ObliviousTree(t.features, t.thresholds, t.missing_right, tuple(v + 0.25 for v in t.leaf_values))
        for t in model.trees), model.params)
    rng = np.random.default_rng(0)
    for _ in range(20):
        lk = _lookup(rng.normal(size=(int(rng.integers(2, 12)), 3)))
        assert rank_lookup(model, lk).tolist() == rank_lookup(shifted, lk).tolist()
