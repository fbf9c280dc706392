import struct

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import random_groups
from logrank.features import DEFAULT_SCHEMA, SchemaMismatchError
from logrank.model_artifact import (
    ArtifactError,
    BadMagicError,
    BudgetExceededError,
    CorruptModelError,
    SchemaHashMismatchError,
    TruncatedError,
    VersionUnsupportedError,
    check_budget,
    export_flat,
    load_flat,
)
from logrank.ranker import ObliviousTree, TrainParams, TreeEnsemble, fit

HASH = "8eb8a2e775bc0a76"


def expected_size(trees, depth):
    # 4 magic + 2 version + 8 hash + 2 n_features + 4 n_trees + 1 depth + 4 base
    return 25 + trees * depth * (2 + 4 + 1) + trees * (2 ** depth) * 4


@pytest.fixture(scope="module")
def model():
    return fit(random_groups(120, n_features=5, seed=12), TrainParams(iterations=25, depth=4), schema_hash=HASH)


def test_empty_ensemble_is_header_only():
    data = export_flat(TreeEnsemble(HASH, 3))
    assert len(data) == expected_size(0, 0) == 25
    m = load_flat(data)
    assert m.n_trees == 0 and m.predict([1.0, 2.0, 3.0]) == 0.0


def test_header_layout(model):
    data = export_flat(model)
    magic, version, h, nf, nt, depth, base = struct.unpack_from("<4sH8sHIBf", data)
    assert (magic, version, h.hex(), nf, nt, depth, base) == (b"RNKL", 1, HASH, 5, 25, 4, 0.0)
    assert len(data) == expected_size(25, 4)
    # first split record sits right after the header
    f, thr, miss = struct.unpack_from("<HfB", data, 25)
    assert f == model.trees[0].features[0]
    assert thr == np.float32(model.trees[0].thresholds[0])
    assert miss == int(model.trees[0].missing_right[0])


def test_export_is_deterministic(model):
    assert export_flat(model) == export_flat(model)
    assert export_flat(TreeEnsemble.from_json(model.to_json())) == export_flat(model)


def test_round_trip_exact(model):
    flat = load_flat(export_flat(model), HASH)
    rng = np.random.default_rng(1)
    X = rng.normal(size=(1000, 5)) * 2
    X[rng.random(X.shape) < 0.1] = np.nan
    a = flat.predict_matrix(X)
    b = model.predict_matrix(X, single=True)
    assert a.dtype == np.float32 and np.array_equal(a, b)


def test_default_size_model_under_budget():
    # a default-depth, default-iteration ensemble over the 25-slot schema
    rng = np.random.default_rng(0)
    trees = tuple(ObliviousTree(tuple(int(f) for f in rng.integers(0, 25, 6)),
                                tuple(float(v) for v in rng.normal(size=6)), (False,) * 6,
                                tuple(float(v) for v in rng.normal(size=64)))
                  for _ in range(200))
    data = export_flat(TreeEnsemble(DEFAULT_SCHEMA.hash, 25, 0.0, trees))
    assert len(data) == expected_size(200, 6) < 2 * 1024 * 1024


def test_budget_exceeded(model):
    with pytest.raises(BudgetExceededError):
        export_flat(model, limit=100)


def test_truncated(model):
    data = export_flat(model)
    with pytest.raises(TruncatedError):
        load_flat(data[:-10])
    with pytest.raises(TruncatedError):
        load_flat(data[:12])
    with pytest.raises(TruncatedError):
        load_flat(b"RN")


def test_bad_magic_and_version(model):
    data = export_flat(model)
    with pytest.raises(BadMagicError):
        load_flat(b"XXXX" + data[4:])
    with pytest.raises(VersionUnsupportedError):
        load_flat(data[:4] + struct.pack("<H", 2) + data[6:])


def test_corrupt(model):
    data = bytearray(export_flat(model))
    with pytest.raises(CorruptModelError):
        load_flat(bytes(data) + b"\0")
    bad = bytearray(data)
    struct.pack_into("<H", bad, 25, 999)
    with pytest.raises(CorruptModelError):
        load_flat(bytes(bad))
    bad = bytearray(data)
    bad[25 + 6] = 7
    with pytest.raises(CorruptModelError):
        load_flat(bytes(bad))


def test_schema_hash_check(model):
    data = export_flat(model)
    with pytest.raises(SchemaHashMismatchError):
        load_flat(data, "0000000000000001")


def test_arity_check(model):
    flat = load_flat(export_flat(model))
    with pytest.raises(SchemaMismatchError):
        flat.predict_matrix(np.zeros((2, 3)))


def test_check_budget(model):
    data = export_flat(model)
    rep = check_budget(data, limit=1, repetitions=50)
    assert not rep.size_ok
    rep = check_budget(data, repetitions=1000)
    assert rep.size_ok and rep.repetitions == 1000
    assert rep.median_latency_ms < 30 and rep.latency_ok


def test_size_monotone_in_trees(model):
    sizes = [len(export_flat(TreeEnsemble(HASH, 5, 0.0, model.trees[:k]))) for k in range(0, 26, 5)]
    assert sizes == sorted(sizes)


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.binary(max_size=200))
def test_fuzz_random_bytes(blob):
    try:
        load_flat(blob)
    except ArtifactError:
        pass


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_fuzz_mutations(model, data):
    raw = bytearray(export_flat(model))
    for _ in range(data.draw(st.integers(1, 4))):
        i = data.draw(st.integers(0, len(raw) - 1))
        raw[i] = data.draw(st.integers(0, 255))
    cut = data.draw(st.integers(0, len(raw)))
    try:
        m = load_flat(bytes(raw[:cut]))
    except ArtifactError:
        return
    out = m.predict_matrix(np.zeros((3, m.n_features)))
    assert out.shape == (3,)
