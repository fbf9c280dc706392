"""Acceptance criteria AC-1 .. AC-9.

Each test prints one ``AC-n PASS|FAIL`` line (also repeated in the pytest
terminal summary). Tolerances are pinned as module constants.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline.
"""

import json
import time

import numpy as np
import pytest

from logrank.candidate_provider import build_index, load_keywords, read_corpus
from logrank.cli import main
from logrank.config import RunConfig
from logrank.demo_corpus import bundled_path
from logrank.evaluation import (
    BootstrapConfig,
    RankedLookup,
    UserStats,
    ab_report,
    bootstrap_diffs,
    offline_report,
    pvalue_from_diffs,
    recall_at_k,
    split_by_user,
)
from logrank.features import DEFAULT_SCHEMA
from logrank.log_schema import encode_sessions, labeled_groups, leakage_scan
from logrank.model_artifact import check_budget, export_flat, load_flat
from logrank.ranker import QueryGroup, TrainParams, fit, group_grad_hess, group_loss
from logrank.user_sim import HeuristicRanker, ModelRanker, replay_corpus

# pinned tolerances
AC1_GROUPS, AC1_SIZES, AC1_SCORE_RANGE, AC1_H, AC1_REL_ERR, AC1_SECONDS = 100, (2, 20), 3.0, 1e-5, 1e-4, 5.0
AC2_DATASETS, AC2_MAX_ROWS, AC2_SECONDS = 50, 16, 10.0
AC3_LOOKUPS, AC3_KS = 1000, (1, 5)
AC4_SEED, AC4_MIN_FILES, AC4_MIN_SESSIONS, AC4_RATIO, AC4_ALPHA, AC4_SECONDS = 42, 50, 5000, 0.8, 0.01, 300.0
AC5_BYTES, AC5_LATENCY_MS, AC5_REPETITIONS, AC5_CANDIDATES = 2 * 1024 * 1024, 30.0, 1000, 100
AC6_SPLITS, AC6_ALPHA, AC6_RANGE = 200, 0.05, (0.01, 0.10)
AC8_MIN_LENGTH = 3
AC9_VECTORS = 1000

RESULTS: dict[str, str] = {}


def verdict(ac: str, ok: bool, detail: str) -> None:
    line = f"{ac} {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[ac] = line
    print("\n" + line)


# --- AC-1 ------------------------------------------------------------------------


def test_ac1_gradient_check():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(AC1_GROUPS):
        n = int(rng.integers(AC1_SIZES[0], AC1_SIZES[1] + 1))
        targets = np.zeros(n)
        targets[rng.integers(n)] = 1
        group = QueryGroup(np.zeros((n, 1)), targets)
        s = rng.uniform(-AC1_SCORE_RANGE, AC1_SCORE_RANGE, n)
        g, _ = group_grad_hess(group, s)
        for i in range(n):
            e = np.zeros(n)
            e[i] = AC1_H
            fd = (group_loss(group, s + e) - group_loss(group, s - e)) / (2 * AC1_H)
            worst = max(worst, abs(fd - g[i]) / max(abs(fd), abs(g[i]), 1e-12))
    elapsed = time.perf_counter() - t0
    ok = worst < AC1_REL_ERR and elapsed < AC1_SECONDS
    verdict("AC-1", ok, f"max relative error {worst:.2e} (< {AC1_REL_ERR}), {elapsed:.2f} s (< {AC1_SECONDS} s)")
    assert ok


# --- AC-2 ------------------------------------------------------------------------


def brute_force_split(X, groups, l2):
    """All (feature, midpoint) splits scored from scratch at zero scores."""
    g = np.concatenate([np.full(len(t), 1.0 / len(t)) - t for t in groups])
    h = np.concatenate([np.full(len(t), max((1.0 / len(t)) * (1 - 1.0 / len(t)), 1e-16)) for t in groups])
    best = None
    for f in range(X.shape[1]):
        values = sorted(set(X[:, f].tolist()))
        for lo, hi in zip(values, values[1:]):
            mid = float(np.float32((lo + hi) / 2))
            right = X[:, f] > mid
            GL, HL = g[~right].sum(), h[~right].sum()
            GR, HR = g[right].sum(), h[right].sum()
            gain = GL**2 / (HL + l2) + GR**2 / (HR + l2)
            # strict improvement keeps the lowest feature, then lowest threshold
            if best is None or gain > best[2] + 1e-12 * max(1.0, abs(best[2])):
                best = (f, mid, gain)
    return best


def test_ac2_split_oracle():
    t0 = time.perf_counter()
    rng = np.random.default_rng(99)
    params = TrainParams(iterations=1, depth=1)
    mismatches = 0
    for _ in range(AC2_DATASETS):
        sizes = []
        while sum(sizes) < 4:
            sizes = [int(rng.integers(2, 5)) for _ in range(int(rng.integers(2, 5)))]
            while sum(sizes) > AC2_MAX_ROWS:
                sizes.pop()
        groups = []
        for n in sizes:
            t = np.zeros(n)
            t[rng.integers(n)] = 1
            groups.append(QueryGroup(rng.integers(0, 12, size=(n, 2)) / 4.0, t))
        X = np.vstack([grp.features for grp in groups])
        model = fit(groups, params)
        tree = model.trees[0]
        expected = brute_force_split(X, [grp.targets for grp in groups], params.l2_leaf_reg)
        if expected is None:
            continue
        if (tree.features[0], tree.thresholds[0]) != expected[:2]:
            mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < AC2_SECONDS
    verdict("AC-2", ok, f"{mismatches} mismatches over {AC2_DATASETS} datasets, {elapsed:.2f} s (< {AC2_SECONDS} s)")
    assert ok


# --- AC-3 ------------------------------------------------------------------------


def scan_recall(lookups, k, scope):
    hits = total = 0
    for lk in lookups:
        if scope == "initial" and lk.ordinal != 0:
            continue
        total += 1
        if lk.position is not None:
            for rank in range(k):
                if rank == lk.position:
                    hits += 1
                    break
    return hits / total


def test_ac3_recall_oracle():
    rng = np.random.default_rng(7)
    lookups = []
    for _ in range(AC3_LOOKUPS):
        pos = None if rng.random() < 0.1 else int(rng.integers(0, 20))
        lookups.append(RankedLookup(int(rng.integers(0, 4)), pos))
    bad = [(k, scope) for k in AC3_KS for scope in ("all", "initial")
           if recall_at_k(lookups, k, scope) != scan_recall(lookups, k, scope)]
    verdict("AC-3", not bad, f"{AC3_LOOKUPS} look-ups, k in {AC3_KS}, both scopes, mismatches {bad}")
    assert not bad


# --- shared end-to-end run -----------------------------------------------------------


@pytest.fixture(scope="module")
def e2e():
    t0 = time.perf_counter()
    cfg = RunConfig().with_seed(AC4_SEED)
    index = build_index(read_corpus(bundled_path(), list(cfg.corpus.globs)), load_keywords())
    sessions = replay_corpus(index, HeuristicRanker(), cfg.sim)
    train_s, holdout_s = split_by_user(sessions, AC4_RATIO, cfg.train.split_seed)
    groups = [QueryGroup(g.features, g.targets) for g in labeled_groups(train_s)]
    model = fit(groups, cfg.train.params, DEFAULT_SCHEMA.hash)
    offline = {"heuristic": offline_report(holdout_s), "model": offline_report(holdout_s, model)}
    arm_a = replay_corpus(index, HeuristicRanker(), cfg.sim, population="ab")
    arm_b = replay_corpus(index, ModelRanker(model), cfg.sim, population="ab")
    ab = ab_report(arm_a, arm_b, cfg.bootstrap)
    return {
        "index": index, "sessions": sessions, "groups": groups, "model": model,
        "offline": offline, "ab": ab, "seconds": time.perf_counter() - t0,
    }


# --- AC-4 ------------------------------------------------------------------------


@pytest.mark.slow
def test_ac4_end_to_end_improvement(e2e):
    h, m = e2e["offline"]["heuristic"].as_dict(), e2e["offline"]["model"].as_dict()
    ta = e2e["ab"].metrics["typing_actions"]
    checks = {
        "files": len(e2e["index"].files) >= AC4_MIN_FILES,
        "sessions": len(e2e["sessions"]) >= AC4_MIN_SESSIONS,
        "R@1_all": m["R@1_all"] > h["R@1_all"],
        "R@1_initial": m["R@1_initial"] > h["R@1_initial"],
        "typing_actions": ta.b < ta.a and ta.p < AC4_ALPHA,
        "runtime": e2e["seconds"] < AC4_SECONDS,
    }
    ok = all(checks.values())
    verdict("AC-4", ok,
            f"{len(e2e['index'].files)} files, {len(e2e['sessions'])} sessions; "
            f"R@1_all {h['R@1_all']:.4f} -> {m['R@1_all']:.4f}, "
            f"R@1_init {h['R@1_initial']:.4f} -> {m['R@1_initial']:.4f}; "
            f"typing_actions {ta.a:.4f} -> {ta.b:.4f} p={ta.p:.4f} (< {AC4_ALPHA}); "
            f"{e2e['seconds']:.1f} s (< {AC4_SECONDS} s); failed {[k for k, v in checks.items() if not v]}")
    assert ok


# --- AC-5 ------------------------------------------------------------------------


@pytest.mark.slow
def test_ac5_budgets(e2e):
    data = export_flat(e2e["model"], limit=None)
    budget = check_budget(data, AC5_BYTES, AC5_LATENCY_MS, candidates=AC5_CANDIDATES,
                          repetitions=AC5_REPETITIONS)
    ok = len(data) < AC5_BYTES and budget.median_latency_ms < AC5_LATENCY_MS
    verdict("AC-5", ok, f"{len(data)} bytes (< {AC5_BYTES}); median {budget.median_latency_ms:.3f} ms "
                        f"(< {AC5_LATENCY_MS} ms) over {AC5_REPETITIONS} look-ups of {AC5_CANDIDATES}")
    assert ok


# --- AC-6 ------------------------------------------------------------------------


@pytest.mark.slow
def test_ac6_aa_calibration(e2e):
    sessions = e2e["sessions"]
    users = sorted({s.user_id for s in sessions})
    config = BootstrapConfig()
    rejected = 0
    for split in range(AC6_SPLITS):
        rng = np.random.default_rng([AC4_SEED, split])
        half = set(rng.permutation(users)[: len(users) // 2].tolist())
        a = UserStats([s for s in sessions if s.user_id in half])
        b = UserStats([s for s in sessions if s.user_id not in half])
        cfg = BootstrapConfig(config.resamples, seed=split, alpha=config.alpha)
        rejected += pvalue_from_diffs(bootstrap_diffs(a, b, "typing_actions", cfg)) < AC6_ALPHA
    rate = rejected / AC6_SPLITS
    ok = AC6_RANGE[0] <= rate <= AC6_RANGE[1]
    verdict("AC-6", ok, f"{rejected}/{AC6_SPLITS} A/A splits with p < {AC6_ALPHA}: rate {rate:.3f} in {list(AC6_RANGE)}")
    assert ok


# --- AC-7 ------------------------------------------------------------------------


@pytest.mark.slow
def test_ac7_determinism(e2e, tmp_path):
    cfg_path = tmp_path / "run.json"
    cfg_path.write_text(json.dumps({"sim": {"master_seed": AC4_SEED}}))
    runs = []
    for name in ("first", "second"):
        out = tmp_path / name
        assert main(["pipeline", "--config", str(cfg_path), "--out", str(out)]) == 0
        runs.append(out)
    names = sorted(p.name for p in runs[0].iterdir())
    assert names == sorted(p.name for p in runs[1].iterdir())
    differing = [n for n in names if (runs[0] / n).read_bytes() != (runs[1] / n).read_bytes()]

    params = TrainParams(iterations=30)
    one = fit(e2e["groups"], params, DEFAULT_SCHEMA.hash, workers=1).to_json()
    many = fit(e2e["groups"], params, DEFAULT_SCHEMA.hash, workers=4).to_json()
    ok = not differing and one == many
    verdict("AC-7", ok, f"{len(names)} pipeline outputs compared, differing {differing}; "
                        f"workers 1 vs 4 identical: {one == many}")
    assert ok


# --- AC-8 ------------------------------------------------------------------------


@pytest.mark.slow
def test_ac8_no_leakage(e2e):
    vocab = [w for w in e2e["index"].vocab if len(w) >= AC8_MIN_LENGTH]
    data = encode_sessions(e2e["sessions"], DEFAULT_SCHEMA.hash)
    found = leakage_scan(data, vocab)
    verdict("AC-8", not found, f"{len(data)} log bytes scanned against {len(vocab)} identifiers, "
                               f"found {sorted(found)[:10]}")
    assert not found


# --- AC-9 ------------------------------------------------------------------------


@pytest.mark.slow
def test_ac9_round_trip(e2e):
    model = e2e["model"]
    flat = load_flat(export_flat(model, limit=None), DEFAULT_SCHEMA.hash)
    rng = np.random.default_rng(11)
    X = rng.normal(size=(AC9_VECTORS, model.n_features)) * rng.uniform(0.5, 20, model.n_features)
    X[rng.random(X.shape) < 0.1] = np.nan
    X[: AC9_VECTORS // 10] = np.nan  # some rows entirely missing
    canonical = model.predict_matrix(X, single=True)
    loaded = flat.predict_matrix(X)
    per_row = np.array([flat.predict(x) for x in X[:50]], dtype=np.float32)
    mismatches = int(np.sum(canonical.view(np.uint32) != loaded.view(np.uint32)))
    ok = mismatches == 0 and np.array_equal(per_row, canonical[:50])
    verdict("AC-9", ok, f"{mismatches} bitwise mismatches over {AC9_VECTORS} vectors "
                        f"({int(np.isnan(X).any(axis=1).sum())} with missing values)")
    assert ok
