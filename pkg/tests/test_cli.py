import json
from pathlib import Path

import pytest

from logrank.cli import main
from logrank.config import ConfigError, from_dict, load_config
from logrank.features import DEFAULT_SCHEMA, FeatureDef, FeatureKind, FeatureSchema

TINY = {
    "sim": {"users": 5, "sessions_per_user": 12, "master_seed": 42},
    "train": {"iterations": 8, "depth": 4},
    "bootstrap": {"resamples": 50},
    "out": "out",
}


def write_config(tmp_path, **over):
    raw = json.loads(json.dumps(TINY))
    for k, v in over.items():
        raw[k] = v
    p = tmp_path / "run.json"
    p.write_text(json.dumps(raw))
    return str(p)


@pytest.fixture(scope="module")
def run_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("run")
    cfg = write_config(d)
    assert main(["pipeline", "--config", cfg]) == 0
    return d, cfg


def test_pipeline_artifacts(run_dir):
    d, _ = run_dir
    out = d / "out"
    for name in ("logs.jsonl", "model.rnkl", "model.json", "offline.json", "offline.txt",
                 "offline.png", "loss.png", "train.json", "pipeline.json"):
        assert (out / name).is_file(), name
    rep = json.loads((out / "offline.json").read_text())
    assert set(rep) == {"heuristic", "model"}
    assert {"R@1_all", "R@5_all", "R@1_initial", "R@5_initial"} <= set(rep["model"])


def test_nothing_written_outside_out(run_dir):
    d, _ = run_dir
    assert sorted(p.name for p in d.iterdir()) == ["out", "run.json"]


def test_pipeline_is_reproducible(run_dir, tmp_path):
    d, _ = run_dir
    cfg = write_config(tmp_path)
    assert main(["pipeline", "--config", cfg]) == 0
    for name in ("logs.jsonl", "model.rnkl", "model.json", "offline.json", "offline.txt", "train.json",
                 "pipeline.txt", "offline.png", "loss.png"):
        assert (tmp_path / "out" / name).read_bytes() == (d / "out" / name).read_bytes(), name


def test_seed_flag_changes_logs(run_dir, tmp_path):
    d, cfg = run_dir
    assert main(["simulate", "--config", cfg, "--seed", "7", "--out", str(tmp_path / "o")]) == 0
    assert (tmp_path / "o" / "logs.jsonl").read_bytes() != (d / "out" / "logs.jsonl").read_bytes()


def test_missing_corpus(tmp_path):
    cfg = write_config(tmp_path, corpus={"path": "does/not/exist"})
    assert main(["pipeline", "--config", cfg]) == 2


def test_budget_violation(tmp_path):
    cfg = write_config(tmp_path, budgets={"model_bytes": 256})
    assert main(["pipeline", "--config", cfg]) == 4


def test_bad_configs(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert main(["index", "--config", str(p)]) == 2
    assert main(["index", "--config", str(tmp_path / "absent.json")]) == 2
    cfg = write_config(tmp_path, sim={"users": 2, "wings": 3})
    assert main(["index", "--config", cfg]) == 2
    cfg = write_config(tmp_path, train={"iterations": 0})
    assert main(["index", "--config", cfg]) == 2


def test_config_paths_resolve_against_file(tmp_path):
    (tmp_path / "corpus").mkdir()
    (tmp_path / "corpus" / "a.py").write_text("alpha beta\n")
    cfg = from_dict({"corpus": {"path": "corpus", "globs": ["*.py"]}, "out": "o"}, tmp_path)
    assert Path(cfg.corpus.path) == tmp_path / "corpus"
    assert Path(cfg.out) == tmp_path / "o"
    with pytest.raises(ConfigError):
        from_dict({"budgets": {"latency_ms": 0}}, tmp_path)
    with pytest.raises(ConfigError):
        from_dict({"extra": {}}, tmp_path)
    assert load_config(None).sim.users == 120


def test_abtest(run_dir):
    d, cfg = run_dir
    model = str(d / "out" / "model.rnkl")
    assert main(["abtest", "heuristic", model, "--config", cfg]) == 0
    rep = json.loads((d / "out" / "ab.json").read_text())
    assert {"explicit_select", "typed_select", "typing_actions", "prefix_length", "manual_start"} <= set(rep)
    assert all(0 < rep[m]["p"] <= 1 for m in rep if m not in ("config", "arms"))
    assert (d / "out" / "ab.png").is_file()


def test_abtest_aa(run_dir, tmp_path):
    _, cfg = run_dir
    assert main(["abtest", "heuristic", "heuristic", "--config", cfg, "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "ab.json").read_text())
    assert not any(rep[m]["significant"] for m in rep if m not in ("config", "arms"))


def test_abtest_missing_model(run_dir, tmp_path):
    _, cfg = run_dir
    assert main(["abtest", "heuristic", str(tmp_path / "nope.rnkl"), "--config", cfg]) == 2


def test_importance_table(run_dir, tmp_path, capsys):
    _, cfg = run_dir
    d = run_dir[0] / "out"
    code = main(["importance", "--config", cfg, "--model", str(d / "model.rnkl"),
                 "--logs", str(d / "logs.jsonl"), "--out", str(tmp_path), "--repeats", "1"])
    assert code == 0
    rep = json.loads((tmp_path / "importance.json").read_text())
    assert len(rep["features"]) == 25
    vals = [r["importance"] for r in rep["features"]]
    assert vals == sorted(vals, reverse=True)


def test_importance_prune_everything(run_dir, tmp_path):
    d, cfg = run_dir
    code = main(["importance", "--config", cfg, "--model", str(d / "out" / "model.rnkl"),
                 "--logs", str(d / "out" / "logs.jsonl"), "--out", str(tmp_path), "--prune", "1e9",
                 "--repeats", "1"])
    assert code == 3


def test_importance_schema_mismatch(run_dir, tmp_path):
    d, _ = run_dir
    small = FeatureSchema((FeatureDef("prefix_length", FeatureKind.NUMERIC),
                           FeatureDef("candidate_length", FeatureKind.NUMERIC)))
    (tmp_path / "schema.json").write_text(small.to_json())
    cfg = write_config(tmp_path, feature_schema="schema.json")
    code = main(["importance", "--config", cfg, "--model", str(d / "out" / "model.rnkl"),
                 "--logs", str(d / "out" / "logs.jsonl")])
    assert code == 3


def test_pruned_schema_round_trip(run_dir, tmp_path):
    # a pruned schema drives simulate and train end to end
    small = FeatureSchema((FeatureDef("prefix_length", FeatureKind.NUMERIC),
                           FeatureDef("same_file_count", FeatureKind.NUMERIC),
                           FeatureDef("same_file_recency", FeatureKind.NUMERIC)), version=2)
    (tmp_path / "schema.json").write_text(small.to_json())
    cfg = write_config(tmp_path, feature_schema="schema.json")
    assert main(["simulate", "--config", cfg, "--group", "pruned"]) == 0
    assert main(["train", "--config", cfg, "--logs", str(tmp_path / "out" / "logs_pruned.jsonl")]) == 0
    model = json.loads((tmp_path / "out" / "model.json").read_text())
    assert model["n_features"] == 3 and model["schema_hash"] == small.hash != DEFAULT_SCHEMA.hash
    manifest = json.loads((tmp_path / "out" / "manifest_pruned.json").read_text())
    assert manifest["group"] == "pruned" and manifest["sessions"] == 60


def test_inspect(run_dir, tmp_path, capsys):
    d, cfg = run_dir
    assert main(["inspect", str(d / "out" / "model.rnkl"), "--config", cfg, "--out", str(tmp_path)]) == 0
    text = capsys.readouterr().out
    assert "RNKL" in text and DEFAULT_SCHEMA.hash in text
    assert main(["inspect", str(d / "out" / "logs.jsonl"), "--config", cfg, "--out", str(tmp_path)]) == 0
    rep = json.loads((tmp_path / "inspect.json").read_text())
    assert rep["kind"] == "log" and rep["sessions"] == 60


def test_export_and_eval(run_dir, tmp_path):
    d, cfg = run_dir
    out = str(tmp_path)
    assert main(["export", "--config", cfg, "--model", str(d / "out" / "model.json"), "--out", out,
                 "--repetitions", "100"]) == 0
    assert (tmp_path / "model.rnkl").read_bytes() == (d / "out" / "model.rnkl").read_bytes()
    budget = json.loads((tmp_path / "budget.json").read_text())
    assert budget["size_ok"] and budget["latency_ok"]
    assert main(["eval-offline", "--config", cfg, "--logs", str(d / "out" / "logs.jsonl"), "--out", out]) == 0
    assert json.loads((tmp_path / "offline.json").read_text()) == json.loads((d / "out" / "offline.json").read_text())


def test_index_command(tmp_path):
    cfg = write_config(tmp_path)
    assert main(["index", "--config", cfg]) == 0
    rep = json.loads((tmp_path / "out" / "index.json").read_text())
    assert rep["files"] >= 50 and rep["vocabulary"] > 100
