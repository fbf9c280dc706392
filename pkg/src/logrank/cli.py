"""Command-line entry point: ``logrank <command> [--config PATH] [--seed N] [--out DIR]``.

Exit codes: 0 ok, 2 configuration error, 3 data error, 4 budget violation.
Every report is written twice, as ``<name>.txt`` and ``<name>.json``, into
the output directory; progress goes to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from collections import Counter
from pathlib import Path

import numpy as np

from . import plotting
from .candidate_provider import ProviderError, ScopeIndex, build_index, load_keywords, read_corpus
from .config import ConfigError, RunConfig, load_config
from .evaluation import (
    EvaluationError,
    ab_report,
    format_offline,
    offline_report,
    split_by_user,
)
from .features import FeatureError, FeatureSchema, SchemaMismatchError, all_importances, prune_schema
from .log_schema import LogSchemaError, decode_log, encode_sessions, labeled_groups
from .model_artifact import (
    MAGIC,
    ArtifactError,
    BudgetExceededError,
    check_budget,
    export_flat,
    load_flat,
)
from .ranker import QueryGroup, RankerError, TreeEnsemble, fit
from .user_sim import HeuristicRanker, ModelRanker, replay_corpus

EXIT_OK, EXIT_CONFIG, EXIT_DATA, EXIT_BUDGET = 0, 2, 3, 4
HEURISTIC = "heuristic"


class StageError(Exception):
    def __init__(self, stage: str, code: int, message: str):
        super().__init__(message)
        self.stage = stage
        self.code = code


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _classify(exc: BaseException) -> int | None:
    if isinstance(exc, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(exc, (ConfigError, FileNotFoundError, IsADirectoryError)):
        return EXIT_CONFIG
    if isinstance(exc, (LogSchemaError, FeatureError, RankerError, EvaluationError,
                        ProviderError, ArtifactError, UnicodeDecodeError)):
        return EXIT_DATA
    return None


class _Stage:
    """``with _Stage("train"):`` tags known errors with the stage name."""

    def __init__(self, name: str):
        self.name = name

    def __enter__(self):
        _log(f"[{self.name}]")
        return self

    def __exit__(self, kind, exc, tb):
        if exc is None or isinstance(exc, StageError):
            return False
        code = _classify(exc)
        if code is None:
            return False
        raise StageError(self.name, code, str(exc)) from exc


# ---------------------------------------------------------------------------
# output helpers


class Workspace:
    """The output directory; every write goes through here."""

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def path(self, name: str) -> Path:
        p = (self.root / name).resolve()
        if self.root.resolve() not in p.parents:
            raise ConfigError(f"refusing to write outside the output directory: {name}")
        p.parent.mkdir(parents=True, exist_ok=True)
        return p

    def write_bytes(self, name: str, data: bytes) -> Path:
        p = self.path(name)
        p.write_bytes(data)
        return p

    def write_text(self, name: str, text: str) -> Path:
        return self.write_bytes(name, text.encode("utf-8"))

    def report(self, name: str, text: str, data: dict) -> None:
        self.write_text(f"{name}.txt", text)
        self.write_text(f"{name}.json", json.dumps(data, indent=2, sort_keys=True, allow_nan=False) + "\n")
        sys.stdout.write(text)


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


# ---------------------------------------------------------------------------
# shared steps


def make_index(cfg: RunConfig) -> ScopeIndex:
    files = read_corpus(cfg.corpus.root(), cfg.corpus.globs)
    return build_index(files, load_keywords(cfg.keywords))


def load_ranker(which: str, schema: FeatureSchema):
    """A ranker from the pseudo-model name ``heuristic``, a ``.rnkl`` file
    or a JSON ensemble."""
    if which == HEURISTIC:
        return HeuristicRanker()
    return ModelRanker(load_model(which, schema), name=Path(which).name)


def load_model(path: str | Path, schema: FeatureSchema | None = None):
    path = Path(path)
    data = path.read_bytes()
    if data[:4] == MAGIC:
        model = load_flat(data)
    else:
        try:
            model = TreeEnsemble.from_json(data.decode("utf-8"))
        except (ValueError, KeyError, TypeError) as exc:
            raise ArtifactError(f"{path} is neither an RNKL model nor an ensemble JSON: {exc}") from exc
    if schema is not None:
        if model.schema_hash and model.schema_hash != schema.hash:
            raise SchemaMismatchError(f"model schema {model.schema_hash} != configured schema {schema.hash}")
        if model.n_features != schema.arity:
            raise SchemaMismatchError(f"model has {model.n_features} features, schema has {schema.arity}")
    return model


def read_logs(path: str | Path, schema: FeatureSchema):
    header, sessions = decode_log(Path(path).read_bytes())
    if header is not None and header.feature_schema_hash and header.feature_schema_hash != schema.hash:
        raise SchemaMismatchError(
            f"log schema {header.feature_schema_hash} != configured schema {schema.hash}"
        )
    return sessions


def _query_groups(sessions):
    return [QueryGroup(g.features, g.targets) for g in labeled_groups(sessions)]


def _split(cfg: RunConfig, sessions):
    return split_by_user(sessions, cfg.train.train_ratio, cfg.train.split_seed)


def _default_model(ws: Workspace) -> Path:
    flat = ws.root / "model.rnkl"
    return flat if flat.exists() else ws.root / "model.json"


# ---------------------------------------------------------------------------
# commands


def cmd_index(cfg: RunConfig, args, ws: Workspace) -> int:
    with _Stage("index"):
        index = make_index(cfg)
    kw = int(index.is_keyword.sum())
    data = {
        "files": len(index.files),
        "tokens": int(index.global_counts.sum()),
        "vocabulary": len(index.vocab),
        "keywords_in_vocabulary": kw,
        "directories": len(index.dir_counts),
    }
    text = "".join(f"{k:<24}{v}\n" for k, v in data.items())
    ws.report("index", text, data)
    return EXIT_OK


def simulate(cfg: RunConfig, index: ScopeIndex, ranker, population: str = "logs"):
    schema = cfg.schema()
    return replay_corpus(index, ranker, cfg.sim, population=population, schema=schema)


def _session_summary(sessions) -> dict:
    outcomes = Counter(s.outcome.value for s in sessions)
    triggers = Counter(s.trigger.value for s in sessions)
    return {
        "sessions": len(sessions),
        "users": len({s.user_id for s in sessions}),
        "lookups": sum(len(s.lookups) for s in sessions),
        "outcomes": dict(sorted(outcomes.items())),
        "triggers": dict(sorted(triggers.items())),
    }


def cmd_simulate(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("simulate"):
        ranker = load_ranker(args.ranker, schema)
        index = make_index(cfg)
        sessions = simulate(cfg, index, ranker, population=args.population)
        data = encode_sessions(sessions, schema.hash)
    suffix = f"_{args.group}" if args.group else ""
    log_name = f"logs{suffix}.jsonl"
    ws.write_bytes(log_name, data)
    manifest = {
        "group": args.group,
        "ranker": args.ranker if args.ranker == HEURISTIC else Path(args.ranker).name,
        "population": args.population,
        "master_seed": cfg.sim.master_seed,
        "feature_schema_hash": schema.hash,
        "log_file": log_name,
        "log_sha256": _sha256(data),
        **_session_summary(sessions),
    }
    text = "".join(f"{k:<20}{v}\n" for k, v in manifest.items())
    ws.report(f"manifest{suffix}", text, manifest)
    return EXIT_OK


def train(cfg: RunConfig, sessions, schema: FeatureSchema):
    train_s, holdout_s = _split(cfg, sessions)
    groups = _query_groups(train_s)
    losses: list[float] = []

    def progress(it, loss):
        losses.append(loss)
        if it % 20 == 0 or it == cfg.train.params.iterations:
            _log(f"  iteration {it:4d}  loss {loss:.5f}")

    model = fit(groups, cfg.train.params, schema.hash, workers=cfg.train.workers, callback=progress)
    info = {
        "train_sessions": len(train_s),
        "holdout_sessions": len(holdout_s),
        "train_users": len({s.user_id for s in train_s}),
        "holdout_users": len({s.user_id for s in holdout_s}),
        "query_groups": len(groups),
        "rows": int(sum(len(g.targets) for g in groups)),
        "iterations": cfg.train.params.iterations,
        "initial_loss": losses[0],
        "final_loss": losses[-1],
        "loss_curve": losses,
    }
    return model, info


def _train_text(info: dict) -> str:
    return "".join(f"{k:<18}{v}\n" for k, v in info.items() if k != "loss_curve")


def cmd_train(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("train"):
        sessions = read_logs(args.logs or ws.root / "logs.jsonl", schema)
        model, info = train(cfg, sessions, schema)
    ws.write_text("model.json", model.to_json())
    ws.report("train", _train_text(info), info)
    plotting.loss_curve(info["loss_curve"], ws.path("loss.png"))
    return EXIT_OK


def export(cfg: RunConfig, model: TreeEnsemble) -> bytes:
    return export_flat(model, cfg.budgets.model_bytes)


def cmd_export(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("export"):
        model = load_model(args.model or ws.root / "model.json", schema)
        if not isinstance(model, TreeEnsemble):
            raise StageError("export", EXIT_CONFIG, "export needs an ensemble JSON, not a flat model")
        data = export(cfg, model)
        budget = check_budget(data, cfg.budgets.model_bytes, cfg.budgets.latency_ms,
                              repetitions=args.repetitions)
    ws.write_bytes("model.rnkl", data)
    # measured latency varies run to run, so only the verdict is persisted
    report = {
        "size_bytes": budget.size_bytes,
        "size_limit": budget.size_limit,
        "size_ok": budget.size_ok,
        "latency_limit_ms": budget.latency_limit_ms,
        "latency_ok": budget.latency_ok,
        "repetitions": budget.repetitions,
        "sha256": _sha256(data),
    }
    ws.report("budget", "".join(f"{k:<18}{v}\n" for k, v in report.items()), report)
    _log(f"  median latency {budget.median_latency_ms:.3f} ms over {budget.repetitions} look-ups")
    if not budget.latency_ok:
        _log("error [export]: latency budget exceeded")
        return EXIT_BUDGET
    return EXIT_OK


def offline(cfg: RunConfig, sessions, model, model_name: str = "model"):
    _, holdout = _split(cfg, sessions)
    return {HEURISTIC: offline_report(holdout), model_name: offline_report(holdout, model)}


def _offline_outputs(ws: Workspace, reports: dict) -> None:
    data = {name: rep.as_dict() for name, rep in reports.items()}
    ws.report("offline", format_offline(reports), data)
    plotting.offline_bars(reports, ws.path("offline.png"))


def cmd_eval_offline(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("eval-offline"):
        model = load_model(args.model or _default_model(ws), schema)
        sessions = read_logs(args.logs or ws.root / "logs.jsonl", schema)
        reports = offline(cfg, sessions, model)
    _offline_outputs(ws, reports)
    return EXIT_OK


def cmd_abtest(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("abtest"):
        ra = load_ranker(args.model_a, schema)
        rb = load_ranker(args.model_b, schema)
        index = make_index(cfg)
        arm_a = simulate(cfg, index, ra, population="ab")
        arm_b = simulate(cfg, index, rb, population="ab")
        report = ab_report(arm_a, arm_b, cfg.bootstrap)
    names = (args.model_a if args.model_a == HEURISTIC else Path(args.model_a).name,
             args.model_b if args.model_b == HEURISTIC else Path(args.model_b).name)
    data = {"arms": {"A": names[0], "B": names[1]}, **report.as_dict()}
    ws.report("ab", report.to_text(names), data)
    plotting.ab_panels(report, names, ws.path("ab.png"))
    return EXIT_OK


def cmd_inspect(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("inspect"):
        raw = Path(args.path).read_bytes()
        if raw[:4] == MAGIC:
            model = load_flat(raw)
            data = {"kind": "model", "bytes": len(raw), **model.header_fields()}
            used = sorted({int(f) for f in np.unique(model.features)}) if model.n_trees else []
            if model.schema_hash == schema.hash:
                data["features_used"] = [schema.slot_names[f] for f in used]
            else:
                data["features_used"] = used
        else:
            header, sessions = decode_log(raw)
            data = {"kind": "log", "bytes": len(raw),
                    "feature_schema_hash": header.feature_schema_hash if header else "",
                    **_session_summary(sessions)}
    text = "".join(f"{k:<22}{v}\n" for k, v in data.items())
    ws.report("inspect", text, data)
    return EXIT_OK


def cmd_importance(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("importance"):
        model = load_model(args.model or _default_model(ws), schema)
        sessions = read_logs(args.logs or ws.root / "logs.jsonl", schema)
        if args.scope == "holdout":
            sessions = _split(cfg, sessions)[1]
        groups = _query_groups(sessions)
        if not groups:
            raise StageError("importance", EXIT_DATA, "no labeled look-ups in the logs")
        imp = all_importances(model, groups, repeats=args.repeats, seed=cfg.train.params.seed)
        used = _used_slots(model)
        pruned = None
        if args.prune is not None:
            pruned = prune_schema(schema, imp, args.prune, used)
    order = np.argsort(-imp, kind="stable")
    rows = [{"feature": schema.slot_names[i], "importance": float(imp[i]), "used": int(i) in used}
            for i in order]
    lines = [f"{'feature':<40}{'importance':>12}  used"]
    lines += [f"{r['feature']:<40}{r['importance']:>12.5f}  {'yes' if r['used'] else 'no'}" for r in rows]
    data = {"scope": args.scope, "repeats": args.repeats, "groups": len(groups), "features": rows}
    if pruned is not None:
        ws.write_text("schema_pruned.json", pruned.to_json())
        data["pruned"] = {"epsilon": args.prune, "kept": [f.name for f in pruned.features],
                          "arity": pruned.arity, "version": pruned.version, "hash": pruned.hash}
        lines.append(f"pruned schema (epsilon={args.prune}): {pruned.arity} slots, written to schema_pruned.json")
    ws.report("importance", "\n".join(lines) + "\n", data)
    plotting.importance_bars(schema.slot_names, imp, ws.path("importance.png"), args.prune)
    return EXIT_OK


def _used_slots(model) -> set[int]:
    if isinstance(model, TreeEnsemble):
        return model.used_features()
    return {int(f) for f in np.unique(model.features)} if model.n_trees else set()


def cmd_pipeline(cfg: RunConfig, args, ws: Workspace) -> int:
    schema = cfg.schema()
    with _Stage("index"):
        index = make_index(cfg)
    with _Stage("simulate"):
        sessions = simulate(cfg, index, HeuristicRanker())
        logs = encode_sessions(sessions, schema.hash)
    ws.write_bytes("logs.jsonl", logs)
    with _Stage("train"):
        model, info = train(cfg, sessions, schema)
    ws.write_text("model.json", model.to_json())
    ws.report("train", _train_text(info), info)
    plotting.loss_curve(info["loss_curve"], ws.path("loss.png"))
    with _Stage("export"):
        flat_bytes = export(cfg, model)
    ws.write_bytes("model.rnkl", flat_bytes)
    with _Stage("eval-offline"):
        reports = offline(cfg, sessions, load_flat(flat_bytes, schema.hash))
    _offline_outputs(ws, reports)
    summary = {
        # the output directory is left out so reruns elsewhere compare equal
        "config": {k: v for k, v in cfg.as_dict().items() if k != "out"},
        "logs_sha256": _sha256(logs),
        "model_sha256": _sha256(flat_bytes),
        "model_bytes": len(flat_bytes),
        "sessions": len(sessions),
        "offline": {name: rep.as_dict() for name, rep in reports.items()},
    }
    text = (f"sessions {len(sessions)}  model {len(flat_bytes)} bytes\n"
            f"logs  sha256 {summary['logs_sha256']}\nmodel sha256 {summary['model_sha256']}\n")
    ws.report("pipeline", text, summary)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON run configuration")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="reseed every random stream")
    common.add_argument("--out", default=argparse.SUPPRESS, help="output directory")

    p = argparse.ArgumentParser(prog="logrank", parents=[common],
                                description="Learn to rank completion candidates from session logs.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("index", parents=[common], help="index the corpus and summarize it")

    s = sub.add_parser("simulate", parents=[common], help="replay the corpus as completion sessions")
    s.add_argument("--ranker", default=HEURISTIC, help="'heuristic' or a model file")
    s.add_argument("--group", default=None, help="group label stamped into the manifest")
    s.add_argument("--population", default="logs", help="user population tag")

    s = sub.add_parser("train", parents=[common], help="fit the ranker on the training users")
    s.add_argument("--logs", default=None)

    s = sub.add_parser("eval-offline", parents=[common], help="recall of model vs heuristic on held-out users")
    s.add_argument("--logs", default=None)
    s.add_argument("--model", default=None)

    s = sub.add_parser("abtest", parents=[common], help="simulated A/B test between two rankers")
    s.add_argument("model_a")
    s.add_argument("model_b")

    s = sub.add_parser("export", parents=[common], help="write model.rnkl and check budgets")
    s.add_argument("--model", default=None)
    s.add_argument("--repetitions", type=int, default=1000)

    s = sub.add_parser("inspect", parents=[common], help="summarize a model or log file")
    s.add_argument("path")

    s = sub.add_parser("importance", parents=[common], help="permutation importance per feature")
    s.add_argument("--model", default=None)
    s.add_argument("--logs", default=None)
    s.add_argument("--prune", type=float, default=None, metavar="EPSILON")
    s.add_argument("--repeats", type=int, default=3)
    s.add_argument("--scope", choices=("holdout", "all"), default="holdout")

    sub.add_parser("pipeline", parents=[common], help="index, simulate, train, export, evaluate")
    return p


COMMANDS = {
    "index": cmd_index,
    "simulate": cmd_simulate,
    "train": cmd_train,
    "eval-offline": cmd_eval_offline,
    "abtest": cmd_abtest,
    "export": cmd_export,
    "inspect": cmd_inspect,
    "importance": cmd_importance,
    "pipeline": cmd_pipeline,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(getattr(args, "config", None))
        if getattr(args, "seed", None) is not None:
            cfg = cfg.with_seed(args.seed)
        if getattr(args, "out", None) is not None:
            cfg = cfg.with_out(args.out)
        ws = Workspace(cfg.out)
        return COMMANDS[args.command](cfg, args, ws)
    except StageError as exc:
        _log(f"error [{exc.stage}]: {exc}")
        return exc.code
    except ConfigError as exc:
        _log(f"error [config]: {exc}")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
