"""Run configuration: one JSON file with a section per concern.

Relative paths resolve against the directory holding the config file. The
corpus path ``builtin:demo`` selects the bundled demo corpus.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path

from .evaluation import BootstrapConfig
from .features import DEFAULT_SCHEMA, FeatureSchema
from .model_artifact import DEFAULT_SIZE_LIMIT
from .ranker import InvalidParamsError, TrainParams
from .user_sim import SimConfig

BUILTIN_DEMO = "builtin:demo"
SECTIONS = ("corpus", "keywords", "feature_schema", "sim", "train", "bootstrap", "out", "budgets")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusConfig:
    path: str = BUILTIN_DEMO
    globs: tuple[str, ...] = ("**/*.py",)

    def root(self) -> Path:
        if self.path == BUILTIN_DEMO:
            from .demo_corpus import bundled_path
            return bundled_path()
        return Path(self.path)


@dataclass(frozen=True)
class TrainConfig:
    params: TrainParams = TrainParams()
    workers: int = 1
    train_ratio: float = 0.8
    split_seed: int = 0


@dataclass(frozen=True)
class Budgets:
    model_bytes: int = DEFAULT_SIZE_LIMIT
    latency_ms: float = 30.0


@dataclass(frozen=True)
class RunConfig:
    corpus: CorpusConfig = CorpusConfig()
    keywords: str | None = None  # None: bundled Python keyword list
    feature_schema: str | None = None  # None: the default 25-slot schema
    sim: SimConfig = SimConfig()
    train: TrainConfig = TrainConfig()
    bootstrap: BootstrapConfig = BootstrapConfig()
    out: str = "runs/default"
    budgets: Budgets = Budgets()

    def schema(self) -> FeatureSchema:
        if self.feature_schema is None:
            return DEFAULT_SCHEMA
        return FeatureSchema.from_json(Path(self.feature_schema).read_text(encoding="utf-8"))

    def with_seed(self, seed: int) -> "RunConfig":
        """Reseed every random stream from one number."""
        return dataclasses.replace(
            self,
            sim=dataclasses.replace(self.sim, master_seed=seed),
            train=dataclasses.replace(self.train, split_seed=seed,
                                      params=dataclasses.replace(self.train.params, seed=seed)),
            bootstrap=dataclasses.replace(self.bootstrap, seed=seed),
        )

    def with_out(self, out: str) -> "RunConfig":
        return dataclasses.replace(self, out=out)

    def as_dict(self) -> dict:
        return {
            "corpus": dataclasses.asdict(self.corpus),
            "keywords": self.keywords,
            "feature_schema": self.feature_schema,
            "sim": dataclasses.asdict(self.sim),
            "train": {**dataclasses.asdict(self.train.params), "workers": self.train.workers,
                      "train_ratio": self.train.train_ratio, "split_seed": self.train.split_seed},
            "bootstrap": dataclasses.asdict(self.bootstrap),
            "out": self.out,
            "budgets": dataclasses.asdict(self.budgets),
        }


def _build(cls, section: dict | None, name: str, **kw):
    section = dict(section or {})
    known = {f.name for f in dataclasses.fields(cls)}
    unknown = set(section) - known
    if unknown:
        raise ConfigError(f"unknown keys in [{name}]: {', '.join(sorted(unknown))}")
    for k, v in section.items():
        if isinstance(v, list):
            section[k] = tuple(v)
    try:
        return cls(**section, **kw)
    except (TypeError, ValueError, InvalidParamsError) as exc:
        raise ConfigError(f"[{name}] {exc}") from exc


def _resolve(path: str | None, base: Path) -> str | None:
    if path is None or path == BUILTIN_DEMO:
        return path
    p = Path(path)
    return str(p if p.is_absolute() else base / p)


def from_dict(raw: dict, base: Path = Path(".")) -> RunConfig:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(raw) - set(SECTIONS)
    if unknown:
        raise ConfigError(f"unknown config sections: {', '.join(sorted(unknown))}")
    corpus = _build(CorpusConfig, raw.get("corpus"), "corpus")
    corpus = dataclasses.replace(corpus, path=_resolve(corpus.path, base))
    train_raw = dict(raw.get("train") or {})
    outer = {k: train_raw.pop(k) for k in ("workers", "train_ratio", "split_seed") if k in train_raw}
    params = _build(TrainParams, train_raw, "train")
    train = _build(TrainConfig, outer, "train", params=params)
    if train.workers < 1 or not 0 < train.train_ratio < 1:
        raise ConfigError("[train] workers must be >= 1 and train_ratio in (0, 1)")
    budgets = _build(Budgets, raw.get("budgets"), "budgets")
    if budgets.model_bytes <= 0 or budgets.latency_ms <= 0:
        raise ConfigError("[budgets] limits must be positive")
    cfg = RunConfig(
        corpus=corpus,
        keywords=_resolve(raw.get("keywords"), base),
        feature_schema=_resolve(raw.get("feature_schema"), base),
        sim=_build(SimConfig, raw.get("sim"), "sim"),
        train=train,
        bootstrap=_build(BootstrapConfig, raw.get("bootstrap"), "bootstrap"),
        out=_resolve(raw.get("out", "runs/default"), base),
        budgets=budgets,
    )
    check_paths(cfg)
    return cfg


def check_paths(cfg: RunConfig) -> None:
    if not cfg.corpus.root().is_dir():
        raise ConfigError(f"corpus directory not found: {cfg.corpus.path}")
    for label, p in (("keywords", cfg.keywords), ("feature_schema", cfg.feature_schema)):
        if p is not None and not Path(p).is_file():
            raise ConfigError(f"{label} file not found: {p}")
    if cfg.feature_schema is not None:
        try:
            cfg.schema()
        except (ValueError, KeyError) as exc:
            raise ConfigError(f"bad feature schema: {exc}") from exc


def load_config(path: str | Path | None) -> RunConfig:
    """Read a config file; ``None`` gives the defaults."""
    if path is None:
        cfg = RunConfig()
        check_paths(cfg)
        return cfg
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    return from_dict(raw, path.parent)
