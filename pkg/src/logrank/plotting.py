"""Report figures. Rendered with the Agg backend and without a software
stamp so that identical inputs give identical PNG bytes."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 100,
    "svg.hashsalt": "logrank",
}
COLORS = ("#4C72B0", "#DD8452", "#55A868", "#C44E52")


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def offline_bars(reports: dict, path: Path) -> Path:
    """Grouped bars of R@1 / R@5 over both scopes, one color per system."""
    cols = ["R@1_all", "R@5_all", "R@1_initial", "R@5_initial"]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 3.2))
        x = np.arange(len(cols))
        width = 0.8 / max(len(reports), 1)
        for i, (name, rep) in enumerate(reports.items()):
            d = rep.as_dict()
            vals = [d[c] for c in cols]
            bars = ax.bar(x + (i - (len(reports) - 1) / 2) * width, vals, width,
                          label=name, color=COLORS[i % len(COLORS)])
            ax.bar_label(bars, fmt="%.3f", fontsize=7, padding=1)
        ax.set_xticks(x, cols)
        ax.set_ylim(0, 1.1)
        ax.set_ylabel("recall")
        ax.set_title("Offline recall on held-out users")
        ax.legend(loc="lower right", frameon=False)
        return _save(fig, path)


def ab_panels(report, names: Sequence[str], path: Path) -> Path:
    """One small panel per online metric, A vs B, p-value in the title."""
    items = list(report.metrics.items())
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(1, len(items), figsize=(2.0 * len(items), 2.8))
        for ax, (metric, r) in zip(np.atleast_1d(axes), items):
            ax.bar([0, 1], [r.a, r.b], color=COLORS[:2], width=0.6)
            ax.set_xticks([0, 1], list(names))
            mark = " *" if r.significant else ""
            ax.set_title(f"{metric}\np={r.p:.3f}{mark}", fontsize=8)
            ax.tick_params(axis="x", labelrotation=20)
        fig.suptitle(f"A/B simulation ({report.config.resamples} user resamples)", fontsize=9)
        return _save(fig, path)


def loss_curve(losses: Sequence[float], path: Path) -> Path:
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3))
        ax.plot(np.arange(len(losses)), losses, color=COLORS[0], lw=1.2)
        ax.set_xlabel("iteration")
        ax.set_ylabel("mean softmax loss")
        ax.set_title("Training loss")
        return _save(fig, path)


def importance_bars(names: Sequence[str], values: Sequence[float], path: Path,
                    epsilon: float | None = None) -> Path:
    order = np.argsort(-np.asarray(values, dtype=float), kind="stable")
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 0.22 * len(names) + 1))
        y = np.arange(len(names))
        ax.barh(y, np.asarray(values)[order], color=COLORS[0])
        ax.set_yticks(y, [names[i] for i in order])
        ax.invert_yaxis()
        if epsilon is not None:
            ax.axvline(epsilon, color=COLORS[3], lw=0.8, ls="--")
        ax.set_xlabel("R@1 drop when permuted")
        ax.set_title("Permutation importance")
        return _save(fig, path)
