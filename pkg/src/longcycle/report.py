"""Figures for sweep reports. Uses the non-interactive Agg backend."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

TAG_ORDER = ("hamiltonian", "long_cycle", "join_structure")
COLORS = {"hamiltonian": "#4c72b0", "long_cycle": "#55a868", "join_structure": "#c44e52"}


def verdict_histogram(report: dict, path: str | Path) -> Path:
    """Grouped bars of verdict counts per vertex count, log-scaled."""
    by_n = report["verdicts_by_n"]
    ns = sorted(by_n, key=int)
    width = 0.8 / len(TAG_ORDER)
    fig, ax = plt.subplots(figsize=(6, 4))
    for i, tag in enumerate(TAG_ORDER):
        xs = [j + (i - 1) * width for j in range(len(ns))]
        ax.bar(xs, [by_n[n].get(tag, 0) for n in ns], width, label=tag, color=COLORS[tag])
    ax.set_xticks(range(len(ns)), ns)
    ax.set_yscale("log")
    ax.set_xlabel("vertices n")
    ax.set_ylabel("2-connected graphs")
    status = "no violations" if report.get("ok") else "VIOLATIONS"
    ax.set_title(f"Verdicts by order ({report['graphs']} graphs, {status})")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
