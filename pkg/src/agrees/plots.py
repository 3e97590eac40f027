"""Figure rendering: staircases, Newton polygons, suite summaries.

Everything draws through the Agg backend straight to files; no display is
assumed.  Figures are best-effort artifacts and never affect verdicts.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .monomial import MonoIdeal2


def _draw_staircase(ax, M: MonoIdeal2, closure: MonoIdeal2 | None = None, title=None):
    if M.is_zero:
        ax.set_title(title or "zero ideal")
        return
    ma, mb = M.max_exponents()
    xmax, ymax = ma + 2, mb + 2
    inside = [
        (i, j)
        for i in range(xmax + 1)
        for j in range(ymax + 1)
        if M.contains((i, j))
    ]
    if inside:
        ax.scatter(*zip(*inside), s=12, c="#bdd7ee", marker="s", label="ideal")
    ax.scatter(*zip(*M.gens), s=42, c="#1f4e79", marker="s", label="generators", zorder=3)
    if closure is not None:
        added = [e for e in closure.gens if e not in set(M.gens)]
        if added:
            ax.scatter(*zip(*added), s=60, c="#c00000", marker="^",
                       label="closure adds", zorder=4)
    if M.is_m_primary():
        verts = M.newton_vertices()  # descending x, ends on both axes
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        ax.plot(xs, ys, c="#2e7d32", lw=1.4, label="Newton boundary")
    ax.set_xlim(-0.5, xmax + 0.5)
    ax.set_ylim(-0.5, ymax + 0.5)
    ax.set_xticks(range(0, xmax + 1, max(1, xmax // 8)))
    ax.set_yticks(range(0, ymax + 1, max(1, ymax // 8)))
    ax.set_aspect("equal")
    ax.grid(True, lw=0.3, alpha=0.5)
    if title:
        ax.set_title(title, fontsize=9)


def save_staircase(M: MonoIdeal2, path: str, closure: MonoIdeal2 | None = None,
                   title: str | None = None) -> str:
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    _draw_staircase(ax, M, closure=closure, title=title)
    ax.legend(loc="upper right", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_suite_summary(report, path: str) -> str:
    """Horizontal pass/fail bars, one per suite entry, timing as bar length."""
    entries = list(report.entries)
    fig, ax = plt.subplots(figsize=(7, 0.45 * len(entries) + 1.2))
    ys = range(len(entries))
    widths = [max(e.elapsed, 1e-3) for e in entries]
    colors = ["#2e7d32" if e.passed else "#c00000" for e in entries]
    ax.barh(list(ys), widths, color=colors)
    ax.set_yticks(list(ys))
    ax.set_yticklabels([e.name for e in entries], fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_xscale("log")
    ax.set_title(f"suite: {report.field_name}, seed {report.seed}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_newton_gallery(ideals, path: str, cols: int = 5) -> str:
    """Grid of staircase panels for (label, MonoIdeal2) pairs."""
    ideals = list(ideals)
    rows = (len(ideals) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(2.4 * cols, 2.4 * rows))
    flat = axes.ravel() if hasattr(axes, "ravel") else [axes]
    for ax in flat[len(ideals):]:
        ax.axis("off")
    for ax, (label, M) in zip(flat, ideals):
        _draw_staircase(ax, M, title=label)
        ax.tick_params(labelsize=6)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path
