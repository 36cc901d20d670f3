"""
Matplotlib figures for sweep reports and juggling diagrams.
"""

from __future__ import annotations

from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .diagram import diagram_arcs  # noqa: E402

# stable SVG ids and no timestamps, so reruns give identical files
matplotlib.rcParams["svg.hashsalt"] = "ocycles"
_METADATA = {"svg": {"Date": None, "Creator": None}, "png": {"Software": None},
             "pdf": {"CreationDate": None, "Creator": None, "Producer": None}}


def _save(fig, path):
    fmt = str(path).rsplit(".", 1)[-1].lower()
    fig.savefig(path, metadata=_METADATA.get(fmt), bbox_inches="tight")
    plt.close(fig)


def plot_sweep(results, path, title=None):
    """
    One panel per extra parameter value; each (n, s) cell is marked by
    observed feasibility, with predicted-infeasible cells outlined.

    Filled green circle: ocycle found. Red cross: none. Black ring:
    the gcd criterion predicts no ocycle. Grey square: not asserted.
    """
    panels = defaultdict(list)
    for r in results:
        key = ", ".join(f"{k}={v}" for k, v in sorted(r.params.items()) if k in ("b", "h", "k", "kind"))
        panels[key or r.family].append(r)
    keys = sorted(panels)
    ncols = min(3, len(keys)) or 1
    nrows = -(-len(keys) // ncols) or 1
    fig, axes = plt.subplots(nrows, ncols, figsize=(3.6 * ncols, 3.2 * nrows), squeeze=False)
    for ax in axes.flat[len(keys):]:
        ax.set_visible(False)
    for ax, key in zip(axes.flat, keys):
        rows = panels[key]
        for r in rows:
            if r.category != "theorem":
                ax.scatter(r.n, r.s, marker="s", s=110, color="0.85", zorder=1)
            ax.scatter(r.n, r.s, marker="o" if r.observed else "x", s=40,
                       color="tab:green" if r.observed else "tab:red", zorder=2)
            if r.predicted is False:
                ax.scatter(r.n, r.s, marker="o", s=140, facecolors="none", edgecolors="k", zorder=3)
        ns = sorted({r.n for r in rows})
        ax.set_xticks(ns)
        ax.set_yticks(range(1, max(ns)))
        ax.set_xlabel("n")
        ax.set_ylabel("s")
        ax.set_title(key, fontsize=10)
        ax.grid(alpha=0.3)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    _save(fig, path)


def plot_juggling_diagram(t, periods, path):
    arcs = diagram_arcs(t, periods)
    beats = periods * len(t)
    fig, ax = plt.subplots(figsize=(max(4, 0.7 * beats), 2.5))
    for a in arcs:
        end = min(a.end, beats - 0.6) if a.clipped else a.end
        xs = [a.start + (a.end - a.start) * u / 40 for u in range(41)]
        pts = [(x, (x - a.start) * (a.end - x) / 2) for x in xs if x <= end]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], color="k", lw=1.2)
    ax.scatter(range(beats), [0] * beats, s=30, facecolors="white", edgecolors="k", zorder=3)
    for i in range(beats):
        ax.text(i, -0.6, str(t[i % len(t)]), ha="center", va="top")
    ax.set_xlim(-0.6, beats - 0.4)
    ax.set_ylim(-1.4, max([1] + [(a.end - a.start) ** 2 / 8 for a in arcs]) + 0.5)
    ax.axis("off")
    _save(fig, path)
