"""Log-scale figures from benchmark rows."""
from __future__ import annotations

from collections import defaultdict

from .bench import BenchRow

METRICS = {
    "runtime": ("runtime (seconds)", lambda r: r.runtime_nanoseconds / 1e9),
    "calls": ("recursive calls", lambda r: r.recursive_calls),
}


def plot_bench(rows: list[BenchRow], path: str, metric: str = "runtime", title: str | None = None):
    """Plot ``metric`` against vertex count, one series per family and algorithm."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    label, value = METRICS[metric]
    series = defaultdict(list)
    for r in rows:
        if r.completed:
            y = value(r)
            if y and y > 0:
                series[(r.family, r.algorithm)].append((r.vertices, y))
    fig, ax = plt.subplots(figsize=(6, 4))
    markers = "xosd^v<>"
    for k, ((family, alg), pts) in enumerate(sorted(series.items())):
        pts.sort()
        ax.plot(
            [p[0] for p in pts],
            [p[1] for p in pts],
            marker=markers[k % len(markers)],
            linestyle="none",
            label=f"{family} / {alg}",
        )
    ax.set_yscale("log")
    ax.set_xlabel("number of vertices")
    ax.set_ylabel(label)
    if title:
        ax.set_title(title)
    if series:
        ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
