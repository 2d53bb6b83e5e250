"""Benchmark harness and rendering for sparsifier scaling runs."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import InvalidSpec
from .generators import generate
from .sparsify import SparsifyConfig, sparsify


@dataclass(frozen=True)
class BenchRow:
    edge_count: int
    vertex_count: int
    repeats: int
    median_seconds: float
    split_seconds: float
    iterate_seconds: float
    finalize_seconds: float
    ratio: float | None
    skeleton_edges: int
    terminal_level: int


def _median(values) -> float:
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[mid]
    return 0.5 * (ordered[mid - 1] + ordered[mid])


def bench_graph_spec(family: str, size: int, density: int) -> str:
    """Spec string for one bench instance; ``size`` is the scaling axis."""
    if family == "gnm":
        return f"gnm:n={max(2, size // density)},m={size}"
    if family in ("cycle", "path", "complete"):
        return f"{family}:n={size}"
    if family == "random-regular":
        return f"random-regular:n={size},d={density}"
    raise InvalidSpec(f"bench does not support family {family!r}")


def run_bench(
    sizes,
    family: str = "gnm",
    density: int = 16,
    epsilon: float = 1.0,
    rho_constant: float = 0.05,
    sampling_constant: float = 0.5,
    seed: int = 0,
    repeats: int = 3,
) -> list[BenchRow]:
    """Time sparsify on generated graphs of the given sizes.

    For gnm the size is the edge count and the graph gets size/density
    vertices; for cycle, path, and complete it is the vertex count; for
    random-regular it is the vertex count with degree ``density``. Each
    run repeats on identical input and seed; medians of the wall time
    and of the trace's per-phase timings are reported, with each row's
    ratio of median wall times against the previous row.
    """
    if repeats < 1:
        raise ValueError("repeats must be positive")
    rows: list[BenchRow] = []
    previous = None
    for size in sizes:
        graph = generate(bench_graph_spec(family, int(size), density), seed=seed)
        config = SparsifyConfig(
            epsilon=epsilon,
            rho_constant=rho_constant,
            sampling_constant=sampling_constant,
            seed=seed,
        )
        times = []
        phases: dict[str, list[float]] = {"split": [], "iterate": [], "finalize": []}
        for _ in range(repeats):
            start = time.perf_counter()
            skeleton, trace = sparsify(graph, config)
            times.append(time.perf_counter() - start)
            for key in phases:
                phases[key].append(trace.timings[key])
        median = _median(times)
        ratio = None if previous is None else median / previous
        rows.append(
            BenchRow(
                edge_count=graph.edge_count,
                vertex_count=graph.vertex_count,
                repeats=repeats,
                median_seconds=median,
                split_seconds=_median(phases["split"]),
                iterate_seconds=_median(phases["iterate"]),
                finalize_seconds=_median(phases["finalize"]),
                ratio=ratio,
                skeleton_edges=skeleton.edge_count,
                terminal_level=trace.terminal_level,
            )
        )
        previous = median
    return rows


def format_table(rows) -> str:
    """Render bench rows as a tab-separated table with a header line."""
    lines = [
        "edges\tvertices\trepeats\tmedian_seconds\tsplit\titerate\tfinalize"
        "\tratio\tskeleton_edges\tterminal_level"
    ]
    for row in rows:
        ratio = "-" if row.ratio is None else f"{row.ratio:.3f}"
        lines.append(
            f"{row.edge_count}\t{row.vertex_count}\t{row.repeats}"
            f"\t{row.median_seconds:.6f}\t{row.split_seconds:.6f}"
            f"\t{row.iterate_seconds:.6f}\t{row.finalize_seconds:.6f}"
            f"\t{ratio}\t{row.skeleton_edges}\t{row.terminal_level}"
        )
    return "\n".join(lines) + "\n"


def render_figure(rows, path) -> None:
    """Write a log-log runtime plot with a slope-one reference line."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    edges = [row.edge_count for row in rows]
    seconds = [row.median_seconds for row in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    ax.loglog(edges, seconds, marker="o", label="median runtime")
    if edges and seconds and seconds[0] > 0:
        reference = [seconds[0] * (m / edges[0]) for m in edges]
        ax.loglog(edges, reference, linestyle="--", color="grey", label="linear reference")
    ax.set_xlabel("edges")
    ax.set_ylabel("seconds")
    ax.set_title("sparsify runtime scaling")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
