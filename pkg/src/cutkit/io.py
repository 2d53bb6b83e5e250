"""Edge-list text format.

One edge per line: two whitespace-separated tokens for an unweighted edge
or three for a weighted one, with 0-based vertex ids. Lines starting with
'#' are comments. The vertex count is 1 + the largest id seen unless a
header line ``n <count>`` appears before any edge.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import EdgeListFormatError
from .graph import Multigraph, WeightedGraph, build_multigraph, build_weighted_graph


def parse_edge_list(text: str) -> Multigraph | WeightedGraph:
    """Parse edge-list text into a multigraph or weighted graph.

    All edge lines must agree on token count; mixing weighted and
    unweighted lines raises EdgeListFormatError.
    """
    header_count: int | None = None
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    token_width: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n" and not edges and header_count is None:
            if len(tokens) != 2:
                raise EdgeListFormatError(f"line {lineno}: header must be 'n <count>'")
            try:
                header_count = int(tokens[1])
            except ValueError:
                raise EdgeListFormatError(f"line {lineno}: bad vertex count {tokens[1]!r}") from None
            if header_count < 0:
                raise EdgeListFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(tokens) not in (2, 3):
            raise EdgeListFormatError(f"line {lineno}: expected 2 or 3 tokens, got {len(tokens)}")
        if token_width is None:
            token_width = len(tokens)
        elif token_width != len(tokens):
            raise EdgeListFormatError(f"line {lineno}: mixed weighted and unweighted lines")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: non-integer vertex id") from None
        if len(tokens) == 3:
            try:
                w = float(tokens[2])
            except ValueError:
                raise EdgeListFormatError(f"line {lineno}: non-numeric weight {tokens[2]!r}") from None
            if not w > 0:
                raise EdgeListFormatError(f"line {lineno}: weight must be positive")
            weights.append(w)
        edges.append((u, v))
    if edges:
        if min(min(u, v) for u, v in edges) < 0:
            raise EdgeListFormatError("negative vertex id")
        derived = 1 + max(max(u, v) for u, v in edges)
    else:
        derived = 0
    count = header_count if header_count is not None else derived
    if count < derived:
        raise EdgeListFormatError(f"header count {count} below largest vertex id")
    if token_width == 3:
        return build_weighted_graph(count, edges, weights)
    return build_multigraph(count, edges)


def format_edge_list(graph: Multigraph | WeightedGraph) -> str:
    """Serialise a graph; always writes the header so round trips are exact."""
    lines = [f"n {graph.vertex_count}"]
    if isinstance(graph, WeightedGraph):
        for (u, v), w in zip(graph.edges.tolist(), graph.weights.tolist()):
            lines.append(f"{u} {v} {w!r}")
    else:
        for u, v in graph.edges.tolist():
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Multigraph | WeightedGraph:
    return parse_edge_list(Path(path).read_text())


def write_graph(graph: Multigraph | WeightedGraph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(graph))


def as_unit_weighted(graph: Multigraph) -> WeightedGraph:
    """View a multigraph as a weighted graph with every weight 1.0."""
    weights = np.ones(graph.edge_count, dtype=np.float64)
    return WeightedGraph(graph.vertex_count, graph.edges, weights)
