"""Verification oracles: exhaustive/sampled cut comparison and unit max-flow.

These exist to check the sparsifier, so they favour being obviously
correct over being clever; the only optimisation is vectorising the cut
sweep, which tests cross-check against the plain per-cut computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections import deque
from typing import Iterator

import numpy as np

from .errors import (
    EdgeOutOfRange,
    EndpointOutOfRange,
    SameVertex,
    SizeMismatch,
    TooFewVertices,
    TooManyVertices,
)
from .graph import Cut, Multigraph, WeightedGraph

ENUMERATION_LIMIT = 24
_CHUNK = 1 << 18


@dataclass(frozen=True, eq=False)
class CutErrorReport:
    """Worst relative cut disagreement found between two graphs."""

    max_relative_error: float
    argmax_cut: Cut | None
    cuts_examined: int
    mode: str
    zero_weight_skipped: int = 0

    def to_dict(self) -> dict:
        side = self.argmax_cut.true_side() if self.argmax_cut is not None else None
        return {
            "schema_version": 1,
            "mode": self.mode,
            "max_relative_error": self.max_relative_error,
            "argmax_side": side,
            "cuts_examined": self.cuts_examined,
            "zero_weight_skipped": self.zero_weight_skipped,
        }


def enumerate_cuts(vertex_count: int) -> Iterator[Cut]:
    """Yield every nontrivial bipartition exactly once.

    Vertex 0 is pinned to the False side so each bipartition appears under
    exactly one assignment; 2^(n-1) - 1 cuts in total.
    """
    if vertex_count < 2:
        raise TooFewVertices("cut enumeration needs at least two vertices")
    if vertex_count > ENUMERATION_LIMIT:
        raise TooManyVertices(f"cut enumeration is capped at {ENUMERATION_LIMIT} vertices")
    for mask in range(1, 1 << (vertex_count - 1)):
        side = np.zeros(vertex_count, dtype=bool)
        for v in range(1, vertex_count):
            if (mask >> (v - 1)) & 1:
                side[v] = True
        yield Cut(side)


def _cut_from_mask(vertex_count: int, mask: int) -> Cut:
    side = np.zeros(vertex_count, dtype=bool)
    for v in range(1, vertex_count):
        side[v] = bool((mask >> (v - 1)) & 1)
    return Cut(side)


def _pairs_and_weights(graph: Multigraph | WeightedGraph) -> tuple[np.ndarray, np.ndarray]:
    # collapse parallel edges; cut weight is additive over them
    if graph.edge_count == 0:
        return np.empty((0, 2), dtype=np.int64), np.empty(0, dtype=np.float64)
    lo = np.minimum(graph.edges[:, 0], graph.edges[:, 1])
    hi = np.maximum(graph.edges[:, 0], graph.edges[:, 1])
    if isinstance(graph, WeightedGraph):
        w = graph.weights
    else:
        w = np.ones(graph.edge_count, dtype=np.float64)
    keys = lo * graph.vertex_count + hi
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    w = w[order]
    unique_keys, starts = np.unique(keys, return_index=True)
    sums = np.add.reduceat(w, starts)
    pairs = np.column_stack([unique_keys // graph.vertex_count, unique_keys % graph.vertex_count])
    return pairs, sums


def _mask_cut_weights(masks: np.ndarray, pairs: np.ndarray, weights: np.ndarray) -> np.ndarray:
    total = np.zeros(len(masks), dtype=np.float64)
    for (u, v), w in zip(pairs.tolist(), weights.tolist()):
        if u == 0:
            crossing = (masks >> (v - 1)) & 1
        else:
            crossing = ((masks >> (u - 1)) ^ (masks >> (v - 1))) & 1
        total += w * crossing
    return total


def _side_cut_weights(sides: np.ndarray, pairs: np.ndarray, weights: np.ndarray) -> np.ndarray:
    total = np.zeros(len(sides), dtype=np.float64)
    for (u, v), w in zip(pairs.tolist(), weights.tolist()):
        total += w * (sides[:, u] ^ sides[:, v])
    return total


def max_relative_cut_error(
    g: Multigraph | WeightedGraph,
    h: Multigraph | WeightedGraph,
    mode: str = "exact",
    sample_count: int = 1000,
    rng: np.random.Generator | None = None,
) -> CutErrorReport:
    """Worst |w_h(C) - w_g(C)| / w_g(C) over cuts of the shared vertex set.

    Exact mode sweeps every nontrivial bipartition (vertex count capped at
    24); sampled mode draws uniform random bipartitions. Cuts with zero
    weight in ``g`` are skipped for the maximum but still counted.
    """
    if g.vertex_count != h.vertex_count:
        raise SizeMismatch("graphs must share a vertex set")
    n = g.vertex_count
    if n < 2:
        raise TooFewVertices("cut comparison needs at least two vertices")
    g_pairs, g_weights = _pairs_and_weights(g)
    h_pairs, h_weights = _pairs_and_weights(h)
    best_err = -1.0
    best_mask: int | None = None
    best_side: np.ndarray | None = None
    skipped = 0
    if mode == "exact":
        if n > ENUMERATION_LIMIT:
            raise TooManyVertices(f"exact mode is capped at {ENUMERATION_LIMIT} vertices")
        total = (1 << (n - 1)) - 1
        examined = total
        for start in range(1, total + 1, _CHUNK):
            masks = np.arange(start, min(start + _CHUNK, total + 1), dtype=np.uint32)
            wg = _mask_cut_weights(masks, g_pairs, g_weights)
            wh = _mask_cut_weights(masks, h_pairs, h_weights)
            nonzero = wg > 0
            skipped += int(len(masks) - nonzero.sum())
            if not nonzero.any():
                continue
            err = np.abs(wh[nonzero] - wg[nonzero]) / wg[nonzero]
            pos = int(np.argmax(err))
            if float(err[pos]) > best_err:
                best_err = float(err[pos])
                best_mask = int(masks[nonzero][pos])
        argmax = _cut_from_mask(n, best_mask) if best_mask is not None else None
    elif mode == "sampled":
        if sample_count < 1:
            raise ValueError("sample_count must be positive")
        if rng is None:
            rng = np.random.default_rng(0)
        examined = 0
        while examined < sample_count:
            want = min(sample_count - examined, 4096)
            sides = rng.integers(0, 2, size=(want, n), dtype=np.uint8).astype(bool)
            sides[:, 0] = False
            valid = sides.any(axis=1)
            sides = sides[valid]
            if len(sides) == 0:
                continue
            examined += len(sides)
            wg = _side_cut_weights(sides, g_pairs, g_weights)
            wh = _side_cut_weights(sides, h_pairs, h_weights)
            nonzero = wg > 0
            skipped += int(len(sides) - nonzero.sum())
            if not nonzero.any():
                continue
            err = np.abs(wh[nonzero] - wg[nonzero]) / wg[nonzero]
            pos = int(np.argmax(err))
            if float(err[pos]) > best_err:
                best_err = float(err[pos])
                best_side = sides[nonzero][pos].copy()
        argmax = Cut(best_side) if best_side is not None else None
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return CutErrorReport(
        max_relative_error=best_err if best_err >= 0 else 0.0,
        argmax_cut=argmax,
        cuts_examined=examined,
        mode=mode,
        zero_weight_skipped=skipped,
    )


def max_flow_unit(graph: Multigraph, s: int, t: int, cap: int | None = None) -> int:
    """Max s-t flow with every edge at capacity one, parallel edges counted.

    Shortest-augmenting-path search; each augmentation moves one unit, so
    passing ``cap`` stops early once that many units are routed and the
    result is min(true flow, cap).
    """
    n = graph.vertex_count
    if not 0 <= s < n or not 0 <= t < n:
        raise EndpointOutOfRange(f"flow endpoints ({s}, {t}) must lie in 0..{n - 1}")
    if s == t:
        raise SameVertex(f"flow endpoints must differ, got {s}")
    if cap is None:
        cap = graph.edge_count
    if cap <= 0:
        return 0
    # one arc per direction per edge; the paired arc doubles as its residual
    head: list[int] = []
    capacity: list[int] = []
    out: list[list[int]] = [[] for _ in range(n)]
    for u, v in graph.edges.tolist():
        out[u].append(len(head))
        head.append(v)
        capacity.append(1)
        out[v].append(len(head))
        head.append(u)
        capacity.append(1)
    flow = 0
    parent_arc = [-1] * n
    while flow < cap:
        for i in range(n):
            parent_arc[i] = -1
        parent_arc[s] = -2
        queue = deque([s])
        reached = False
        while queue:
            x = queue.popleft()
            if x == t:
                reached = True
                break
            for arc in out[x]:
                y = head[arc]
                if parent_arc[y] == -1 and capacity[arc] > 0:
                    parent_arc[y] = arc
                    queue.append(y)
        if not reached:
            break
        x = t
        while x != s:
            arc = parent_arc[x]
            capacity[arc] -= 1
            capacity[arc ^ 1] += 1
            x = head[arc ^ 1]
        flow += 1
    return flow


def is_k_heavy(graph: Multigraph, edge: int, k: float) -> bool:
    """Whether the endpoints of the given edge have max-flow at least k."""
    if not 0 <= edge < graph.edge_count:
        raise EdgeOutOfRange(f"edge {edge} outside 0..{graph.edge_count - 1}")
    u, v = (int(x) for x in graph.edges[edge])
    needed = max(int(math.ceil(k)), 0)
    if needed == 0:
        return True
    return max_flow_unit(graph, u, v, cap=needed) >= k
