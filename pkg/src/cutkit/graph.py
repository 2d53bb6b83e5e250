"""Immutable graph values: multigraphs, weighted graphs, cuts, partitions.

Every value here is frozen after construction and safe to share between
threads; operations never mutate their inputs and always return fresh
values. Edge identity is positional: edge ``e`` is row ``e`` of the edge
array, so parallel edges are distinct and survive round trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import EndpointOutOfRange, SelfLoop, SizeMismatch


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _edge_array(edges) -> np.ndarray:
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be a sequence of (u, v) pairs")
    return arr


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Unweighted undirected multigraph.

    Attributes:
        vertex_count: number of vertices, ids 0..vertex_count-1.
        edges: (m, 2) integer array; row e holds the endpoints of edge e.

    Construct through :func:`build_multigraph` to get input validation;
    the raw constructor trusts its arguments.
    """

    vertex_count: int
    edges: np.ndarray

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbour, edge_id), in edge-id order.

        Built lazily on first use and cached; with frozen edge data the
        cache can never go stale.
        """
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        us = self.edges[:, 0].tolist()
        vs = self.edges[:, 1].tolist()
        for eid in range(len(us)):
            u = us[eid]
            v = vs[eid]
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return adj


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Undirected graph with a positive real weight per edge.

    ``edges`` is an (m, 2) integer array and ``weights`` the matching
    (m,) float array. Parallel edges are allowed and keep their identity.
    """

    vertex_count: int
    edges: np.ndarray
    weights: np.ndarray

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def total_weight(self) -> float:
        return float(self.weights.sum()) if len(self.weights) else 0.0


@dataclass(frozen=True, eq=False)
class Cut:
    """A bipartition of the vertex set, as a boolean side per vertex."""

    side: np.ndarray

    def __post_init__(self):
        side = np.asarray(self.side, dtype=bool)
        if side.ndim != 1:
            raise ValueError("cut side assignment must be one-dimensional")
        if side.all() or not side.any():
            raise ValueError("a cut needs at least one vertex on each side")
        object.__setattr__(self, "side", _frozen(side))

    @classmethod
    def from_vertices(cls, vertex_count: int, true_side) -> "Cut":
        side = np.zeros(vertex_count, dtype=bool)
        side[list(true_side)] = True
        return cls(side)

    def true_side(self) -> list[int]:
        return np.flatnonzero(self.side).tolist()


@dataclass(frozen=True, eq=False)
class VertexPartition:
    """Assignment of each vertex to a block, blocks labelled 0..count-1."""

    block_id: np.ndarray
    block_count: int

    def __post_init__(self):
        labels = np.asarray(self.block_id, dtype=np.int64)
        if labels.size:
            used = np.bincount(labels, minlength=self.block_count)
            if labels.min() < 0 or labels.max() >= self.block_count or (used == 0).any():
                raise ValueError("block labels must cover 0..block_count-1")
        elif self.block_count != 0:
            raise ValueError("empty partition must have zero blocks")
        object.__setattr__(self, "block_id", _frozen(labels))


def build_multigraph(vertex_count: int, edges) -> Multigraph:
    """Validate endpoints and return a new multigraph.

    Raises EndpointOutOfRange for an endpoint outside 0..vertex_count-1
    and SelfLoop for an edge joining a vertex to itself.
    """
    if vertex_count < 0:
        raise ValueError("vertex_count must be non-negative")
    arr = _edge_array(edges)
    if arr.size:
        if arr.min() < 0 or arr.max() >= vertex_count:
            bad = int(np.flatnonzero((arr < 0).any(axis=1) | (arr >= vertex_count).any(axis=1))[0])
            raise EndpointOutOfRange(f"edge {bad} has an endpoint outside 0..{vertex_count - 1}")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            raise SelfLoop(f"edge {int(np.flatnonzero(loops)[0])} is a self-loop")
    return Multigraph(vertex_count, _frozen(arr.copy()))


def build_weighted_graph(vertex_count: int, edges, weights) -> WeightedGraph:
    """Validate endpoints and positive weights, return a weighted graph."""
    if vertex_count < 0:
        raise ValueError("vertex_count must be non-negative")
    arr = _edge_array(edges)
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or len(w) != len(arr):
        raise SizeMismatch("one weight per edge required")
    if arr.size:
        if arr.min() < 0 or arr.max() >= vertex_count:
            raise EndpointOutOfRange(f"endpoint outside 0..{vertex_count - 1}")
        if (arr[:, 0] == arr[:, 1]).any():
            raise SelfLoop("self-loops are not supported")
        if not (w > 0).all():
            raise ValueError("edge weights must be positive")
    return WeightedGraph(vertex_count, _frozen(arr.copy()), _frozen(w.copy()))


def cut_weight(graph: Multigraph | WeightedGraph, cut: Cut) -> float:
    """Total weight of edges crossing the cut (count for multigraphs)."""
    if len(cut.side) != graph.vertex_count:
        raise SizeMismatch(
            f"cut over {len(cut.side)} vertices applied to graph with {graph.vertex_count}"
        )
    if graph.edge_count == 0:
        return 0.0
    crossing = cut.side[graph.edges[:, 0]] != cut.side[graph.edges[:, 1]]
    if isinstance(graph, WeightedGraph):
        return float(graph.weights[crossing].sum())
    return float(np.count_nonzero(crossing))


class _UnionFind:
    __slots__ = ["parent"]

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # attach the higher root so block discovery order follows vertex ids
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def connected_components(graph: Multigraph) -> VertexPartition:
    """Partition vertices into connected components.

    Blocks are numbered in order of their lowest vertex id, so the result
    is deterministic for a given edge list.
    """
    n = graph.vertex_count
    uf = _UnionFind(n)
    for u, v in graph.edges.tolist():
        uf.union(u, v)
    labels = np.empty(n, dtype=np.int64)
    block_of_root: dict[int, int] = {}
    for v in range(n):
        root = uf.find(v)
        block = block_of_root.get(root)
        if block is None:
            block = len(block_of_root)
            block_of_root[root] = block
        labels[v] = block
    return VertexPartition(labels, len(block_of_root))


def contract(graph: Multigraph, partition: VertexPartition) -> tuple[Multigraph, np.ndarray]:
    """Merge each partition block into a single vertex.

    Edges inside a block become self-loops and are dropped silently;
    surviving edges keep their relative order. Returns the contracted
    graph and an edge map where entry e is the new id of edge e, or -1
    if the edge was dropped.
    """
    if len(partition.block_id) != graph.vertex_count:
        raise SizeMismatch("partition size does not match vertex count")
    m = graph.edge_count
    edge_map = np.full(m, -1, dtype=np.int64)
    if m == 0:
        return Multigraph(partition.block_count, _frozen(np.empty((0, 2), dtype=np.int64))), edge_map
    block = partition.block_id
    bu = block[graph.edges[:, 0]]
    bv = block[graph.edges[:, 1]]
    keep = bu != bv
    new_edges = np.column_stack([bu[keep], bv[keep]])
    edge_map[keep] = np.arange(int(keep.sum()), dtype=np.int64)
    return Multigraph(partition.block_count, _frozen(new_edges)), edge_map
