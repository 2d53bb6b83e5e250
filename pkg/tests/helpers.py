"""Independent oracles shared by the test modules.

Everything here is written against the documented behavior, not the
package internals: plain-Python union-find, brute-force cut sweeps, and
a from-scratch validity checker for forest labelings. Slower than the
library on purpose.
"""

import numpy as np

from cutkit import Multigraph, build_multigraph


class SimpleUnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            return True
        return False


def assert_valid_labeling(graph, labeling):
    """Check the two defining properties of a forest decomposition.

    Each forest must be acyclic, and each forest must span the residual:
    any edge with a higher index connects two vertices that the forest
    already joins (otherwise the forest was not maximal).
    """
    n = graph.vertex_count
    labels = labeling.forest_index.tolist()
    edges = graph.edges.tolist()
    assert len(labels) == graph.edge_count
    assert all(lab >= 1 for lab in labels)
    if graph.edge_count:
        assert labeling.max_index == max(labels)
    else:
        assert labeling.max_index == 0
    for j in range(1, labeling.max_index + 1):
        uf = SimpleUnionFind(n)
        for (u, v), lab in zip(edges, labels):
            if lab == j:
                assert uf.union(u, v), f"forest {j} has a cycle"
        for (u, v), lab in zip(edges, labels):
            if lab > j:
                assert uf.find(u) == uf.find(v), (
                    f"edge ({u},{v}) with index {lab} not spanned by forest {j}"
                )


def forest_connectivity(graph, labeling, u, v):
    """Largest j with u, v connected inside every one of the first j forests."""
    edges = graph.edges.tolist()
    labels = labeling.forest_index.tolist()
    best = 0
    for j in range(1, labeling.max_index + 1):
        uf = SimpleUnionFind(graph.vertex_count)
        for (a, b), lab in zip(edges, labels):
            if lab == j:
                uf.union(a, b)
        if uf.find(u) != uf.find(v):
            break
        best = j
    return best


def per_forest_connected(graph, labeling, u, v):
    """Connectivity of (u, v) inside each single forest, as a list of bools."""
    edges = graph.edges.tolist()
    labels = labeling.forest_index.tolist()
    out = []
    for j in range(1, labeling.max_index + 1):
        uf = SimpleUnionFind(graph.vertex_count)
        for (a, b), lab in zip(edges, labels):
            if lab == j:
                uf.union(a, b)
        out.append(uf.find(u) == uf.find(v))
    return out


def brute_cut_weight(graph, side):
    """Cut weight from a boolean side list, summed edge by edge."""
    weights = getattr(graph, "weights", None)
    total = 0.0
    for eid, (u, v) in enumerate(graph.edges.tolist()):
        if side[u] != side[v]:
            total += 1.0 if weights is None else float(weights[eid])
    return total


def all_sides(n):
    """Every nontrivial bipartition of 0..n-1, vertex 0 pinned to False."""
    for mask in range(1, 1 << (n - 1)):
        yield [False] + [bool(mask >> b & 1) for b in range(n - 1)]


def brute_min_cut_between(graph, s, t):
    """Smallest cut weight over bipartitions separating s from t."""
    best = None
    for side in all_sides(graph.vertex_count):
        if side[s] == side[t]:
            continue
        w = brute_cut_weight(graph, side)
        if best is None or w < best:
            best = w
    return best


def brute_max_error(g, h):
    """Worst relative cut disagreement, skipping zero-weight cuts in g."""
    worst = 0.0
    for side in all_sides(g.vertex_count):
        wg = brute_cut_weight(g, side)
        if wg == 0.0:
            continue
        worst = max(worst, abs(brute_cut_weight(h, side) - wg) / wg)
    return worst


def random_multigraph(rng, max_n=32, parallel=True):
    """Random test graph: gnp base plus optional duplicated parallel edges."""
    n = int(rng.integers(2, max_n + 1))
    p = float(rng.uniform(0.1, 0.8))
    rows = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows.append((u, v))
    if parallel and rows:
        extra = rng.integers(0, len(rows), size=int(rng.integers(0, 1 + len(rows) // 3)))
        rows.extend(rows[i] for i in extra.tolist())
    if not rows:
        rows = [(0, 1)]
    return build_multigraph(n, rows)


def subgraph(graph, edge_ids):
    """Multigraph on the same vertices restricted to the given edge ids."""
    return Multigraph(graph.vertex_count, graph.edges[np.asarray(edge_ids, dtype=np.int64)])
