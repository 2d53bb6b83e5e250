import numpy as np
import pytest

from cutkit import (
    Cut,
    EndpointOutOfRange,
    Multigraph,
    SelfLoop,
    SizeMismatch,
    VertexPartition,
    WeightedGraph,
    build_multigraph,
    build_weighted_graph,
    connected_components,
    contract,
    cut_weight,
)
from helpers import brute_cut_weight, random_multigraph


def triangle():
    return build_multigraph(3, [(0, 1), (1, 2), (2, 0)])


def k4():
    return build_multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


class TestBuild:
    def test_triangle(self):
        g = triangle()
        assert g.vertex_count == 3
        assert g.edge_count == 3

    def test_parallel_edges_retained(self):
        g = build_multigraph(2, [(0, 1), (0, 1)])
        assert g.edge_count == 2
        assert g.edges.tolist() == [[0, 1], [0, 1]]

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoop):
            build_multigraph(2, [(0, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(EndpointOutOfRange):
            build_multigraph(3, [(0, 3)])
        with pytest.raises(EndpointOutOfRange):
            build_multigraph(3, [(-1, 2)])

    def test_empty_graph(self):
        g = build_multigraph(5, [])
        assert g.edge_count == 0
        assert g.edges.shape == (0, 2)

    def test_edges_are_immutable(self):
        g = triangle()
        with pytest.raises(ValueError):
            g.edges[0, 0] = 9

    def test_weighted_builder_validates(self):
        g = build_weighted_graph(2, [(0, 1)], [1.5])
        assert g.total_weight() == 1.5
        with pytest.raises(SizeMismatch):
            build_weighted_graph(2, [(0, 1)], [1.0, 2.0])
        with pytest.raises(ValueError):
            build_weighted_graph(2, [(0, 1)], [0.0])

    def test_adjacency_lists_edge_ids_in_order(self):
        g = build_multigraph(3, [(0, 1), (0, 2), (0, 1)])
        assert g.adjacency[0] == [(1, 0), (2, 1), (1, 2)]
        assert g.adjacency[1] == [(0, 0), (0, 2)]


class TestCut:
    def test_from_vertices(self):
        cut = Cut.from_vertices(4, [1, 3])
        assert cut.true_side() == [1, 3]

    def test_sides_must_be_nonempty(self):
        with pytest.raises(ValueError):
            Cut(np.zeros(3, dtype=bool))
        with pytest.raises(ValueError):
            Cut(np.ones(3, dtype=bool))

    def test_triangle_single_vertex_cut(self):
        assert cut_weight(triangle(), Cut.from_vertices(3, [0])) == 2.0

    def test_weighted_single_edge(self):
        g = build_weighted_graph(2, [(0, 1)], [1.5])
        assert cut_weight(g, Cut.from_vertices(2, [0])) == 1.5

    def test_k4_single_vertex_cuts(self):
        g = k4()
        for v in range(4):
            assert cut_weight(g, Cut.from_vertices(4, [v])) == 3.0

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            cut_weight(triangle(), Cut.from_vertices(4, [0]))

    def test_flip_symmetry_and_brute_force_agreement(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            g = random_multigraph(rng, max_n=10)
            side = rng.integers(0, 2, size=g.vertex_count).astype(bool)
            if side.all() or not side.any():
                side[0] = not side[0]
            cut = Cut(side.copy())
            flipped = Cut(~side)
            assert cut_weight(g, cut) == cut_weight(g, flipped)
            assert cut_weight(g, cut) == brute_cut_weight(g, side.tolist())


class TestComponents:
    def test_triangle_one_block(self):
        part = connected_components(triangle())
        assert part.block_count == 1

    def test_single_edge_three_blocks(self):
        part = connected_components(build_multigraph(4, [(0, 1)]))
        assert part.block_count == 3

    def test_empty_graph_all_singletons(self):
        part = connected_components(build_multigraph(5, []))
        assert part.block_count == 5
        assert part.block_id.tolist() == [0, 1, 2, 3, 4]

    def test_blocks_numbered_by_lowest_vertex(self):
        part = connected_components(build_multigraph(5, [(3, 4), (1, 2)]))
        assert part.block_id.tolist() == [0, 1, 1, 2, 2]


class TestContract:
    def test_merge_two_triangle_vertices(self):
        merged, edge_map = contract(triangle(), VertexPartition(np.array([0, 0, 1]), 2))
        assert merged.vertex_count == 2
        assert merged.edge_count == 2
        assert merged.edges.tolist() == [[0, 1], [1, 0]]
        assert edge_map.tolist() == [-1, 0, 1]

    def test_identity_partition(self):
        g = k4()
        merged, edge_map = contract(g, VertexPartition(np.arange(4), 4))
        assert merged.edges.tolist() == g.edges.tolist()
        assert edge_map.tolist() == [0, 1, 2, 3, 4, 5]

    def test_collapse_everything(self):
        merged, edge_map = contract(k4(), VertexPartition(np.zeros(4, dtype=np.int64), 1))
        assert merged.vertex_count == 1
        assert merged.edge_count == 0
        assert (edge_map == -1).all()

    def test_partition_size_checked(self):
        with pytest.raises(SizeMismatch):
            contract(triangle(), VertexPartition(np.array([0, 1]), 2))

    def test_cut_weights_survive_contraction(self):
        # a cut of the contracted graph equals the lifted cut of the original
        rng = np.random.default_rng(11)
        for _ in range(20):
            g = random_multigraph(rng, max_n=8)
            n = g.vertex_count
            labels = rng.integers(0, max(1, n - 1), size=n)
            relabel = {old: new for new, old in enumerate(sorted(set(labels.tolist())))}
            block_id = np.array([relabel[x] for x in labels.tolist()])
            part = VertexPartition(block_id, len(relabel))
            merged, _ = contract(g, part)
            if merged.vertex_count < 2:
                continue
            for mask in range(1, 1 << (merged.vertex_count - 1)):
                side = np.array(
                    [False] + [bool(mask >> b & 1) for b in range(merged.vertex_count - 1)]
                )
                lifted = side[block_id]
                if lifted.all() or not lifted.any():
                    continue
                assert cut_weight(merged, Cut(side)) == cut_weight(g, Cut(lifted))


class TestPartitionValidation:
    def test_labels_must_cover_range(self):
        with pytest.raises(ValueError):
            VertexPartition(np.array([0, 2]), 3)
        with pytest.raises(ValueError):
            VertexPartition(np.array([0, 0]), 2)
