import numpy as np
import pytest

from cutkit import GeneratorSpec, InvalidSpec, families, generate


def degree_sequence(graph):
    deg = np.zeros(graph.vertex_count, dtype=np.int64)
    for u, v in graph.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def assert_simple(graph):
    assert (graph.edges[:, 0] != graph.edges[:, 1]).all()
    keys = {(min(u, v), max(u, v)) for u, v in graph.edges.tolist()}
    assert len(keys) == graph.edge_count


class TestFixedFamilies:
    def test_complete(self):
        g = generate("complete:n=4")
        assert (g.vertex_count, g.edge_count) == (4, 6)
        assert_simple(g)
        assert (degree_sequence(g) == 3).all()

    def test_cycle(self):
        g = generate("cycle:n=8")
        assert (g.vertex_count, g.edge_count) == (8, 8)
        assert (degree_sequence(g) == 2).all()

    def test_path(self):
        g = generate("path:n=5")
        assert (g.vertex_count, g.edge_count) == (5, 4)
        assert sorted(degree_sequence(g).tolist()) == [1, 1, 2, 2, 2]

    def test_barbell(self):
        g = generate("barbell:clique=3,path=2")
        assert (g.vertex_count, g.edge_count) == (8, 9)
        assert_simple(g)

    def test_two_cliques_bridge(self):
        g = generate("two-cliques-bridge:clique=5")
        assert (g.vertex_count, g.edge_count) == (10, 21)
        assert_simple(g)
        # exactly one edge crosses between the halves
        crossing = [(u, v) for u, v in g.edges.tolist() if (u < 5) != (v < 5)]
        assert len(crossing) == 1


class TestRandomFamilies:
    def test_gnm_exact_distinct_count(self):
        g = generate("gnm:n=100,m=500", seed=3)
        assert g.edge_count == 500
        assert_simple(g)

    def test_gnm_dense_regime(self):
        # m above half the possible pairs exercises the permutation path
        g = generate("gnm:n=20,m=150", seed=1)
        assert g.edge_count == 150
        assert_simple(g)

    def test_gnm_over_capacity_rejected(self):
        with pytest.raises(InvalidSpec):
            generate("gnm:n=10,m=46")

    def test_gnp_extremes(self):
        assert generate("gnp:n=12,p=0.0").edge_count == 0
        full = generate("gnp:n=12,p=1.0")
        assert full.edge_count == 66
        assert_simple(full)

    def test_random_regular(self):
        g = generate("random-regular:n=8,d=3", seed=2)
        assert (g.vertex_count, g.edge_count) == (8, 12)
        assert (degree_sequence(g) == 3).all()
        assert_simple(g)

    def test_random_regular_moderate_degree(self):
        # raw pairing almost never lands simple at this degree; the
        # repair path has to do the work
        g = generate("random-regular:n=64,d=16", seed=5)
        assert (g.vertex_count, g.edge_count) == (64, 512)
        assert (degree_sequence(g) == 16).all()
        assert_simple(g)

    def test_random_regular_parity_rejected(self):
        with pytest.raises(InvalidSpec):
            generate("random-regular:n=5,d=3")

    def test_random_regular_degree_too_high(self):
        with pytest.raises(InvalidSpec):
            generate("random-regular:n=4,d=4")

    def test_determinism(self):
        for spec in ("gnp:n=20,p=0.4", "gnm:n=30,m=100", "random-regular:n=10,d=4"):
            a = generate(spec, seed=11)
            b = generate(spec, seed=11)
            assert np.array_equal(a.edges, b.edges)

    def test_seed_matters(self):
        a = generate("gnm:n=40,m=200", seed=0)
        b = generate("gnm:n=40,m=200", seed=1)
        assert not np.array_equal(a.edges, b.edges)

    def test_all_families_emit_simple_graphs(self):
        specs = {
            "gnp": "gnp:n=15,p=0.5",
            "gnm": "gnm:n=15,m=40",
            "cycle": "cycle:n=6",
            "path": "path:n=6",
            "complete": "complete:n=6",
            "barbell": "barbell:clique=4,path=3",
            "two-cliques-bridge": "two-cliques-bridge:clique=4",
            "random-regular": "random-regular:n=12,d=5",
        }
        assert set(specs) == set(families())
        for spec in specs.values():
            assert_simple(generate(spec, seed=8))


class TestSpecParsing:
    def test_family_and_params_split(self):
        spec = GeneratorSpec.parse("cycle:n=3")
        assert spec.family == "cycle"
        assert spec.params == {"n": 3}

    def test_float_and_int_values(self):
        spec = GeneratorSpec.parse("gnp:n=10,p=0.25")
        assert spec.params == {"n": 10, "p": 0.25}
        assert isinstance(spec.params["n"], int)

    def test_malformed(self):
        for text in ("", ":", "gnp:", "gnp:n", "gnp:n=", "gnp:n=x", "gnp:=3"):
            with pytest.raises(InvalidSpec):
                generate(text)

    def test_unknown_family(self):
        with pytest.raises(InvalidSpec):
            generate("torus:n=5")

    def test_unknown_parameter(self):
        with pytest.raises(InvalidSpec):
            generate("cycle:n=5,q=2")

    def test_missing_required_parameter(self):
        with pytest.raises(InvalidSpec):
            generate("gnm:n=5")

    def test_out_of_range_values(self):
        with pytest.raises(InvalidSpec):
            generate("gnp:n=5,p=1.5")
        with pytest.raises(InvalidSpec):
            generate("cycle:n=2")
        with pytest.raises(InvalidSpec):
            generate("path:n=1")
