"""Topology generators, the Gray-cycle witness, and spec parsing."""

import pytest

from topocompat import (
    InvalidParameter,
    complete,
    diameter,
    find_embedding,
    gray_code_cycle,
    graph_power,
    hypercube,
    is_bipartite,
    parse_topology_spec,
    ring,
    star,
    verify_embedding,
)
from topocompat.topologies import TopologySpec, canonical_hypercube_dim


class TestHypercube:
    def test_dimension_two_is_four_cycle(self):
        g = hypercube(2)
        assert g.order == 4 and g.num_edges == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_dimension_three(self):
        g = hypercube(3)
        assert g.order == 8 and g.num_edges == 12
        assert all(g.degree(v) == 3 for v in range(8))

    def test_dimension_eight_order(self):
        assert hypercube(8).order == 256

    @pytest.mark.parametrize("s", range(1, 7))
    def test_regularity_order_bipartite_diameter(self, s):
        g = hypercube(s)
        assert g.order == 2**s
        assert g.num_edges == s * 2 ** (s - 1)
        assert all(g.degree(v) == s for v in range(g.order))
        assert is_bipartite(g)
        assert diameter(g) == s

    @pytest.mark.parametrize("s", [0, -1, 21])
    def test_dimension_out_of_range(self, s):
        with pytest.raises(InvalidParameter):
            hypercube(s)


class TestRing:
    def test_triangle(self):
        assert ring(3) == complete(3)

    def test_four_cycle_matches_hypercube_two(self):
        r4, h2 = ring(4), hypercube(2)
        fwd = find_embedding(r4, h2)
        back = find_embedding(h2, r4)
        assert fwd is not None and verify_embedding(r4, h2, fwd)
        assert back is not None and verify_embedding(h2, r4, back)

    def test_order_eight(self):
        g = ring(8)
        assert g.order == 8 and g.num_edges == 8
        assert diameter(g) == 4

    @pytest.mark.parametrize("p", [0, 1, 2])
    def test_too_small(self, p):
        with pytest.raises(InvalidParameter):
            ring(p)


class TestStar:
    def test_order_two_is_single_edge(self):
        g = star(2)
        assert g.order == 2 and g.edges == {(0, 1)}

    def test_center_degree(self):
        g = star(4)
        assert g.degree(0) == 3
        assert all(g.degree(v) == 1 for v in range(1, 4))

    @pytest.mark.parametrize("p", [2, 3, 9, 16])
    def test_is_a_tree(self, p):
        g = star(p)
        assert g.num_edges == p - 1
        assert diameter(g) <= 2
        assert is_bipartite(g)

    def test_too_small(self):
        with pytest.raises(InvalidParameter):
            star(1)


class TestComplete:
    def test_single_vertex(self):
        g = complete(1)
        assert g.order == 1 and g.num_edges == 0

    def test_four_vertices_six_edges(self):
        assert complete(4).num_edges == 6

    def test_saturated_hypercube_power(self):
        assert graph_power(hypercube(3), 3) == complete(8)


class TestGrayCodeCycle:
    def test_two_bits(self):
        assert gray_code_cycle(2) == (0, 1, 3, 2)

    @pytest.mark.parametrize("s", range(2, 11))
    def test_hamiltonian_cycle_of_hypercube(self, s):
        seq = gray_code_cycle(s)
        assert sorted(seq) == list(range(2**s))
        for i, v in enumerate(seq):
            w = seq[(i + 1) % len(seq)]
            assert bin(v ^ w).count("1") == 1

    def test_no_cycle_below_dimension_two(self):
        with pytest.raises(InvalidParameter):
            gray_code_cycle(1)


class TestCanonicalHypercubeDetection:
    @pytest.mark.parametrize("s", range(1, 7))
    def test_detects_generated_hypercubes(self, s):
        assert canonical_hypercube_dim(hypercube(s)) == s

    def test_rejects_other_graphs(self):
        assert canonical_hypercube_dim(ring(4)) is None  # isomorphic, relabeled
        assert canonical_hypercube_dim(ring(8)) is None
        assert canonical_hypercube_dim(complete(4)) is None
        assert canonical_hypercube_dim(star(8)) is None


class TestTopologySpec:
    @pytest.mark.parametrize(
        "text,kind,param",
        [
            ("hypercube:3", "hypercube", 3),
            ("ring:5", "ring", 5),
            ("star:9", "star", 9),
            ("complete:4", "complete", 4),
        ],
    )
    def test_parse_generators(self, text, kind, param):
        spec = parse_topology_spec(text)
        assert spec.kind == kind and spec.parameter == param
        assert str(spec) == text

    def test_parse_file(self, tmp_path):
        from topocompat.edgelist import write_edge_list_path

        path = tmp_path / "g.edges"
        write_edge_list_path(ring(5), path)
        spec = parse_topology_spec(f"file:{path}")
        assert spec.kind == "custom"
        assert spec.build() == ring(5)

    @pytest.mark.parametrize("text", ["hypercube", "ring:", "ring:x", "mesh:3", ":4"])
    def test_parse_errors(self, text):
        with pytest.raises(InvalidParameter):
            parse_topology_spec(text)

    def test_build_generators(self):
        assert TopologySpec("hypercube", 2).build() == hypercube(2)
        assert TopologySpec("complete", 3).build() == complete(3)
