"""Graph core: index values, bipartiteness, degree bookkeeping, I/O formats."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import DEFAULT_SEED, graphs, random_graph
from zex import (
    FamilyParams,
    Graph,
    GraphFormatError,
    bipartition_of,
    build_family,
    complete_bipartite,
    decode_graph6,
    encode_graph6,
    format_edge_list,
    m1,
    m2,
    min_degree,
    parse_edge_list,
    read_graph_file,
)

P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(3, [(0, 3)])

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = Graph(3, [(1, 2), (0, 1)])
        assert a == b
        assert hash(a) == hash(b)

    def test_immutability_surface(self):
        g = Graph(2, [(0, 1)])
        h = g.with_edges_changed(removed=[(0, 1)])
        assert g.num_edges == 1 and h.num_edges == 0


class TestIndices:
    def test_m1_empty_graph(self):
        assert m1(Graph(5)) == 0

    def test_m1_k22(self):
        assert m1(complete_bipartite(2, 2)) == 16

    def test_m1_family_7_1_3(self):
        # frozen from the per-vertex degree-sum oracle
        assert m1(build_family(FamilyParams(7, 1, 3))) == 62

    def test_m2_star(self):
        assert m2(complete_bipartite(1, 3)) == 9

    def test_m2_k22(self):
        assert m2(complete_bipartite(2, 2)) == 16

    def test_m2_family_7_1_3(self):
        # frozen from the edge-wise product-sum oracle over the 10 edges
        assert m2(build_family(FamilyParams(7, 1, 3))) == 94

    def test_min_degree(self):
        assert min_degree(complete_bipartite(2, 2)) == 2
        assert min_degree(complete_bipartite(1, 3)) == 1
        assert min_degree(Graph(4)) == 0

    def test_min_degree_requires_vertex(self):
        with pytest.raises(ValueError):
            min_degree(Graph(0))


class TestIndexProperties:
    @settings(max_examples=200, derandomize=True)
    @given(graphs(max_n=9))
    def test_handshake(self, g):
        assert sum(g.degrees()) == 2 * g.num_edges

    @settings(max_examples=200, derandomize=True)
    @given(graphs(max_n=9))
    def test_m1_edge_fold_identity(self, g):
        deg = g.degrees()
        assert m1(g) == sum(deg[u] + deg[v] for u, v in g.edges())

    @settings(max_examples=200, derandomize=True)
    @given(graphs(min_n=2, max_n=9))
    def test_deletion_strictly_decreases_indices(self, g):
        for e in g.edges():
            smaller = g.with_edges_changed(removed=[e])
            assert m1(smaller) < m1(g)
            assert m2(smaller) < m2(g)

    def test_index_zero_iff_edgeless(self):
        rng = random.Random(DEFAULT_SEED)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 8))
            assert (m1(g) == 0) == (g.num_edges == 0)
            assert (m2(g) == 0) == (g.num_edges == 0)


class TestBipartition:
    def test_path(self):
        b = bipartition_of(P4)
        assert b == (frozenset({0, 2}), frozenset({1, 3}))

    def test_triangle_has_none(self):
        assert bipartition_of(Graph(3, [(0, 1), (1, 2), (0, 2)])) is None

    def test_complete_bipartite_parts(self):
        b = bipartition_of(complete_bipartite(3, 4))
        assert {len(b.X), len(b.Y)} == {3, 4}

    def test_isolated_vertices_go_to_x(self):
        b = bipartition_of(Graph(3))
        assert b.X == frozenset({0, 1, 2}) and b.Y == frozenset()

    @settings(max_examples=300, derandomize=True)
    @given(graphs(max_n=9))
    def test_matches_two_colorability(self, g):
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges())
        b = bipartition_of(g)
        if nx.is_bipartite(G):
            assert b is not None
            for u, v in g.edges():
                assert (u in b.X) != (v in b.X)
            assert b.X | b.Y == frozenset(range(g.n))
            assert not (b.X & b.Y)
        else:
            assert b is None


class TestGraph6:
    def test_single_vertex(self):
        assert encode_graph6(Graph(1)) == b"@"

    def test_known_small_codes(self):
        assert decode_graph6(b"@") == Graph(1)
        assert decode_graph6(b"A_") == Graph(2, [(0, 1)])

    def test_matches_networkx_encoder(self):
        rng = random.Random(DEFAULT_SEED)
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 20))
            G = nx.Graph()
            G.add_nodes_from(range(g.n))
            G.add_edges_from(g.edges())
            expected = nx.to_graph6_bytes(G, header=False).strip()
            assert encode_graph6(g) == expected

    def test_roundtrip_random(self):
        rng = random.Random(DEFAULT_SEED)
        for _ in range(500):
            g = random_graph(rng, rng.randint(1, 30))
            assert decode_graph6(encode_graph6(g)) == g

    def test_encode_of_decode_is_identity(self):
        rng = random.Random(DEFAULT_SEED)
        for _ in range(200):
            s = encode_graph6(random_graph(rng, rng.randint(1, 25)))
            assert encode_graph6(decode_graph6(s)) == s

    def test_accepts_format_header(self):
        assert decode_graph6(b">>graph6<<A_") == Graph(2, [(0, 1)])

    def test_rejects_short_body(self):
        with pytest.raises(GraphFormatError, match="too short"):
            decode_graph6(b"D")  # n=5 needs 2 body characters

    def test_rejects_long_body(self):
        with pytest.raises(GraphFormatError, match="too long"):
            decode_graph6(b"A__")

    def test_rejects_bad_character_with_offset(self):
        with pytest.raises(GraphFormatError, match="offset 1") as exc:
            decode_graph6(bytes([65, 20]))
        assert exc.value.offset == 1

    def test_rejects_nonzero_padding(self):
        # n=2 has one adjacency bit; the other five must be zero padding
        with pytest.raises(GraphFormatError, match="padding"):
            decode_graph6(bytes([65, 63 + 1]))

    def test_rejects_multibyte_header(self):
        with pytest.raises(GraphFormatError, match="not supported"):
            decode_graph6(bytes([126, 63, 63, 63]))

    def test_rejects_empty(self):
        with pytest.raises(GraphFormatError, match="empty"):
            decode_graph6(b"")

    def test_encode_rejects_large_order(self):
        with pytest.raises(ValueError, match="62"):
            encode_graph6(Graph(63))


class TestEdgeList:
    def test_roundtrip(self):
        text = format_edge_list(P4)
        assert parse_edge_list(text) == P4

    def test_header_line(self):
        assert format_edge_list(P4).splitlines()[0] == "4 3"

    def test_rejects_bad_header(self):
        with pytest.raises(GraphFormatError, match="header"):
            parse_edge_list("4\n0 1\n")

    def test_rejects_wrong_edge_count(self):
        with pytest.raises(GraphFormatError, match="expected 2 edge lines"):
            parse_edge_list("3 2\n0 1\n")

    def test_rejects_unordered_pair(self):
        with pytest.raises(GraphFormatError, match="0 <= u < v < n"):
            parse_edge_list("3 1\n1 0\n")

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphFormatError, match="0 <= u < v < n"):
            parse_edge_list("3 1\n0 3\n")

    def test_rejects_duplicate(self):
        with pytest.raises(GraphFormatError, match="duplicate") as exc:
            parse_edge_list("3 2\n0 1\n0 1\n")
        assert exc.value.offset == 3


class TestReadGraphFile:
    def test_sniffs_edge_list(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text(format_edge_list(P4))
        assert read_graph_file(str(path)) == P4

    def test_sniffs_graph6(self, tmp_path):
        path = tmp_path / "g.g6"
        path.write_bytes(encode_graph6(P4) + b"\n")
        assert read_graph_file(str(path)) == P4
