import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heredit.errors import FormatError, ValidationError
from heredit.graphs import (
    Graph,
    build_family,
    complement,
    graph_from_graph6,
    graph_to_graph6,
    has_induced,
    parse_graph_spec,
    path_cycle_profile,
)
from oracle_utils import (
    has_induced_brute,
    is_connected,
    max_path_closes,
    paths_and_cycles_recursive,
    random_graph,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return Graph.from_edges(n, edges)


class TestFamilies:
    def test_path_edges(self):
        g = build_family("path", 4)
        assert g.edges() == ((0, 1), (1, 2), (2, 3))

    def test_c2nstar_has_long_chord(self):
        g = build_family("c2nstar", 8)
        assert g.edge_count() == 9
        assert g.has_edge(0, 4)

    def test_ctilde_has_short_chord(self):
        g = build_family("ctilde", 9)
        assert g.edge_count() == 10
        assert g.has_edge(0, 2)

    @pytest.mark.parametrize("family,n,count", [
        ("path", 7, 6),
        ("cycle", 8, 8),
        ("ctilde", 11, 12),
        ("c2nstar", 10, 11),
    ])
    def test_edge_counts(self, family, n, count):
        assert build_family(family, n).edge_count() == count

    @pytest.mark.parametrize("family,n", [
        ("path", 0), ("cycle", 2), ("ctilde", 3), ("c2nstar", 7), ("c2nstar", 4),
    ])
    def test_rejects_bad_orders(self, family, n):
        with pytest.raises(ValidationError):
            build_family(family, n)

    def test_rejects_unknown_family(self):
        with pytest.raises(ValidationError):
            build_family("wheel", 5)


class TestGraphInvariants:
    def test_rejects_self_loop(self):
        with pytest.raises(ValidationError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValidationError):
            Graph.from_edges(3, [(0, 3)])

    @given(graphs())
    def test_complement_is_involution(self, g):
        assert complement(complement(g)) == g

    def test_complement_examples(self):
        k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        assert complement(k3).edge_count() == 0
        assert complement(build_family("path", 3)).edges() == ((0, 2),)
        c5 = build_family("cycle", 5)
        assert complement(complement(c5)) == c5


class TestHasInduced:
    def test_c5_contains_p4(self):
        found, witness = has_induced(build_family("cycle", 5), build_family("path", 4))
        assert found
        p4 = build_family("path", 4)
        host = build_family("cycle", 5)
        for u in range(4):
            for v in range(u + 1, 4):
                assert host.has_edge(witness[u], witness[v]) == p4.has_edge(u, v)

    def test_complete_graph_has_no_p3(self):
        k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert has_induced(k4, build_family("path", 3)) == (False, None)

    def test_c8star_has_no_induced_c8(self):
        # the only 8-vertex subset carries the chord, so the cycle is not induced
        found, _ = has_induced(build_family("c2nstar", 8), build_family("cycle", 8))
        assert not found

    def test_self_and_single_vertex(self):
        for g in (build_family("path", 5), build_family("ctilde", 6)):
            assert has_induced(g, g)[0]
            assert has_induced(g, Graph.from_edges(1, []))[0]
        assert not has_induced(Graph.from_edges(0, []), Graph.from_edges(1, []))[0]

    def test_pattern_larger_than_host(self):
        assert has_induced(build_family("path", 3), build_family("path", 4)) == (False, None)

    def test_matches_brute_force_on_random_pairs(self):
        rng = random.Random(11)
        for _ in range(40):
            host = random_graph(rng, rng.randrange(1, 7))
            pattern = random_graph(rng, rng.randrange(1, 5))
            assert has_induced(host, pattern)[0] == has_induced_brute(host, pattern)

    def test_matches_networkx_on_random_pairs(self):
        rng = random.Random(23)
        for _ in range(40):
            host = random_graph(rng, rng.randrange(1, 8))
            pattern = random_graph(rng, rng.randrange(1, 6))
            nx_host = nx.Graph([(u, v) for u, v in host.edges()])
            nx_host.add_nodes_from(range(host.n))
            nx_pattern = nx.Graph([(u, v) for u, v in pattern.edges()])
            nx_pattern.add_nodes_from(range(pattern.n))
            matcher = nx.algorithms.isomorphism.GraphMatcher(nx_host, nx_pattern)
            assert has_induced(host, pattern)[0] == matcher.subgraph_is_isomorphic()


class TestPathCycleProfile:
    def test_examples(self):
        assert path_cycle_profile(build_family("path", 5)) == (5, frozenset(), False)
        assert path_cycle_profile(build_family("cycle", 5)) == (5, frozenset({5}), True)
        # computed by the independent recursive enumerator as well
        profile = path_cycle_profile(build_family("c2nstar", 8))
        assert profile == (8, frozenset({5, 8}), True)

    def test_agrees_with_recursive_enumeration(self):
        rng = random.Random(3)
        for _ in range(30):
            g = random_graph(rng, rng.randrange(1, 8))
            longest, lengths = paths_and_cycles_recursive(g)
            profile = path_cycle_profile(g)
            assert profile.longest_path_order == longest
            assert profile.cycle_lengths == frozenset(lengths)
            assert profile.hamiltonian == (g.n >= 3 and g.n in lengths)

    def test_rejects_large_graphs(self):
        with pytest.raises(ValidationError):
            path_cycle_profile(build_family("path", 17))

    def test_closing_max_path_implies_hamiltonian(self):
        # a maximum-length path with adjacent endpoints makes a connected
        # graph Hamiltonian; checked on random connected graphs
        rng = random.Random(7)
        checked = 0
        for _ in range(120):
            g = random_graph(rng, rng.randrange(2, 8), density=0.45)
            if not is_connected(g):
                continue
            if max_path_closes(g):
                checked += 1
                assert path_cycle_profile(g).hamiltonian
        assert checked > 10


class TestGraph6:
    def test_known_vectors(self):
        k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert graph_to_graph6(k4) == "C~"
        assert graph_to_graph6(build_family("path", 4)) == "Ch"
        assert graph_to_graph6(build_family("cycle", 5)) == "Dhc"

    @given(graphs(max_n=12))
    @settings(max_examples=60)
    def test_roundtrip_byte_identical(self, g):
        text = graph_to_graph6(g)
        assert graph_to_graph6(graph_from_graph6(text)) == text
        assert graph_from_graph6(text) == g

    def test_long_form_roundtrip(self):
        g = build_family("path", 100)
        text = graph_to_graph6(g)
        assert text.startswith("~")
        assert graph_from_graph6(text) == g

    def test_matches_networkx(self):
        rng = random.Random(17)
        for _ in range(25):
            g = random_graph(rng, rng.randrange(0, 15))
            nx_g = nx.Graph()
            nx_g.add_nodes_from(range(g.n))  # label order matters for graph6
            nx_g.add_edges_from(g.edges())
            assert graph_to_graph6(g) == nx.to_graph6_bytes(nx_g, header=False).decode().strip()

    def test_accepts_header(self):
        assert graph_from_graph6(">>graph6<<Ch") == build_family("path", 4)

    @pytest.mark.parametrize("bad", ["", "C", "Ch_", "C\x20", "~???"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormatError):
            graph_from_graph6(bad)

    def test_rejects_nonzero_padding(self):
        # P3 is "Bg"; flipping a padding bit must be rejected
        assert graph_from_graph6("Bg") == build_family("path", 3)
        with pytest.raises(FormatError):
            graph_from_graph6("Bh")


class TestGraphSpec:
    def test_family_specs(self):
        assert parse_graph_spec("path:7") == build_family("path", 7)
        assert parse_graph_spec("c2nstar:8") == build_family("c2nstar", 8)
        assert parse_graph_spec("ctilde:9") == build_family("ctilde", 9)

    def test_graph6_fallback(self):
        assert parse_graph_spec("Dhc") == build_family("cycle", 5)

    def test_rejects_unknown_family(self):
        with pytest.raises(ValidationError):
            parse_graph_spec("clique:4")
