import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domlab.errors import GraphFormatError
from domlab.graph import (
    Graph,
    bipartition,
    bits,
    canonical_form,
    degree_sequence,
    false_twin_partition,
    has_isolated_vertex,
    is_chordal,
    is_connected,
    parse_graph6,
    quotient_false_twins,
    simplicial_vertices,
    to_graph6,
)

from conftest import random_graph


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


class TestGraph6:
    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.adj == (0,)
        assert to_graph6(g) == "@"

    def test_k4(self):
        assert to_graph6(complete(4)) == "C~"
        assert parse_graph6("C~") == complete(4)

    def test_five_vertex_roundtrip(self):
        g = parse_graph6("DQc")
        assert g.n == 5
        assert to_graph6(g) == "DQc"

    def test_header_optional(self):
        assert parse_graph6(">>graph6<<C~") == complete(4)

    @pytest.mark.parametrize("bad", ["", "C~~", "C", "A\x1f", "~~~~A"])
    def test_malformed(self, bad):
        with pytest.raises(GraphFormatError):
            parse_graph6(bad)

    def test_trailing_padding_must_be_zero(self):
        # n=2, single bit then 5 padding bits; '_' sets a padding bit
        with pytest.raises(GraphFormatError):
            parse_graph6("A" + chr(63 + 0b011111))

    def test_large_n_header(self):
        g = Graph.from_edges(100, [(0, 99)])
        s = to_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g

    def test_vertex_cap(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("~" + chr(63) + chr(63 + 5) + chr(63))  # n = 320

    def test_roundtrip_random(self):
        rng = random.Random(7)
        for _ in range(10_000):
            g = random_graph(rng, rng.randint(0, 40), rng.random())
            assert parse_graph6(to_graph6(g)) == g


class TestPredicates:
    def test_connected(self):
        assert is_connected(path(5))
        assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_isolated(self):
        assert has_isolated_vertex(Graph.from_edges(3, [(1, 2)]))
        assert not has_isolated_vertex(path(3))

    def test_degree_sequence_figure_graph(self):
        from domlab.extremal import figure1_graph

        assert degree_sequence(figure1_graph()) == [4] * 14

    def test_bipartition_even_cycle(self):
        b = bipartition(cycle(4))
        assert b is not None
        assert b.sideA == 0b0101 and b.sideB == 0b1010

    def test_bipartition_odd_cycle(self):
        assert bipartition(cycle(5)) is None

    def test_bipartition_proper(self, rng):
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 12), 0.3)
            b = bipartition(g)
            if b is None:
                continue
            for u, v in g.edges():
                assert (b.sideA >> u & 1) != (b.sideA >> v & 1)

    def test_figure1_split(self):
        from domlab.extremal import figure1_graph

        b = bipartition(figure1_graph())
        assert b.sideA.bit_count() == 7 and b.sideB.bit_count() == 7


class TestFalseTwins:
    def test_k23_quotient(self):
        g = complete_bipartite(2, 3)
        classes = false_twin_partition(g).classes
        assert sorted(c.bit_count() for c in classes) == [2, 3]
        q = quotient_false_twins(g)
        assert q.n == 2 and q.edges() == [(0, 1)]

    def test_c6_twin_free(self):
        g = cycle(6)
        assert len(false_twin_partition(g).classes) == 6
        assert quotient_false_twins(g) == g

    def test_duplicate_vertex_quotients_back(self, rng):
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            v = rng.randrange(g.n)
            adj = [row | ((row >> v & 1) << g.n) for row in g.adj]
            adj.append(g.adj[v])
            g2 = Graph(g.n + 1, tuple(adj))
            assert canonical_form(quotient_false_twins(g2)) == canonical_form(
                quotient_false_twins(g)
            )

    def test_quotient_distinct_neighborhoods(self, rng):
        for _ in range(100):
            q = quotient_false_twins(random_graph(rng, rng.randint(1, 10), 0.4))
            assert len(set(q.adj)) == q.n


class TestChordal:
    def test_c4_not_chordal(self):
        ok, order = is_chordal(cycle(4))
        assert not ok and order is None

    def test_tree_chordal(self):
        g = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
        ok, order = is_chordal(g)
        assert ok and len(order) == 7
        # leaves are simplicial
        simp = simplicial_vertices(g)
        for leaf in (3, 4, 5, 6):
            assert simp >> leaf & 1

    def test_k4_minus_edge(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        ok, _ = is_chordal(g)
        assert ok
        assert simplicial_vertices(g) == 0b1001  # the two nonadjacent vertices

    def test_agrees_with_induced_cycle_search(self, rng):
        def has_long_induced_cycle(g):
            for size in range(4, g.n + 1):
                for sub in combinations(range(g.n), size):
                    inside = 0
                    for v in sub:
                        inside |= 1 << v
                    degs = [(g.adj[v] & inside).bit_count() for v in sub]
                    if degs != [2] * size:
                        continue
                    # connectivity of the induced subgraph
                    seen = 1 << sub[0]
                    frontier = seen
                    while frontier:
                        nxt = 0
                        for v in bits(frontier):
                            nxt |= g.adj[v] & inside
                        frontier = nxt & ~seen
                        seen |= nxt
                    if seen == inside:
                        return True
            return False

        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 7), rng.random())
            assert is_chordal(g)[0] == (not has_long_induced_cycle(g))


class TestCanonicalForm:
    def test_cycle_relabelings(self, rng):
        g = cycle(5)
        base = canonical_form(g)
        for _ in range(30):
            perm = list(range(5))
            rng.shuffle(perm)
            h = Graph.from_edges(5, [(perm[u], perm[v]) for u, v in g.edges()])
            assert canonical_form(h) == base

    def test_p4_vs_star(self):
        assert canonical_form(path(4)) != canonical_form(complete_bipartite(1, 3))

    def test_all_4_vertex_classes_distinct(self):
        # brute-force pairwise isomorphism over all labeled 4-vertex graphs
        edges4 = list(combinations(range(4), 2))
        perms = list(permutations(range(4)))
        seen_brute = set()
        seen_canon = set()
        for mask in range(1 << 6):
            rep = min(
                sum(
                    1 << edges4.index(tuple(sorted((p[u], p[v]))))
                    for i, (u, v) in enumerate(edges4)
                    if mask >> i & 1
                )
                for p in perms
            )
            seen_brute.add(rep)
            g = Graph.from_edges(4, [edges4[i] for i in range(6) if mask >> i & 1])
            seen_canon.add(to_graph6(canonical_form(g)))
        assert len(seen_brute) == len(seen_canon) == 11

    def test_permutation_invariance_corpus(self, rng):
        for _ in range(100):
            n = rng.randint(1, 10)
            g = random_graph(rng, n, rng.random())
            base = canonical_form(g)
            for _ in range(100):
                perm = list(range(n))
                rng.shuffle(perm)
                h = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g.edges()])
                assert canonical_form(h) == base


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 12), st.integers(0, 2**30))
def test_graph6_roundtrip_property(n, seed):
    g = random_graph(random.Random(seed), n, 0.5)
    assert parse_graph6(to_graph6(g)) == g
