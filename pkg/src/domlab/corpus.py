"""Seeded random instance generators shared by the verify suites and tests."""

from __future__ import annotations

import random
from typing import Iterator

from .graph import Graph, bipartition, has_isolated_vertex, is_connected
from .hypergraph import Hypergraph


def random_connected_bipartite(rng: random.Random, max_n: int = 14) -> Graph:
    """A connected bipartite graph without isolated vertices, 4 <= n <= max_n."""
    while True:
        n = rng.randint(4, max_n)
        na = rng.randint(1, n - 1)
        p = rng.uniform(0.25, 0.8)
        edges = [
            (u, v)
            for u in range(na)
            for v in range(na, n)
            if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if not has_isolated_vertex(g) and is_connected(g):
            assert bipartition(g) is not None
            return g


def random_bipartite_corpus(seed: int, count: int, max_n: int = 14) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_connected_bipartite(rng, max_n)


def random_hypergraph(rng: random.Random, max_points: int = 7, max_edges: int = 7) -> Hypergraph:
    """A hypergraph with every point covered and every edge nonempty."""
    while True:
        p = rng.randint(1, max_points)
        m = rng.randint(1, max_edges)
        edges = []
        for _ in range(m):
            e = 0
            for x in range(p):
                if rng.random() < 0.5:
                    e |= 1 << x
            if e:
                edges.append(e)
        if not edges:
            continue
        covered = 0
        for e in edges:
            covered |= e
        if covered == (1 << p) - 1:
            return Hypergraph(p, tuple(edges))


def random_hypergraph_corpus(
    seed: int, count: int, max_points: int = 7, max_edges: int = 7
) -> Iterator[Hypergraph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_hypergraph(rng, max_points, max_edges)
