"""Hypergraph covers, Grundy covering/transversal numbers, incidence graphs."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import HypergraphError
from .graph import Bipartition, Graph, bits

from .domination import _memo_cap


@dataclass(frozen=True)
class Hypergraph:
    """Point set {0..points-1} plus hyperedges as point-bitsets.

    Duplicate edges are allowed and preserved (multiset semantics): the
    open-neighborhood hypergraph of a graph with false twins genuinely
    repeats edges, and incidence-graph fidelity depends on keeping them.
    """

    points: int
    edges: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.points) - 1
        covered = 0
        for i, e in enumerate(self.edges):
            if e == 0:
                raise HypergraphError(f"edge {i} is empty")
            if e & ~full:
                raise HypergraphError(f"edge {i} has points >= {self.points}")
            covered |= e
        if covered != full:
            raise HypergraphError("some point lies in no edge")

    @classmethod
    def from_edge_lists(cls, points: int, edge_lists) -> "Hypergraph":
        edges = []
        for lst in edge_lists:
            m = 0
            for p in lst:
                m |= 1 << p
            edges.append(m)
        return cls(points, tuple(edges))


def covering_number(h: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Minimum edge cover with a witness edge-index set (exact branch and bound)."""
    full = (1 << h.points) - 1
    edges = h.edges
    m = len(edges)
    # greedy upper bound
    covered = 0
    greedy: list[int] = []
    while covered != full:
        i = max(range(m), key=lambda j: (edges[j] & ~covered).bit_count())
        greedy.append(i)
        covered |= edges[i]
    best = {"size": len(greedy), "set": tuple(sorted(greedy))}
    max_size = max(e.bit_count() for e in edges)

    def bb(covered: int, chosen: list[int]) -> None:
        if covered == full:
            if len(chosen) < best["size"]:
                best["size"] = len(chosen)
                best["set"] = tuple(sorted(chosen))
            return
        remaining = (full & ~covered).bit_count()
        if len(chosen) + (remaining + max_size - 1) // max_size >= best["size"]:
            return
        p = min(bits(full & ~covered), key=lambda x: sum(1 for e in edges if e >> x & 1))
        for i in range(m):
            if edges[i] >> p & 1 and i not in chosen:
                chosen.append(i)
                bb(covered | edges[i], chosen)
                chosen.pop()

    bb(0, [])
    return best["size"], best["set"]


def grundy_covering_number(
    h: Hypergraph, memo_cap: Optional[int] = None
) -> tuple[int, tuple[int, ...]]:
    """Longest legal hyperedge sequence (each edge covers a new point).

    Memoized on the covered-point bitset; a maximal legal sequence covers
    everything, so the result is automatically an edge covering sequence.
    """
    edges = h.edges
    m = len(edges)
    p = h.points
    cap = _memo_cap(memo_cap)
    memo: dict[int, tuple[int, int]] = {}

    def best(covered: int) -> tuple[int, int]:
        hit = memo.get(covered)
        if hit is not None:
            return hit
        best_len = 0
        best_i = -1
        for i in range(m):
            if edges[i] & ~covered:
                after = covered | edges[i]
                if 1 + (p - after.bit_count()) <= best_len:
                    continue
                length = 1 + best(after)[0]
                if length > best_len:
                    best_len, best_i = length, i
        result = (best_len, best_i)
        if len(memo) < cap:
            memo[covered] = result
        return result

    seq: list[int] = []
    covered = 0
    while True:
        length, i = best(covered)
        if length == 0:
            break
        seq.append(i)
        covered |= edges[i]
    return len(seq), tuple(seq)


def grundy_transversal_number(
    h: Hypergraph, memo_cap: Optional[int] = None
) -> tuple[int, tuple[int, ...]]:
    """Longest legal transversal sequence: each point has a private alive edge.

    Playing a point kills every edge containing it, so the playable set is a
    function of the killed-edge bitset; memoized on that bitset.
    """
    edges = h.edges
    m = len(edges)
    cap = _memo_cap(memo_cap)
    point_edges = [0] * h.points  # point -> bitset of edge indices
    for i, e in enumerate(edges):
        for x in bits(e):
            point_edges[x] |= 1 << i
    memo: dict[int, tuple[int, int]] = {}

    def best(killed: int) -> tuple[int, int]:
        hit = memo.get(killed)
        if hit is not None:
            return hit
        best_len = 0
        best_v = -1
        for v in range(h.points):
            if point_edges[v] & ~killed:
                after = killed | point_edges[v]
                if 1 + (m - after.bit_count()) <= best_len:
                    continue
                length = 1 + best(after)[0]
                if length > best_len:
                    best_len, best_v = length, v
        result = (best_len, best_v)
        if len(memo) < cap:
            memo[killed] = result
        return result

    seq: list[int] = []
    killed = 0
    while True:
        length, v = best(killed)
        if length == 0:
            break
        seq.append(v)
        killed |= point_edges[v]
    return len(seq), tuple(seq)


def incidence_graph(h: Hypergraph) -> tuple[Graph, Bipartition]:
    """Bipartite incidence graph: points 0..p-1 on sideA, edges after them."""
    p = h.points
    n = p + len(h.edges)
    adj = [0] * n
    for i, e in enumerate(h.edges):
        ev = p + i
        for x in bits(e):
            adj[x] |= 1 << ev
            adj[ev] |= 1 << x
    sideA = (1 << p) - 1
    sideB = ((1 << n) - 1) ^ sideA
    return Graph(n, tuple(adj)), Bipartition(sideA, sideB)


def open_neighborhood_hypergraph(
    g: Graph, b: Bipartition
) -> tuple[Hypergraph, Hypergraph]:
    """The two components of the open neighborhood hypergraph of bipartite g.

    H1 = (A, {N(b) : b in B}), H2 = (B, {N(a) : a in A}); points and edges
    are indexed by ascending vertex order within each side.
    """
    if any(row == 0 for row in g.adj):
        raise HypergraphError("graph has an isolated vertex")
    side_a = sorted(bits(b.sideA))
    side_b = sorted(bits(b.sideB))
    pos_a = {v: i for i, v in enumerate(side_a)}
    pos_b = {v: i for i, v in enumerate(side_b)}
    for v in side_a:
        if g.adj[v] & b.sideA:
            raise HypergraphError("bipartition has an internal edge")
    h1 = Hypergraph(
        len(side_a),
        tuple(sum(1 << pos_a[u] for u in bits(g.adj[v])) for v in side_b),
    )
    h2 = Hypergraph(
        len(side_b),
        tuple(sum(1 << pos_b[u] for u in bits(g.adj[v])) for v in side_a),
    )
    return h1, h2


# ---------------------------------------------------------------------------
# text format: first line "p m", then m lines of 0-based point indices
# ---------------------------------------------------------------------------

def hypergraph_to_text(h: Hypergraph) -> str:
    lines = [f"{h.points} {len(h.edges)}"]
    for e in h.edges:
        lines.append(" ".join(str(x) for x in bits(e)))
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise HypergraphError("empty hypergraph text")
    try:
        p, m = map(int, lines[0].split())
    except ValueError as exc:
        raise HypergraphError(f"bad header line {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise HypergraphError(f"expected {m} edge lines, got {len(lines) - 1}")
    edge_lists = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    return Hypergraph.from_edge_lists(p, edge_lists)
