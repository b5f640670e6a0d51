"""Immutable bitset-backed graphs: graph6 codec, structural predicates, canonical form.

Vertices are 0..n-1; every vertex set (neighborhoods included) is a Python int
used as a bitset, so unions/intersections are single word-parallel operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 256

from .errors import GraphFormatError


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[v] is the open neighborhood N(v) as a bitset."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not (0 <= self.n <= MAX_VERTICES):
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency of {v} has bits >= n set")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class Bipartition:
    sideA: int
    sideB: int


@dataclass(frozen=True)
class TwinPartition:
    """Equivalence classes under equal open neighborhoods, as bitsets."""

    classes: tuple[int, ...]


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Encode the labeled graph in graph6 (printable ASCII, bit-exact format)."""
    n = g.n
    if n <= 62:
        header = [63 + n]
    else:
        header = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    out = list(header)
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = acc << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return "".join(chr(c) for c in out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a labeled Graph."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string", 0)
    data = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range", i)
        data.append(c - 63)
    pos = 0
    if data[0] == 63:  # '~' prefix: extended vertex count
        if len(data) < 4:
            raise GraphFormatError("truncated extended header", len(data))
        if data[1] == 63:
            raise GraphFormatError("graph6 >36-bit counts not supported", 1)
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
    else:
        n = data[0]
        pos = 1
    if n > MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} exceeds cap {MAX_VERTICES}", 0)
    need = n * (n - 1) // 2
    ngroups = (need + 5) // 6
    if len(data) - pos != ngroups:
        raise GraphFormatError(
            f"expected {ngroups} payload bytes for n={n}, got {len(data) - pos}", pos
        )
    adj = [0] * n
    bit = 0
    for gi in range(ngroups):
        group = data[pos + gi]
        for k in range(5, -1, -1):
            b = group >> k & 1
            if bit >= need:
                if b:
                    raise GraphFormatError("nonzero padding bits", pos + gi)
                continue
            if b:
                # bit index -> (u, v) with v the column, u < v
                u, v = _edge_of_bit(bit)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(adj))


def _edge_of_bit(idx: int) -> tuple[int, int]:
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    v = 1
    while v * (v + 1) // 2 <= idx:
        v += 1
    return idx - v * (v - 1) // 2, v


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.vertex_mask()


def has_isolated_vertex(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def degree_sequence(g: Graph) -> list[int]:
    return sorted((row.bit_count() for row in g.adj), reverse=True)


def is_regular(g: Graph) -> bool:
    return g.n == 0 or len(set(row.bit_count() for row in g.adj)) == 1


def bipartition(g: Graph) -> Optional[Bipartition]:
    """2-coloring when bipartite; sideA holds the lowest vertex of each component."""
    color = [-1] * g.n
    sideA = sideB = 0
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    for v in range(g.n):
        if color[v] == 0:
            sideA |= 1 << v
        else:
            sideB |= 1 << v
    return Bipartition(sideA, sideB)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def false_twin_partition(g: Graph) -> TwinPartition:
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | 1 << v
    classes = sorted(groups.values(), key=lambda m: (m & -m).bit_length())
    return TwinPartition(tuple(classes))


def is_false_twin_free(g: Graph) -> bool:
    return len(false_twin_partition(g).classes) == g.n


def quotient_false_twins(g: Graph) -> Graph:
    """Keep the lowest-indexed vertex of each false-twin class."""
    keep = [(cls & -cls).bit_length() - 1 for cls in false_twin_partition(g).classes]
    keep.sort()
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for i, v in enumerate(keep):
        for u in bits(g.adj[v]):
            if u in index:
                adj[i] |= 1 << index[u]
    return Graph(len(keep), tuple(adj))


# ---------------------------------------------------------------------------
# chordality
# ---------------------------------------------------------------------------

def simplicial_vertices(g: Graph) -> int:
    """Bitset of vertices whose closed neighborhood induces a clique."""
    out = 0
    for v in range(g.n):
        nb = g.adj[v]
        if all((nb & ~g.adj[u]) == 1 << u for u in bits(nb)):
            out |= 1 << v
    return out


def is_chordal(g: Graph) -> tuple[bool, Optional[list[int]]]:
    """Chordality via lexicographic BFS + perfect elimination check.

    Returns (True, elimination order) or (False, None). The order lists
    vertices in elimination sequence (each earlier vertex is simplicial in
    the graph induced by it and the later ones).
    """
    n = g.n
    if n == 0:
        return True, []
    # Lex-BFS: repeatedly take a vertex with lexicographically largest label.
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order_rev: list[int] = []  # lex-BFS visit order
    for step in range(n):
        v = max(
            (u for u in range(n) if not visited[u]),
            key=lambda u: (labels[u], -u),
        )
        visited[v] = True
        order_rev.append(v)
        for u in bits(g.adj[v]):
            if not visited[u]:
                labels[u].append(n - step)
    order = order_rev[::-1]  # candidate perfect elimination order
    pos = {v: i for i, v in enumerate(order)}
    later = [0] * n  # later[v]: neighbors of v eliminated after v
    for i, v in enumerate(order):
        m = 0
        for u in bits(g.adj[v]):
            if pos[u] > i:
                m |= 1 << u
        later[v] = m
    for v in order:
        m = later[v]
        if m == 0:
            continue
        w = min(bits(m), key=lambda u: pos[u])
        rest = m & ~(1 << w)
        if rest & ~g.adj[w]:
            return False, None
    return True, order


# ---------------------------------------------------------------------------
# canonical labeling (refinement + backtracking)
# ---------------------------------------------------------------------------

def _refine(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Stable 1-WL color refinement with canonical color ids."""
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _certificate(n: int, adj: tuple[int, ...], perm: list[int]) -> tuple[int, ...]:
    """Adjacency rows after relabeling by perm (perm[v] = new label)."""
    rows = [0] * n
    for v in range(n):
        r = 0
        for u in bits(adj[v]):
            r |= 1 << perm[u]
        rows[perm[v]] = r
    return tuple(rows)


def _canonical_search(g: Graph) -> tuple[list[int], list[list[int]]]:
    """Return (canonical relabeling perm, discovered automorphism generators)."""
    n = g.n
    if n == 0:
        return [], []
    adj = g.adj
    best: dict[str, object] = {"cert": None, "perm": None}
    autos: list[list[int]] = []

    def rec(colors: list[int], prefix: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            perm = colors[:]  # discrete coloring = labeling
            cert = _certificate(n, adj, perm)
            if best["cert"] is None or cert < best["cert"]:
                best["cert"] = cert
                best["perm"] = perm
            elif cert == best["cert"]:
                bp: list[int] = best["perm"]  # type: ignore[assignment]
                inv = [0] * n
                for v in range(n):
                    inv[bp[v]] = v
                autos.append([inv[perm[v]] for v in range(n)])
            return
        tried: list[int] = []
        for w in target:
            # skip w if a known automorphism fixing the prefix maps a tried vertex to it
            skip = False
            for a in autos:
                if all(a[p] == p for p in prefix):
                    for t in tried:
                        if a[t] == w:
                            skip = True
                            break
                if skip:
                    break
            if skip:
                continue
            tried.append(w)
            nxt = [c * 2 + 1 for c in colors]
            nxt[w] = colors[w] * 2
            rec(_refine(n, adj, nxt), prefix + [w])

    rec(_refine(n, adj, [0] * n), [])
    return best["perm"], autos  # type: ignore[return-value]


def canonical_form(g: Graph) -> Graph:
    """Canonically labeled copy: isomorphic graphs map to identical Graphs."""
    perm, _ = _canonical_search(g)
    return Graph(g.n, _certificate(g.n, g.adj, perm))


def canonical_form_with_autos(g: Graph) -> tuple[Graph, list[list[int]]]:
    """Canonical form plus automorphism generators, in the canonical labeling."""
    perm, autos = _canonical_search(g)
    conj = []
    for a in autos:
        c = [0] * g.n
        for v in range(g.n):
            c[perm[v]] = perm[a[v]]
        conj.append(c)
    return Graph(g.n, _certificate(g.n, g.adj, perm)), conj


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)
