"""Extremal families for equal total and Grundy total domination.

Value 2: complete multipartite graphs. Value 4: K_{n,n} minus a perfect
matching. Value 6 (regular bipartite): graphs built from an orthogonal
array OA(k, k-1), together with the inverse extraction of the array from
such a graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .designs import OrthogonalArray, validate_oa
from .domination import (
    DominationCertificate,
    grundy_bipartite,
    grundy_total_domination_number,
    total_domination_number,
)
from .errors import ExtractionError
from .graph import (
    Bipartition,
    Graph,
    bipartition,
    bits,
    is_connected,
    is_false_twin_free,
    is_regular,
)


def complete_multipartite_parts(g: Graph) -> Optional[list[int]]:
    """Part sizes if g is complete multipartite (complement = disjoint cliques)."""
    full = g.vertex_mask()
    seen = 0
    parts = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = full & ~g.adj[v] & ~seen  # v's part candidate: its non-neighbors
        for u in bits(comp):
            if (full & ~g.adj[u] & ~(1 << u)) != comp & ~(1 << u):
                return None
        seen |= comp
        parts.append(comp.bit_count())
    return sorted(parts)


def knn_minus_matching(n: int) -> Graph:
    """K_{n,n} minus the matching {i, n+i}: sides 0..n-1 and n..2n-1."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    adj = [0] * (2 * n)
    for i in range(n):
        for j in range(n):
            if i != j:
                adj[i] |= 1 << (n + j)
                adj[n + j] |= 1 << i
    return Graph(2 * n, tuple(adj))


def recognize_knn_minus_matching(g: Graph) -> bool:
    """True iff g is K_{n,n} minus a perfect matching for some n >= 2."""
    if g.n < 4 or g.n % 2:
        return False
    b = bipartition(g)
    if b is None:
        return False
    n = g.n // 2
    if b.sideA.bit_count() != n:
        return False
    if any(g.degree(v) != n - 1 for v in range(g.n)):
        return False
    # non-edges across the bipartition must form a perfect matching
    matched = 0
    for a in bits(b.sideA):
        non = b.sideB & ~g.adj[a]
        if non.bit_count() != 1 or non & matched:
            return False
        matched |= non
    return matched == b.sideB


def figure1_graph() -> Graph:
    """The 14-vertex 4-regular bipartite graph with both invariants 6.

    Top vertices 0..6, bottom vertices 7..13.
    """
    tops = [
        (0, 1, 2, 3),
        (0, 1, 4, 5),
        (2, 3, 4, 5),
        (1, 3, 5, 6),
        (1, 2, 4, 6),
        (0, 3, 4, 6),
        (0, 2, 5, 6),
    ]
    edges = [(t, 7 + b) for t, row in enumerate(tops) for b in row]
    return Graph.from_edges(14, edges)


@dataclass(frozen=True)
class ExtractionContext:
    """Named substructures found while extracting an OA from a value-6 graph.

    All vertex sets are bitsets over the host graph. classes lists the k
    non-neighbor classes (B1, B2, then one per A'-vertex ascending) whose
    indexed members supply the array symbols.
    """

    k: int
    n: int
    a1: int
    a2: int
    B1: int
    B2: int
    Bprime: int
    Aprime: int
    Adoubleprime: int
    classes: tuple[int, ...]
    b_star: int
    ell: int


def verify_pair_domination(g: Graph, b: Bipartition) -> bool:
    """Every same-side pair totally dominates all but exactly one opposite vertex."""
    for side, other in ((b.sideA, b.sideB), (b.sideB, b.sideA)):
        verts = list(bits(side))
        want = other.bit_count() - 1
        for u, v in combinations(verts, 2):
            if ((g.adj[u] | g.adj[v]) & other).bit_count() != want:
                return False
    return True


def graph_from_oa(a: OrthogonalArray) -> tuple[Graph, Bipartition]:
    """Regular bipartite graph on 2(k^2-k+1) vertices from an OA(k, k-1).

    Side A: k hub vertices then (k-1)^2 row vertices; side B: k blocks of
    k-1 vertices then the apex b. Hub a_i sees all of B except block i and
    the apex; row vertex i sees the apex and, in every block s, everything
    except the symbol picked by row i in column s.
    """
    if a.s != a.q + 1:
        raise ValueError(f"need s = q+1, got OA({a.s},{a.q})")
    if not validate_oa(a):
        raise ValueError("input fails orthogonal array validation")
    k = a.s
    q = a.q
    n = k * k - k + 1
    apn = k + q * q  # == n
    assert apn == n
    total = 2 * n
    b_star = total - 1

    def block_vertex(blk: int, sym: int) -> int:
        return n + blk * q + sym

    adj = [0] * total
    all_b = 0
    for blk in range(k):
        for sym in range(q):
            all_b |= 1 << block_vertex(blk, sym)
    all_b |= 1 << b_star
    for i in range(k):
        block_i = sum(1 << block_vertex(i, s) for s in range(q))
        adj[i] = all_b & ~block_i & ~(1 << b_star)
    for r, row in enumerate(a.rows):
        v = k + r
        m = 1 << b_star
        for blk in range(k):
            for sym in range(q):
                if sym != row[blk]:
                    m |= 1 << block_vertex(blk, sym)
        adj[v] = m
    for v in range(n):
        for u in bits(adj[v]):
            adj[u] |= 1 << v
    g = Graph(total, tuple(adj))
    side_a = (1 << n) - 1
    return g, Bipartition(side_a, ((1 << total) - 1) ^ side_a)


def oa_from_graph(g: Graph, b: Bipartition) -> tuple[OrthogonalArray, ExtractionContext]:
    """Extract an OA(k, k-1) from an (n-k)-regular bipartite value-6 graph.

    Side A is the side containing vertex 0; a1, a2 are its two lowest
    vertices. Each structural claim of the construction is re-verified and
    a violation raises ExtractionError naming the failed claim.
    """
    side_a = b.sideA if b.sideA & 1 else b.sideB
    side_b = b.sideB if side_a == b.sideA else b.sideA
    na, nb = side_a.bit_count(), side_b.bit_count()
    if na != nb:
        raise ExtractionError("precondition", f"sides differ in size ({na} vs {nb})")
    n = na
    degs = {g.degree(v) for v in range(g.n)}
    if len(degs) != 1:
        raise ExtractionError("precondition", "graph is not regular")
    k = n - degs.pop()
    if k < 3 or n != k * k - k + 1:
        raise ExtractionError("precondition", f"n={n} is not k^2-k+1 for any k >= 3 matching the degree")
    if not verify_pair_domination(g, b):
        raise ExtractionError("pair-domination", "some same-side pair misses != 1 vertex")

    avs = sorted(bits(side_a))
    a1, a2 = avs[0], avs[1]
    B1 = g.adj[a1] & ~g.adj[a2] & side_b
    B2 = g.adj[a2] & ~g.adj[a1] & side_b
    Bp = g.adj[a1] & g.adj[a2] & side_b
    rest = side_b & ~(B1 | B2 | Bp)
    if rest.bit_count() != 1:
        raise ExtractionError("lemma-pair", "a1,a2 must miss exactly one B-vertex")
    b_star = (rest & -rest).bit_length() - 1
    if B1.bit_count() != k - 1 or B2.bit_count() != k - 1:
        raise ExtractionError("claim-sizes", "|B1| or |B2| != k-1")
    if Bp.bit_count() != n - 2 * k + 1:
        raise ExtractionError("claim-sizes", "|B'| != n-2k+1")

    reachable = B1 | B2 | Bp
    Aprime = 0
    for v in avs:
        if v not in (a1, a2) and not (g.adj[v] & ~reachable):
            Aprime |= 1 << v
    ell = Aprime.bit_count()
    if ell != k - 2:
        raise ExtractionError("claim-sizes", f"|A'|={ell}, expected k-2={k - 2}")

    classes = [B1, B2]
    part = 0
    for v in bits(Aprime):
        if (B1 | B2) & ~g.adj[v]:
            raise ExtractionError("claim-k-1", "A'-vertex misses part of B1 u B2")
        Bi = Bp & ~g.adj[v]
        if Bi.bit_count() != k - 1:
            raise ExtractionError("claim-k-1", "A'-vertex non-neighbor class size != k-1")
        if Bi & part:
            raise ExtractionError("claim-partition", "non-neighbor classes overlap in B'")
        part |= Bi
        classes.append(Bi)
    if part != Bp:
        raise ExtractionError("claim-partition", "classes do not cover B'")

    for bv in bits(reachable):
        non = sum(1 for v in [a1, a2, *bits(Aprime)] if not g.adj[bv] >> v & 1)
        if non != 1:
            raise ExtractionError(
                "claim-non-neighbors", f"B-vertex {bv} has {non} non-neighbors in {{a1,a2}} u A'"
            )

    Adp = side_a & ~Aprime & ~(1 << a1) & ~(1 << a2)
    if Adp.bit_count() != (k - 1) ** 2:
        raise ExtractionError("claim-sizes", "|A''| != (k-1)^2")

    symbol = {}
    for cls in classes:
        for idx, v in enumerate(sorted(bits(cls))):
            symbol[v] = idx
    rows = []
    for v in sorted(bits(Adp)):
        word = []
        for cls in classes:
            non = cls & ~g.adj[v]
            if non.bit_count() != 1:
                raise ExtractionError(
                    "claim-neighbors-A2", f"A''-vertex {v} has != 1 non-neighbor in a class"
                )
            word.append(symbol[(non & -non).bit_length() - 1])
        rows.append(tuple(word))
    oa = OrthogonalArray(k, k - 1, tuple(rows))
    if not validate_oa(oa):
        raise ExtractionError("oa-validation", "extracted rows fail OA validation")
    ctx = ExtractionContext(
        k=k, n=n, a1=a1, a2=a2, B1=B1, B2=B2, Bprime=Bp,
        Aprime=Aprime, Adoubleprime=Adp, classes=tuple(classes),
        b_star=b_star, ell=ell,
    )
    return oa, ctx


@dataclass(frozen=True)
class ClassifyReport:
    gamma_t: DominationCertificate
    gamma_grt: DominationCertificate
    equal: bool
    classification: str
    detail: Optional[Union[list, OrthogonalArray]] = None


def classify_equal(g: Graph) -> ClassifyReport:
    """Both invariants plus, when equal, which extremal characterization applies."""
    ct = total_domination_number(g)
    b = bipartition(g)
    if b is not None and g.n > 0:
        cg = grundy_bipartite(g, b)
    else:
        cg = grundy_total_domination_number(g)
    if ct.value != cg.value:
        return ClassifyReport(ct, cg, False, "unequal")
    v = ct.value
    if v == 0:
        return ClassifyReport(ct, cg, True, "empty")
    if v == 2:
        parts = complete_multipartite_parts(g)
        if parts is not None:
            return ClassifyReport(ct, cg, True, "complete-multipartite", parts)
        return ClassifyReport(ct, cg, True, "unclassified")
    if v == 4:
        if b is not None and is_false_twin_free(g) and recognize_knn_minus_matching(g):
            return ClassifyReport(ct, cg, True, "knn-minus-matching")
        return ClassifyReport(ct, cg, True, "unclassified")
    if v == 6:
        if b is not None and is_false_twin_free(g) and is_regular(g) and is_connected(g):
            try:
                oa, _ = oa_from_graph(g, b)
                return ClassifyReport(ct, cg, True, "oa-regular-bipartite", oa)
            except ExtractionError:
                return ClassifyReport(ct, cg, True, "unclassified")
        # non-regular value-6 equality is exactly what the closing
        # conjecture rules out; flag rather than classify
        return ClassifyReport(ct, cg, True, "unclassified-conjectural")
    return ClassifyReport(ct, cg, True, "unclassified")
