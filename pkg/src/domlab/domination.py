"""Exact total domination and Grundy total domination with witness certificates."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .errors import IsolatedVertexError, MalformedSequenceError
from .graph import Bipartition, Graph, bits, mask_of

DEFAULT_MEMO_CAP = 1 << 26


def _memo_cap(override: Optional[int]) -> int:
    if override is not None:
        return override
    env = os.environ.get("DOMLAB_MEMO_CAP")
    return int(env) if env else DEFAULT_MEMO_CAP


@dataclass(frozen=True)
class DominationCertificate:
    """Invariant value plus a witness that re-validates it.

    kind "gamma_t": witness is a frozenset attaining the minimum.
    kind "gamma_grt": witness is a maximum legal sequence (tuple).
    """

    kind: str
    value: int
    witness: Union[frozenset, tuple]


def _require_no_isolated(g: Graph) -> None:
    if any(row == 0 for row in g.adj):
        raise IsolatedVertexError("graph has an isolated vertex")


def is_total_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    _require_no_isolated(g)
    covered = 0
    for v in s:
        covered |= g.adj[v]
    return covered == g.vertex_mask()


def is_legal_sequence(g: Graph, seq: Iterable[int]) -> bool:
    """True iff every vertex totally dominates something new when played."""
    _require_no_isolated(g)
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise MalformedSequenceError(f"repeated vertex in sequence {seq}")
    dominated = 0
    for v in seq:
        if not g.adj[v] & ~dominated:
            return False
        dominated |= g.adj[v]
    return True


# ---------------------------------------------------------------------------
# total domination number (branch-and-bound set cover over neighborhoods)
# ---------------------------------------------------------------------------

def total_domination_number(g: Graph) -> DominationCertificate:
    if g.n == 0:
        return DominationCertificate("gamma_t", 0, frozenset())
    _require_no_isolated(g)
    n = g.n
    adj = g.adj
    full = g.vertex_mask()

    # greedy upper bound: repeatedly take the vertex covering most new
    covered = 0
    greedy: list[int] = []
    while covered != full:
        v = max(range(n), key=lambda u: (adj[u] & ~covered).bit_count())
        greedy.append(v)
        covered |= adj[v]
    best = {"size": len(greedy), "set": tuple(greedy)}
    max_deg = max(row.bit_count() for row in adj)

    def bb(covered: int, chosen: list[int]) -> None:
        if covered == full:
            if len(chosen) < best["size"]:
                best["size"] = len(chosen)
                best["set"] = tuple(chosen)
            return
        remaining = (full & ~covered).bit_count()
        if len(chosen) + (remaining + max_deg - 1) // max_deg >= best["size"]:
            return
        # branch on the uncovered vertex with fewest potential dominators
        u = min(bits(full & ~covered), key=lambda x: adj[x].bit_count())
        for w in bits(adj[u]):
            if w in chosen:
                continue
            chosen.append(w)
            bb(covered | adj[w], chosen)
            chosen.pop()

    bb(0, [])
    return DominationCertificate("gamma_t", best["size"], frozenset(best["set"]))


def total_domination_oracle(g: Graph) -> int:
    """Brute-force minimum total dominating set by subset size; n small only."""
    _require_no_isolated(g)
    if g.n == 0:
        return 0
    full = g.vertex_mask()
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            cov = 0
            for v in combo:
                cov |= g.adj[v]
            if cov == full:
                return size
    raise AssertionError("unreachable: full vertex set totally dominates")


# ---------------------------------------------------------------------------
# Grundy total domination number
# ---------------------------------------------------------------------------
#
# A vertex is playable iff it still dominates something new; once played,
# its whole neighborhood is dominated, so it can never be played again.
# Hence the playable set is a function of the dominated bitset alone and
# memoization on that bitset is sound.

def _grundy_search(adj: tuple[int, ...], n: int, cap: int):
    memo: dict[int, tuple[int, int]] = {}

    def best(dominated: int) -> tuple[int, int]:
        hit = memo.get(dominated)
        if hit is not None:
            return hit
        best_len = 0
        best_v = -1
        undom = n - dominated.bit_count() if n else 0
        for v in range(n):
            if adj[v] & ~dominated:
                # playing v leaves at most (#undominated after v) further moves
                after = dominated | adj[v]
                bound = 1 + (n - after.bit_count())
                if bound <= best_len:
                    continue
                length = 1 + best(after)[0]
                if length > best_len:
                    best_len = length
                    best_v = v
                    if best_len == undom:
                        break
        result = (best_len, best_v)
        if len(memo) < cap:
            memo[dominated] = result
        return result

    return best


def grundy_total_domination_number(
    g: Graph, memo_cap: Optional[int] = None
) -> DominationCertificate:
    if g.n == 0:
        return DominationCertificate("gamma_grt", 0, ())
    _require_no_isolated(g)
    best = _grundy_search(g.adj, g.n, _memo_cap(memo_cap))
    seq: list[int] = []
    dominated = 0
    while True:
        length, v = best(dominated)
        if length == 0:
            break
        seq.append(v)
        dominated |= g.adj[v]
    return DominationCertificate("gamma_grt", len(seq), tuple(seq))


def grundy_greedy_lower_bound(g: Graph) -> int:
    """Length of a maximal legal sequence built greedily (valid lower bound).

    Prefers the move dominating fewest new vertices, which tends to make
    the sequence long; used to discard graphs fast in targeted searches.
    """
    dominated = 0
    length = 0
    n = g.n
    while True:
        pick = -1
        pick_new = n + 1
        for v in range(n):
            new = (g.adj[v] & ~dominated).bit_count()
            if 0 < new < pick_new:
                pick, pick_new = v, new
        if pick < 0:
            return length
        dominated |= g.adj[pick]
        length += 1


def grundy_oracle(g: Graph) -> int:
    """Exhaustive DFS over all legal sequences, no memoization; n <= 12 only."""
    if g.n > 12:
        raise ValueError(f"grundy_oracle limited to n <= 12, got {g.n}")
    if g.n == 0:
        return 0
    _require_no_isolated(g)
    adj = g.adj
    n = g.n

    def dfs(dominated: int, used: int, length: int) -> int:
        out = length
        for v in range(n):
            if not used >> v & 1 and adj[v] & ~dominated:
                got = dfs(dominated | adj[v], used | 1 << v, length + 1)
                if got > out:
                    out = got
        return out

    return dfs(0, 0, 0)


def grundy_bipartite(
    g: Graph, b: Bipartition, memo_cap: Optional[int] = None
) -> DominationCertificate:
    """Grundy total domination via the one-sided neighborhood hypergraph.

    For bipartite G the value is twice the Grundy covering number of
    (A, {N(b) : b in B}); the witness interleaves one maximum legal
    sequence per side.
    """
    from .hypergraph import grundy_covering_number, open_neighborhood_hypergraph

    if g.n == 0:
        return DominationCertificate("gamma_grt", 0, ())
    _require_no_isolated(g)
    h1, h2 = open_neighborhood_hypergraph(g, b)
    side_a = sorted(bits(b.sideA))
    side_b = sorted(bits(b.sideB))
    rho1, seq1 = grundy_covering_number(h1, memo_cap)  # edges of H1 = B-vertices
    rho2, seq2 = grundy_covering_number(h2, memo_cap)  # edges of H2 = A-vertices
    if rho1 != rho2:
        raise AssertionError("one-sided Grundy covering numbers differ on bipartite graph")
    plays_b = [side_b[i] for i in seq1]
    plays_a = [side_a[i] for i in seq2]
    witness = []
    for x, y in zip(plays_b, plays_a):
        witness.extend((x, y))
    return DominationCertificate("gamma_grt", 2 * rho1, tuple(witness))
