"""Small-graph enumeration and filtered searches for equal-invariant graphs.

Builtin enumeration grows graphs one vertex at a time, deduplicating by
canonical form; hereditary filters (bipartite, chordal, connected) prune
parents so the targeted searches stay desk-scale. Larger corpora come in
as graph6 streams.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .domination import (
    grundy_bipartite,
    grundy_greedy_lower_bound,
    grundy_total_domination_number,
    total_domination_number,
)
from .errors import GraphFormatError, SearchSpecError
from .extremal import classify_equal
from .graph import (
    Graph,
    bipartition,
    canonical_form_with_autos,
    has_isolated_vertex,
    is_chordal,
    is_connected,
    is_false_twin_free,
    is_regular,
    parse_graph6,
    to_graph6,
)

BUILTIN_MAX_N = 10
VALID_FILTERS = frozenset(
    {"connected", "bipartite", "non-bipartite", "false-twin-free", "chordal", "regular"}
)


@dataclass(frozen=True)
class SearchSpec:
    max_n: int
    source: str = "builtin"  # "builtin" | "graph6-stream"
    filters: frozenset = frozenset()
    target: Optional[int] = None  # None = report every graph with equal invariants
    stream_path: Optional[str] = None
    chunk_size: int = 1024
    jobs: int = 1

    def __post_init__(self):
        bad = set(self.filters) - VALID_FILTERS
        if bad:
            raise SearchSpecError(f"unknown filters {sorted(bad)}")
        if {"bipartite", "non-bipartite"} <= set(self.filters):
            raise SearchSpecError("bipartite and non-bipartite are mutually exclusive")
        if self.source == "builtin" and self.max_n > BUILTIN_MAX_N:
            raise SearchSpecError(
                f"builtin enumeration capped at n={BUILTIN_MAX_N}; use a graph6 stream"
            )
        if self.source == "graph6-stream" and not self.stream_path:
            raise SearchSpecError("graph6-stream source needs a stream path")
        if self.source not in ("builtin", "graph6-stream"):
            raise SearchSpecError(f"unknown source {self.source!r}")

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "source": self.source,
            "filters": sorted(self.filters),
            "target": self.target,
            "stream_path": self.stream_path,
        }


@dataclass
class SearchReport:
    spec: dict
    graphs_examined: int = 0
    skipped_isolated: int = 0
    matches: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": 1,
                "spec": self.spec,
                "graphs_examined": self.graphs_examined,
                "skipped_isolated": self.skipped_isolated,
                "matches": self.matches,
                "errors": self.errors,
                "elapsed_ms": round(self.elapsed_ms, 3),
            },
            indent=2,
        )


# ---------------------------------------------------------------------------
# builtin enumeration by vertex augmentation
# ---------------------------------------------------------------------------

def _subset_orbit_reps(n: int, autos: list[list[int]]) -> list[int]:
    """One representative neighbor-subset per orbit of the automorphism group."""
    if not autos:
        return list(range(1 << n))
    seen = bytearray(1 << n)
    reps = []
    for mask in range(1 << n):
        if seen[mask]:
            continue
        reps.append(mask)
        stack = [mask]
        seen[mask] = 1
        while stack:
            cur = stack.pop()
            for a in autos:
                img = 0
                m = cur
                while m:
                    low = m & -m
                    img |= 1 << a[low.bit_length() - 1]
                    m ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


def _augment(
    level: list[tuple[Graph, list[list[int]]]],
    require_connected: bool,
    keep: Optional[Callable[[Graph], bool]],
) -> list[tuple[Graph, list[list[int]]]]:
    """All canonical (n+1)-vertex extensions of canonical n-vertex graphs.

    keep must be a hereditary class predicate (closed under induced
    subgraphs) for the level-by-level pruning to be exhaustive; with
    require_connected only nonempty attachments are tried, which is
    complete because every connected graph has a non-cutvertex.
    """
    out: dict[str, tuple[Graph, list[list[int]]]] = {}
    for parent, autos in level:
        n = parent.n
        for mask in _subset_orbit_reps(n, autos):
            if require_connected and mask == 0:
                continue
            adj = list(parent.adj)
            for v in range(n):
                if mask >> v & 1:
                    adj[v] |= 1 << n
            adj.append(mask)
            child = Graph(n + 1, tuple(adj))
            if keep is not None and not keep(child):
                continue
            canon, cautos = canonical_form_with_autos(child)
            key = to_graph6(canon)
            if key not in out:
                out[key] = (canon, cautos)
    return [out[k] for k in sorted(out)]


def _levels(
    max_n: int,
    require_connected: bool = False,
    keep: Optional[Callable[[Graph], bool]] = None,
) -> Iterator[tuple[int, list[Graph]]]:
    k1 = Graph(1, (0,))
    level = [(k1, [])]
    if keep is None or keep(k1):
        yield 1, [k1]
    else:
        level = []
    for n in range(2, max_n + 1):
        level = _augment(level, require_connected, keep)
        yield n, [g for g, _ in level]


def enumerate_unlabeled(n: int) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class on n vertices."""
    if n > BUILTIN_MAX_N:
        raise SearchSpecError(f"builtin enumeration capped at n={BUILTIN_MAX_N}")
    if n < 1:
        return iter(())
    for size, graphs in _levels(n):
        if size == n:
            return iter(graphs)
    raise AssertionError("unreachable")


def count_unlabeled_burnside(n: int) -> int:
    """Independent count of unlabeled n-vertex graphs via Burnside's lemma."""
    from itertools import permutations

    total = 0
    fact = 1
    for perm in permutations(range(n)):
        # cycles of the induced edge permutation
        seen = set()
        cycles = 0
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in seen:
                    continue
                cycles += 1
                a, b = u, v
                while True:
                    seen.add((a, b))
                    a, b = perm[a], perm[b]
                    if a > b:
                        a, b = b, a
                    if (a, b) == (u, v):
                        break
        total += 1 << cycles
    for i in range(2, n + 1):
        fact *= i
    return total // fact


# ---------------------------------------------------------------------------
# graph6 streams
# ---------------------------------------------------------------------------

def stream_graph6(path: str) -> Iterator[tuple[int, Optional[Graph], Optional[str]]]:
    """Lazily yield (line number, graph, error) per non-blank line of a graph6 file."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield lineno, parse_graph6(line), None
            except GraphFormatError as exc:
                yield lineno, None, str(exc)


# ---------------------------------------------------------------------------
# filtered search
# ---------------------------------------------------------------------------

def _passes_filters(g: Graph, filters: frozenset) -> bool:
    if "connected" in filters and not is_connected(g):
        return False
    if "bipartite" in filters or "non-bipartite" in filters:
        bip = bipartition(g) is not None
        if "bipartite" in filters and not bip:
            return False
        if "non-bipartite" in filters and bip:
            return False
    if "false-twin-free" in filters and not is_false_twin_free(g):
        return False
    if "chordal" in filters and not is_chordal(g)[0]:
        return False
    if "regular" in filters and not is_regular(g):
        return False
    return True


def _examine(g: Graph, target: Optional[int]) -> Optional[dict]:
    """Match record when both invariants equal the target (or each other)."""
    if target is not None and grundy_greedy_lower_bound(g) > target:
        return None
    b = bipartition(g)
    cg = grundy_bipartite(g, b) if b is not None else grundy_total_domination_number(g)
    if target is not None and cg.value != target:
        return None
    ct = total_domination_number(g)
    if ct.value != cg.value:
        return None
    if target is not None and ct.value != target:
        return None
    report = classify_equal(g)
    return {
        "graph6": to_graph6(g),
        "gamma_t": ct.value,
        "gamma_grt": cg.value,
        "witness_sequence": list(report.gamma_grt.witness),
        "classification": report.classification,
    }


def _process_chunk(args) -> dict:
    filters, target, chunk = args
    filters = frozenset(filters)
    out = {"examined": 0, "skipped": 0, "matches": [], "errors": []}
    for lineno, g6 in chunk:
        try:
            g = parse_graph6(g6)
        except GraphFormatError as exc:
            out["errors"].append(f"line {lineno}: {exc}")
            continue
        if has_isolated_vertex(g):
            out["skipped"] += 1
            continue
        if not _passes_filters(g, filters):
            continue
        out["examined"] += 1
        rec = _examine(g, target)
        if rec is not None:
            out["matches"].append(rec)
    return out


def _chunked(it: Iterable, size: int) -> Iterator[list]:
    chunk: list = []
    for item in it:
        chunk.append(item)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def run_search(spec: SearchSpec) -> SearchReport:
    start = time.monotonic()
    report = SearchReport(spec=spec.to_dict())
    if spec.source == "builtin":
        keep = None
        if "bipartite" in spec.filters and "chordal" in spec.filters:
            keep = lambda g: bipartition(g) is not None and is_chordal(g)[0]
        elif "bipartite" in spec.filters:
            keep = lambda g: bipartition(g) is not None
        elif "chordal" in spec.filters:
            keep = lambda g: is_chordal(g)[0]
        connected = "connected" in spec.filters
        for _, graphs in _levels(spec.max_n, require_connected=connected, keep=keep):
            for g in graphs:
                if has_isolated_vertex(g):
                    report.skipped_isolated += 1
                    continue
                if not _passes_filters(g, spec.filters):
                    continue
                report.graphs_examined += 1
                rec = _examine(g, spec.target)
                if rec is not None:
                    report.matches.append(rec)
    else:
        lines = _stream_lines(spec.stream_path)
        chunks = _chunked(lines, spec.chunk_size)
        args = ((sorted(spec.filters), spec.target, chunk) for chunk in chunks)
        if spec.jobs > 1:
            with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
                results = list(pool.map(_process_chunk, args))
        else:
            results = [_process_chunk(a) for a in args]
        for r in results:
            report.graphs_examined += r["examined"]
            report.skipped_isolated += r["skipped"]
            report.matches.extend(r["matches"])
            report.errors.extend(r["errors"])
    report.matches.sort(key=lambda m: m["graph6"])
    report.elapsed_ms = (time.monotonic() - start) * 1000.0
    return report


def _stream_lines(path: str) -> Iterator[tuple[int, str]]:
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                yield lineno, line.strip()
