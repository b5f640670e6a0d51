"""Command-line entry point: solve, construct, extract-oa, verify, search.

Output is JSON by default (--plain for human-readable text). Exit codes:
0 success, 1 property failure / counterexample, 2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import corpus
from .designs import (
    affine_plane_from_mols,
    design_to_text,
    latin_to_text,
    mols_family,
    mols_to_oa,
    oa_to_text,
    projective_from_affine,
)
from .domination import (
    grundy_bipartite,
    grundy_total_domination_number,
    total_domination_number,
)
from .enumeration import SearchSpec, run_search
from .errors import (
    ExtractionError,
    GraphFormatError,
    IsolatedVertexError,
    SearchSpecError,
    UnsupportedOrderError,
)
from .extremal import (
    figure1_graph,
    graph_from_oa,
    knn_minus_matching,
    oa_from_graph,
    verify_pair_domination,
)
from .graph import (
    Graph,
    bipartition,
    bits,
    is_false_twin_free,
    is_regular,
    parse_graph6,
    to_graph6,
)
from .hypergraph import (
    grundy_covering_number,
    grundy_transversal_number,
    incidence_graph,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def builtin_graph(name: str) -> Graph:
    if name == "fig1":
        return figure1_graph()
    if name.startswith("knn-m:"):
        return knn_minus_matching(int(name.split(":", 1)[1]))
    if name.startswith("oa-graph:"):
        q = int(name.split(":", 1)[1])
        g, _ = graph_from_oa(mols_to_oa(mols_family(q)))
        return g
    raise ValueError(f"unknown builtin {name!r}")


def _load_graph(args) -> Graph:
    if args.builtin:
        return builtin_graph(args.builtin)
    if args.graph6:
        return parse_graph6(args.graph6)
    with open(args.file, "r", encoding="ascii") as fh:
        return parse_graph6(fh.readline())


def _emit(payload: dict, plain: bool) -> None:
    if plain:
        for k, v in payload.items():
            print(f"{k}: {v}")
    else:
        print(json.dumps({"schema_version": 1, **payload}, indent=2, default=str))


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", help="fig1 | knn-m:<n> | oa-graph:<q>")
    src.add_argument("--graph6", help="inline graph6 string")
    src.add_argument("--file", help="file whose first line is a graph6 string")


def cmd_solve(args) -> int:
    g = _load_graph(args)
    out: dict = {"n": g.n, "graph6": to_graph6(g)}
    if args.which in ("gt", "both"):
        c = total_domination_number(g)
        out["gamma_t"] = c.value
        if args.witness:
            out["gamma_t_witness"] = sorted(c.witness)
    if args.which in ("ggrt", "both"):
        b = bipartition(g)
        c = grundy_bipartite(g, b) if b is not None else grundy_total_domination_number(g)
        out["gamma_grt"] = c.value
        if args.witness:
            out["gamma_grt_witness"] = list(c.witness)
    _emit(out, args.plain)
    return EXIT_OK


def cmd_construct(args) -> int:
    name = args.family
    if name.startswith(("knn-m:", "oa-graph:")) or name == "fig1":
        text = to_graph6(builtin_graph(name)) + "\n"
    elif name.startswith("mols:"):
        q = int(name.split(":", 1)[1])
        text = "\n".join(latin_to_text(ls).rstrip("\n") for ls in mols_family(q)) + "\n"
    elif name.startswith("oa:"):
        q = int(name.split(":", 1)[1])
        text = oa_to_text(mols_to_oa(mols_family(q)))
    elif name.startswith("affine:"):
        q = int(name.split(":", 1)[1])
        text = design_to_text(affine_plane_from_mols(mols_family(q)))
    elif name.startswith("projective:"):
        q = int(name.split(":", 1)[1])
        text = design_to_text(projective_from_affine(affine_plane_from_mols(mols_family(q))))
    else:
        raise ValueError(f"unknown family {name!r}")
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_extract_oa(args) -> int:
    g = _load_graph(args)
    b = bipartition(g)
    if b is None:
        print("error: graph is not bipartite", file=sys.stderr)
        return EXIT_INPUT
    oa, ctx = oa_from_graph(g, b)
    payload = {
        "oa": oa_to_text(oa).rstrip("\n").split("\n"),
        "context": {
            "k": ctx.k,
            "n": ctx.n,
            "a1": ctx.a1,
            "a2": ctx.a2,
            "ell": ctx.ell,
            "b_star": ctx.b_star,
            "B1": sorted(bits(ctx.B1)),
            "B2": sorted(bits(ctx.B2)),
            "Bprime_size": ctx.Bprime.bit_count(),
            "Aprime": sorted(bits(ctx.Aprime)),
            "Adoubleprime_size": ctx.Adoubleprime.bit_count(),
            "classes": [sorted(bits(c)) for c in ctx.classes],
        },
    }
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(oa_to_text(oa))
    _emit(payload, args.plain)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _suite_evenness(seed: int) -> tuple[bool, str]:
    for g in corpus.random_bipartite_corpus(seed, 1000, max_n=14):
        b = bipartition(g)
        cert = grundy_total_domination_number(g)
        if cert.value % 2:
            return False, f"odd gamma_grt on {to_graph6(g)}"
        half = cert.value // 2
        in_a = sum(1 for v in cert.witness if b.sideA >> v & 1)
        if in_a != half:
            return False, f"side-unbalanced witness on {to_graph6(g)}"
    return True, "1000 bipartite instances: even and side-balanced"


def _suite_prop_transversal(seed: int) -> tuple[bool, str]:
    for h in corpus.random_hypergraph_corpus(seed, 500):
        if grundy_transversal_number(h)[0] != grundy_covering_number(h)[0]:
            return False, f"tau_gr != rho_gr on {h}"
    return True, "500 hypergraphs: tau_gr == rho_gr"


def _suite_thm_incidence(seed: int) -> tuple[bool, str]:
    for h in corpus.random_hypergraph_corpus(seed, 500):
        g, b = incidence_graph(h)
        if grundy_bipartite(g, b).value != 2 * grundy_covering_number(h)[0]:
            return False, f"gamma_grt(incidence) != 2 rho_gr on {h}"
    return True, "500 hypergraphs: gamma_grt(incidence) == 2 rho_gr"


def _suite_thm_knn(seed: int) -> tuple[bool, str]:
    for n in range(2, 9):
        g = knn_minus_matching(n)
        if total_domination_number(g).value != 4:
            return False, f"gamma_t(K_{n},{n}-M) != 4"
        if grundy_bipartite(g, bipartition(g)).value != 4:
            return False, f"gamma_grt(K_{n},{n}-M) != 4"
    from .extremal import recognize_knn_minus_matching

    spec = SearchSpec(max_n=9, filters=frozenset({"bipartite", "false-twin-free"}), target=4)
    rep = run_search(spec)
    for m in rep.matches:
        if not recognize_knn_minus_matching(parse_graph6(m["graph6"])):
            return False, f"value-4 bipartite graph outside family: {m['graph6']}"
    return True, f"family exact for n in 2..8; search n<=9 found {len(rep.matches)} members, all recognized"


def _suite_thm_chordal(seed: int) -> tuple[bool, str]:
    spec = SearchSpec(max_n=9, filters=frozenset({"connected", "chordal"}), target=4)
    rep = run_search(spec)
    if rep.matches:
        return False, f"chordal counterexample: {rep.matches[0]['graph6']}"
    return True, f"0 matches among {rep.graphs_examined} connected chordal graphs, n <= 9"


def _suite_thm_oa(seed: int) -> tuple[bool, str]:
    from .graph import canonical_form

    for q in (2, 3, 4):
        g, b = graph_from_oa(mols_to_oa(mols_family(q)))
        k = q + 1
        n = k * k - k + 1
        if not (is_regular(g) and g.degree(0) == n - k and g.n == 2 * n):
            return False, f"q={q}: construction not (n-k)-regular on 2n vertices"
        if total_domination_number(g).value != 6:
            return False, f"q={q}: gamma_t != 6"
        if grundy_bipartite(g, b).value != 6:
            return False, f"q={q}: gamma_grt != 6"
        oa2, _ = oa_from_graph(g, b)
        g2, _ = graph_from_oa(oa2)
        if canonical_form(g2) != canonical_form(g):
            return False, f"q={q}: OA round trip changed the graph"
    for q in (5, 7, 8, 9):
        g, b = graph_from_oa(mols_to_oa(mols_family(q)))
        k = q + 1
        n = k * k - k + 1
        if not (is_regular(g) and g.degree(0) == n - k):
            return False, f"q={q}: regularity failure"
        if not is_false_twin_free(g):
            return False, f"q={q}: construction has false twins"
        if not verify_pair_domination(g, b):
            return False, f"q={q}: pair-domination lemma fails"
        oa2, _ = oa_from_graph(g, b)
        g2, _ = graph_from_oa(oa2)
        if g2.n != g.n:
            return False, f"q={q}: round-trip size mismatch"
    return True, "q in {2,3,4} exact (both invariants 6); q in {5,7,8,9} structural"


def _suite_lemma_pair(seed: int) -> tuple[bool, str]:
    g = figure1_graph()
    if not verify_pair_domination(g, bipartition(g)):
        return False, "pair-domination fails on the 14-vertex builtin"
    for q in (2, 3, 4, 5):
        g, b = graph_from_oa(mols_to_oa(mols_family(q)))
        if not verify_pair_domination(g, b):
            return False, f"pair-domination fails on oa-graph:{q}"
    return True, "pair-domination holds on fig1 and oa-graph:{2,3,4,5}"


SUITES = {
    "evenness": _suite_evenness,
    "prop-transversal": _suite_prop_transversal,
    "thm-incidence": _suite_thm_incidence,
    "thm-knn": _suite_thm_knn,
    "thm-chordal": _suite_thm_chordal,
    "thm-oa": _suite_thm_oa,
    "lemma-pair": _suite_lemma_pair,
}


def cmd_verify(args) -> int:
    ok, detail = SUITES[args.suite](args.seed)
    _emit({"suite": args.suite, "status": "pass" if ok else "fail", "detail": detail}, args.plain)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_search(args) -> int:
    filters = set()
    for name in ("connected", "bipartite", "non_bipartite", "twin_free", "chordal", "regular"):
        if getattr(args, name):
            filters.add(
                {"non_bipartite": "non-bipartite", "twin_free": "false-twin-free"}.get(name, name)
            )
    spec = SearchSpec(
        max_n=args.max_n,
        source="graph6-stream" if args.stream else "builtin",
        filters=frozenset(filters),
        target=None if args.report_all else args.target,
        stream_path=args.stream,
        jobs=args.jobs,
    )
    report = run_search(spec)
    print(report.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domlab", description=__doc__)
    p.add_argument("--plain", action="store_true", help="plain text instead of JSON")
    # also accepted after the subcommand; SUPPRESS keeps the subparser from
    # clobbering a --plain given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--plain", action="store_true", default=argparse.SUPPRESS,
        help="plain text instead of JSON",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="compute gamma_t / gamma_grt", parents=[common])
    _add_graph_source(sp)
    sp.add_argument("--which", choices=("gt", "ggrt", "both"), default="both")
    sp.add_argument("--witness", action="store_true")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("construct", help="emit a named family artifact", parents=[common])
    sp.add_argument("family", help="knn-m:<n> | oa-graph:<q> | mols:<q> | oa:<q> | affine:<q> | projective:<q>")
    sp.add_argument("--out", help="write to file instead of stdout")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("extract-oa", help="extract an orthogonal array from a value-6 graph", parents=[common])
    _add_graph_source(sp)
    sp.add_argument("--out", help="also write the OA text format to a file")
    sp.set_defaults(func=cmd_extract_oa)

    sp = sub.add_parser("verify", help="run a named property suite", parents=[common])
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="filtered search for equal-invariant graphs", parents=[common])
    sp.add_argument("--max-n", type=int, default=7)
    sp.add_argument("--stream", help="graph6 file, one graph per line")
    sp.add_argument("--target", type=int, default=None)
    sp.add_argument("--report-all", action="store_true")
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--bipartite", action="store_true")
    sp.add_argument("--non-bipartite", dest="non_bipartite", action="store_true")
    sp.add_argument("--twin-free", dest="twin_free", action="store_true")
    sp.add_argument("--chordal", action="store_true")
    sp.add_argument("--regular", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, FileNotFoundError, UnsupportedOrderError, ValueError) as exc:
        if isinstance(exc, SearchSpecError):
            print(f"usage error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if isinstance(exc, (ExtractionError, IsolatedVertexError)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL if isinstance(exc, ExtractionError) else EXIT_INPUT
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
