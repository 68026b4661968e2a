"""Command-line driver.

Exit codes: 0 success/found, 1 none-exists (a verified negative),
2 malformed input, 3 embedded-homology falsification, 4 search truncated.
JSON output is canonical: sorted keys, no timestamps, byte-identical for
identical inputs and flags.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import corpus as corpus_pkg
from .exact_linalg import ring_from_name
from .graph_topology import (
    Graph,
    cycle,
    directed_independence_complex,
    distance_power,
    independence_complex,
    path,
    skeleton,
)
from .homology_engine import (
    EmbeddedHomologyMismatch,
    chain_complex,
    embedded_homology,
    sigma_invariant_comparison,
)
from .hyperstructures import Hyperdigraph, hyper_from_json
from .matroids import (
    FIRST_COORDINATE,
    FULL_ORBIT,
    VectorSet,
    affine_matroid,
    directed_vectorial_matroid,
    vectorial_matroid,
)
from .obstruction import (
    FOUND,
    NONE_EXISTS,
    TRUNCATED,
    assignment_from_json,
    induced_diagram_report,
    kunneth_obstruction_report,
    mv_obstruction_report,
    search_k_regular_embedding,
    verify_k_regular,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2
EXIT_FALSIFIED = 3
EXIT_TRUNCATED = 4


class InputError(Exception):
    pass


def _load_json(path_):
    try:
        with open(path_) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path_}: {exc}") from exc


def _load_graph(path_):
    data = _load_json(path_)
    try:
        return Graph.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad graph file {path_}: {exc}") from exc


def _load_vectors(path_):
    data = _load_json(path_)
    try:
        return VectorSet.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad vector file {path_}: {exc}") from exc


def _emit(payload, fmt, render_text):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        render_text(payload)


def _group_text(g):
    parts = []
    if g["rank"] == 1:
        parts.append("Z")
    elif g["rank"] > 1:
        parts.append(f"Z^{g['rank']}")
    parts.extend(f"Z/{d}" for d in g["torsion"])
    return " ⊕ ".join(parts) if parts else "0"


def _degrees_table(degrees):
    for row in degrees:
        print(f"  H_{row['n']} = {_group_text(row)}")


def cmd_gen(args):
    if args.kind == "cycle":
        g = cycle(int(args.arg1))
    elif args.kind == "path":
        g = path(int(args.arg1))
    elif args.kind == "power":
        g = distance_power(_load_graph(args.arg1), int(args.arg2))
    else:
        raise InputError(f"unknown generator {args.kind}")
    print(json.dumps(g.to_json(), sort_keys=True, separators=(",", ":")))
    return EXIT_OK


def cmd_ind(args):
    g = _load_graph(args.graph)
    ring = ring_from_name(args.ring)
    build = directed_independence_complex if args.directed else independence_complex
    K = build(g, max_card=args.max_card)
    if args.skeleton is not None:
        K = skeleton(K, args.skeleton)
    C = chain_complex(K, ring, augmented=args.reduced)
    degrees = [{"n": n, **C.homology(n).group.to_json()}
               for n in range(0, C.top + 1)]
    payload = {"ring": ring.name, "directed": bool(args.directed),
               "reduced": bool(args.reduced), "degrees": degrees}

    def text(p):
        kind = "directed independence complex" if p["directed"] else "independence complex"
        flavor = "reduced homology" if p["reduced"] else "homology"
        print(f"{flavor} of the {kind} over {p['ring']}:")
        _degrees_table(p["degrees"])

    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_embedded(args):
    data = _load_json(args.hyper)
    try:
        H = hyper_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad hyper(di)graph file: {exc}") from exc
    ring = ring_from_name(args.ring)
    try:
        eh = embedded_homology(H, ring)
    except EmbeddedHomologyMismatch as exc:
        print(json.dumps({
            "falsified": True,
            "degree": exc.degree,
            "inf": exc.inf_group.to_json(),
            "sup": exc.sup_group.to_json(),
            "minimized_edges": [list(e) for e in exc.hyper.edges()],
        }, sort_keys=True, separators=(",", ":")))
        return EXIT_FALSIFIED
    degrees = [{"n": n, **g.to_json()} for n, g in sorted(eh.groups.items())]
    payload = {"ring": ring.name, "degrees": degrees,
               "quasi_isomorphism_certificate": True}

    def text(p):
        print(f"embedded homology over {p['ring']} (Inf and Sup agree):")
        _degrees_table(p["degrees"])

    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_matroid(args):
    vs = _load_vectors(args.vectors)
    ring = ring_from_name(args.ring)
    if args.affine:
        m = affine_matroid(vs)
        complex_ = m.complex()
        counts = {k: len(m.independent_sets_of_size(k)) for k in range(1, m.rank + 1)}
        payload = {"kind": "affine", "rank": m.rank, "counts": counts}
    elif args.directed:
        mode = FIRST_COORDINATE if args.ordered else FULL_ORBIT
        dm = directed_vectorial_matroid(vs, mode=mode)
        complex_ = dm.complex()
        counts = {k: len(dm.sequences_of_size(k)) for k in range(1, dm.rank + 1)}
        payload = {"kind": f"directed ({mode})", "rank": dm.rank, "counts": counts,
                   "sigma_invariant": dm.is_sigma_invariant()}
    else:
        m = vectorial_matroid(vs)
        complex_ = m.complex()
        counts = {k: len(m.independent_sets_of_size(k)) for k in range(1, m.rank + 1)}
        payload = {"kind": "vectorial", "rank": m.rank, "counts": counts}
        if args.dual:
            d = m.dual()
            payload["dual_rank"] = d.rank
            payload["rank_identity"] = m.rank + d.rank == len(m.ground)
    if len(complex_):
        C = chain_complex(complex_, ring)
        payload["homology"] = [{"n": n, **C.homology(n).group.to_json()}
                               for n in range(0, C.top + 1)]
    else:
        payload["homology"] = []
    payload["counts"] = {str(k): v for k, v in payload["counts"].items()}

    def text(p):
        print(f"{p['kind']} matroid: rank {p['rank']}")
        for k, v in sorted(p["counts"].items(), key=lambda kv: int(kv[0])):
            print(f"  level {k}: {v}")
        if "dual_rank" in p:
            print(f"  dual rank {p['dual_rank']} (identity: {p['rank_identity']})")
        print(f"homology of the independence complex over {args.ring}:")
        _degrees_table(p["homology"])

    _emit(payload, args.format, text)
    return EXIT_OK


def cmd_search(args):
    g = _load_graph(args.graph)
    vs = _load_vectors(args.vectors)
    m = affine_matroid(vs) if args.affine else vectorial_matroid(vs)
    rep = search_k_regular_embedding(g, m, args.k, injective=args.injective,
                                     all_solutions=args.all_solutions,
                                     node_budget=args.budget)
    payload = rep.to_json()

    def text(p):
        print(f"verdict: {p['verdict']} (nodes explored: {p['nodes_explored']})")
        if "witness" in p:
            print("witness:", json.dumps(p["witness"]["map"], sort_keys=True))

    _emit(payload, args.format, text)
    if rep.verdict == FOUND:
        return EXIT_OK
    if rep.verdict == TRUNCATED:
        return EXIT_TRUNCATED
    return EXIT_NEGATIVE


def _assignment_or_search(args, g, vs):
    if args.assignment:
        f = assignment_from_json(_load_json(args.assignment))
        ok, witness = verify_k_regular(g, f, args.k, vectorial_matroid(vs))
        if not ok:
            raise InputError(f"assignment is not {args.k}-regular "
                             f"(violating independent set {witness})")
        return f
    rep = search_k_regular_embedding(g, vectorial_matroid(vs), args.k)
    if rep.verdict != FOUND:
        return None
    return rep.witness


def cmd_diagram(args):
    g = _load_graph(args.graph)
    vs = _load_vectors(args.vectors)
    ring = ring_from_name(args.ring)
    f = _assignment_or_search(args, g, vs)
    if f is None:
        print(json.dumps({"verdict": NONE_EXISTS}, sort_keys=True,
                         separators=(",", ":")))
        return EXIT_NEGATIVE
    sub = None
    if args.subhyperdigraph:
        sub = Hyperdigraph.from_json(_load_json(args.subhyperdigraph))
    diag = induced_diagram_report(g, f, args.k, vs, ring, sub_hyperdigraph=sub)
    payload = {
        "assignment": {str(v): l for v, l in sorted(f.items())},
        "squares_commute": diag["squares_commute"],
        "degrees": [{"n": n,
                     "ordered": row["ordered"].to_json(),
                     "unordered": row["unordered"].to_json(),
                     "matroid_ordered": row["matroid_ordered"].to_json(),
                     "matroid_unordered": row["matroid_unordered"].to_json(),
                     "square_commutes": row["square_commutes"]}
                    for n, row in sorted(diag["degrees"].items())],
    }

    def text(p):
        print(f"projection squares commute: {p['squares_commute']}")
        for row in p["degrees"]:
            print(f"  degree {row['n']}: "
                  f"H(ordered)={_group_text(row['ordered'])}, "
                  f"H(underlying)={_group_text(row['unordered'])}, "
                  f"square={row['square_commutes']}")

    _emit(payload, args.format, text)
    return EXIT_OK if diag["squares_commute"] else EXIT_NEGATIVE


def cmd_mv(args):
    g1, g2, g3 = (_load_graph(p) for p in (args.graph1, args.graph2, args.graph3))
    vs = _load_vectors(args.vectors)
    ring = ring_from_name(args.ring)
    f1 = assignment_from_json(_load_json(args.f1))
    f2 = assignment_from_json(_load_json(args.f2))
    f3 = assignment_from_json(_load_json(args.f3))
    res = mv_obstruction_report(g1, g2, g3, f1, f2, f3, args.k, vs, ring)
    payload = res.to_json()

    def text(p):
        print(f"rows exact: {p['rows_exact']}; squares commute: {p['squares_commute']}")

    _emit(payload, args.format, text)
    return EXIT_OK if res.ok else EXIT_NEGATIVE


def cmd_kunneth(args):
    g1, g2 = _load_graph(args.graph1), _load_graph(args.graph2)
    vs1, vs2 = _load_vectors(args.vectors1), _load_vectors(args.vectors2)
    ring = ring_from_name(args.ring)
    f1 = assignment_from_json(_load_json(args.f1))
    f2 = assignment_from_json(_load_json(args.f2))
    res = kunneth_obstruction_report(g1, g2, f1, f2, args.k, args.k2, vs1, vs2,
                                     ring, directed=not args.undirected)
    payload = res.to_json()

    def text(p):
        print(f"rows verified: {p['rows_verified']}; "
              f"squares commute: {p['squares_commute']}")

    _emit(payload, args.format, text)
    return EXIT_OK if res.ok else EXIT_NEGATIVE


def cmd_sigma(args):
    data = _load_json(args.hyper)
    try:
        H = Hyperdigraph.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad hyperdigraph: {exc}") from exc
    ring = ring_from_name(args.ring)
    rep = sigma_invariant_comparison(H, ring)
    payload = rep.to_json()

    def text(p):
        print(f"chain identity rank C(ordered) = k! rank C(unordered): "
              f"{p['chain_identity']}")
        for n, row in sorted(p["homology"].items(), key=lambda kv: int(kv[0])):
            print(f"  degree {n}: {row['verdict']}")

    _emit(payload, args.format, text)
    return EXIT_OK


def _run_corpus_case(case):
    kind = case["kind"]
    if kind == "ind":
        g = Graph.from_json(case["graph"])
        ring = ring_from_name(case.get("ring", "Z"))
        K = independence_complex(g)
        C = chain_complex(K, ring, augmented=case.get("reduced", False))
        got = {str(n): C.homology(n).group.to_json() for n in range(0, C.top + 1)}
        return got == case["expect"], got
    if kind == "embedded":
        H = hyper_from_json(case["hyper"])
        ring = ring_from_name(case.get("ring", "Z"))
        try:
            eh = embedded_homology(H, ring)
        except EmbeddedHomologyMismatch:
            return False, "falsified"
        got = {str(n): g.to_json() for n, g in sorted(eh.groups.items())}
        return got == case["expect"], got
    if kind == "matroid":
        vs = VectorSet.from_json(case["vectors"])
        m = vectorial_matroid(vs)
        got = {"rank": m.rank, "dual_rank": m.dual().rank}
        return got == case["expect"], got
    if kind == "search":
        g = Graph.from_json(case["graph"])
        vs = VectorSet.from_json(case["vectors"])
        rep = search_k_regular_embedding(g, vectorial_matroid(vs), case["k"])
        return rep.verdict == case["expect"], rep.verdict
    if kind == "sigma":
        H = Hyperdigraph.from_json(case["hyper"])
        rep = sigma_invariant_comparison(H, ring_from_name(case.get("ring", "Z")))
        got = {"chain_identity": rep.chain_identity_holds,
               "mismatch_degrees": sorted(int(n) for n, row in rep.homology_rows.items()
                                          if not row["match"])}
        return got == case["expect"], got
    if kind == "mv":
        from .homology_engine import mayer_vietoris
        A = hyper_from_json(case["a"])
        B = hyper_from_json(case["b"])
        ladder = mayer_vietoris(A, B, ring_from_name(case.get("ring", "Z")))
        got = {"rows_exact": ladder.rows_exact,
               "squares_commute": ladder.squares_commute}
        return got == case["expect"], got
    if kind == "kunneth":
        from .homology_engine import kunneth
        A = hyper_from_json(case["a"])
        B = hyper_from_json(case["b"])
        ladder = kunneth(A, B, ring_from_name(case.get("ring", "Z")))
        got = {"rows_verified": ladder.rows_verified,
               "squares_commute": ladder.squares_commute}
        return got == case["expect"], got
    return False, f"unknown case kind {kind!r}"


def cmd_corpus(args):
    directory = args.dir or os.path.dirname(corpus_pkg.__file__)
    if not os.path.isdir(directory):
        raise InputError(f"corpus directory {directory} does not exist")
    names = sorted(f for f in os.listdir(directory) if f.endswith(".json"))
    if args.filter:
        names = [n for n in names if args.filter in n]
    if not names:
        raise InputError("no corpus cases matched")
    cases = []
    for name in names:
        with open(os.path.join(directory, name)) as fh:
            cases.append((name, json.load(fh)))
    workers = int(os.environ.get("REG_OBSTRUCT_THREADS", "1"))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda nc: _run_corpus_case(nc[1]), cases))
    else:
        results = [_run_corpus_case(c) for _, c in cases]
    failures = 0
    for (name, _), (ok, got) in zip(cases, results):
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1
            print(f"      got: {got}")
    print(f"{len(cases) - failures}/{len(cases)} corpus cases passed")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="regobstruct",
        description="independence complexes, embedded homology, matroids, and "
                    "regular-embedding obstructions over exact rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate graph JSON (cycle n | path n | power g.json l)")
    p.add_argument("kind", choices=["cycle", "path", "power"])
    p.add_argument("arg1")
    p.add_argument("arg2", nargs="?")
    p.set_defaults(func=cmd_gen)

    def common(p):
        p.add_argument("--ring", default="Z")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("ind", help="homology of the (directed) independence complex")
    p.add_argument("graph")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--skeleton", type=int, default=None)
    p.add_argument("--max-card", type=int, default=None, dest="max_card")
    common(p)
    p.set_defaults(func=cmd_ind)

    p = sub.add_parser("embedded", help="embedded homology of a hyper(di)graph")
    p.add_argument("hyper")
    common(p)
    p.set_defaults(func=cmd_embedded)

    p = sub.add_parser("matroid", help="vectorial matroid report")
    p.add_argument("vectors")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--affine", action="store_true")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--ordered", action="store_true",
                   help="first-coordinate-ordered directed matroid")
    common(p)
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser("search", help="decide k-regular embeddability")
    p.add_argument("graph")
    p.add_argument("vectors")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--injective", action="store_true")
    p.add_argument("--affine", action="store_true",
                   help="use affine instead of linear independence")
    p.add_argument("--all", action="store_true", dest="all_solutions")
    p.add_argument("--budget", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("diagram", help="verify the projection square for an embedding")
    p.add_argument("graph")
    p.add_argument("vectors")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--assignment", default=None)
    p.add_argument("--subhyperdigraph", default=None)
    common(p)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("mv", help="Mayer-Vietoris obstruction ladders for a triple")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("graph3")
    p.add_argument("vectors")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--f1", required=True)
    p.add_argument("--f2", required=True)
    p.add_argument("--f3", required=True)
    common(p)
    p.set_defaults(func=cmd_mv)

    p = sub.add_parser("kunneth", help="Kunneth obstruction ladders for a pair")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("vectors1")
    p.add_argument("vectors2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--f1", required=True)
    p.add_argument("--f2", required=True)
    p.add_argument("--undirected", action="store_true")
    common(p)
    p.set_defaults(func=cmd_kunneth)

    p = sub.add_parser("sigma", help="order-invariance comparison report")
    p.add_argument("hyper")
    common(p)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("corpus", help="run the bundled regression corpus")
    p.add_argument("--filter", default=None)
    p.add_argument("--dir", default=None)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
