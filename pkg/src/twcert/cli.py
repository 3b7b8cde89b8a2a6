"""Batch front end: ingest graphs, partition/certify/verify/solve, emit reports.

Exit codes: 0 on success, 1 on a negative verdict (improper, unverifiable,
unsolvable, or sweep failures), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from typing import Optional

from . import __version__
from .algebra import permanent, weighting_matrix
from .certify import certify_b4, certify_b5
from .covering import (
    build_family_b4,
    build_family_b5,
    find_good_assignment,
    find_good_subset,
    validate_family,
    validate_good_subset,
)
from .errors import InputFormatError, TwcertError
from .generate import nice_atlas_graphs, random_nice_graph, rng_for
from .graphs import Graph, format_graph, parse_graph, partition_by, vector_total
from .sufficiency import certificate_from_json, certificate_to_json
from .weighting import check_proper, format_weighting, parse_lists, solve


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputFormatError(0, f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _edge_list(edges) -> list[list[int]]:
    return [list(e) for e in edges]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_partition(args) -> int:
    g = _load_graph(args.graph)
    try:
        j = sorted({int(tok) for tok in args.J.split(",") if tok.strip()})
    except ValueError:
        print("error: --J expects a comma-separated vertex list", file=sys.stderr)
        return 2
    part = partition_by(g, j)
    if args.json:
        print(json.dumps({
            "J": list(part.j),
            "e1": _edge_list(part.e1), "e2": _edge_list(part.e2),
            "e3": _edge_list(part.e3), "e4": _edge_list(part.e4),
            "v1": list(part.v1), "v2": list(part.v2),
        }))
    else:
        print(f"J = {list(part.j)}")
        for name, edges in (("e1", part.e1), ("e2", part.e2),
                            ("e3", part.e3), ("e4", part.e4)):
            print(f"{name}: " + " ".join(f"{u}-{v}" for u, v in edges))
        print(f"v1: {list(part.v1)}")
        print(f"v2: {list(part.v2)}")
    return 0


def _cmd_good_subset(args) -> int:
    g = _load_graph(args.graph)
    gs = find_good_subset(g)
    violations = validate_good_subset(g, gs.j)
    if args.json:
        print(json.dumps({
            "J": list(gs.j),
            "private": {str(k): v for k, v in sorted(gs.private_map.items())},
            "special": {str(k): list(v) for k, v in sorted(gs.special_map.items())},
            "inside_witnesses": {f"{e[0]}-{e[1]}": i for e, i in sorted(gs.ie_map.items())},
            "violations": violations,
        }))
    else:
        print(f"J = {list(gs.j)}")
        print(f"private neighbours: {dict(sorted(gs.private_map.items()))}")
        print(f"special neighbours: { {k: list(v) for k, v in sorted(gs.special_map.items())} }")
        print(f"inside-edge witnesses: {dict(sorted(gs.ie_map.items()))}")
        print("valid" if not violations else f"violations: {violations}")
    return 0 if not violations else 1


def _cmd_cover(args) -> int:
    g = _load_graph(args.graph)
    gs = find_good_subset(g)
    if args.bound == 5:
        fam = build_family_b5(g, gs)
    else:
        fam = build_family_b4(g, gs, find_good_assignment(g, gs))
    violations = validate_family(g, gs.partition, fam, args.bound)
    if args.json:
        print(json.dumps({
            "J": list(gs.j),
            "C2": [{"edge": list(e), "cover": list(c)} for e, c in fam.c2],
            "C3": [{"path": list(seq), "count": cnt} for seq, cnt in fam.c3],
            "C4": [{"edge": list(e), "walk": list(w)} for e, w in fam.c4],
            "load": list(fam.kc),
            "violations": violations,
        }))
    else:
        print(f"J = {list(gs.j)}")
        print("C2:")
        for e, c in fam.c2:
            print(f"  {e[0]} {e[1]}  <-  {c[0]} {c[1]}")
        print("C3:")
        for seq, cnt in fam.c3:
            print(f"  {' '.join(map(str, seq))}  x{cnt}")
        print("C4:")
        for e, w in fam.c4:
            print(f"  {' '.join(map(str, w))}  (covers {e[0]} {e[1]})")
        print("load: " + " ".join(f"{u}-{v}:{k}" for (u, v), k in zip(g.edges, fam.kc)))
        print("valid" if not violations else f"violations: {violations}")
    return 0 if not violations else 1


def _cmd_certify(args) -> int:
    g = _load_graph(args.graph)
    trace: Optional[list] = [] if args.trace else None
    cert = certify_b4(g, trace) if args.bound == 4 else certify_b5(g, trace)
    if trace:
        for line in trace:
            print(f"# {line}", file=sys.stderr)
    print(certificate_to_json(cert))
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        cert = certificate_from_json(_read(args.certificate))
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise InputFormatError(0, f"bad certificate: {exc}") from None
    problems = []
    if cert.graph != g:
        problems.append("certificate graph differs from the input graph")
    if vector_total(cert.witness) != g.m:
        problems.append("witness total differs from the edge count")
    value = None
    if not problems:
        value = permanent(weighting_matrix(g, cert.witness))
        if value != cert.permanent:
            problems.append(f"recomputed permanent {value} != stored {cert.permanent}")
        if value == 0:
            problems.append("witness permanent is zero")
    if args.json:
        print(json.dumps({"ok": not problems,
                          "permanent": str(value) if value is not None else None,
                          "problems": problems}))
    else:
        if problems:
            for p in problems:
                print(f"FAIL: {p}")
        else:
            print(f"ok: permanent {value}")
    return 0 if not problems else 1


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    lists = parse_lists(_read(args.lists), g)
    phi = solve(g, lists)
    if phi is None:
        if args.json:
            print(json.dumps({"ok": False}))
        else:
            print("no proper weighting")
        return 1
    assert check_proper(g, phi)
    if args.json:
        print(json.dumps({
            "ok": True,
            "vertices": {str(v): str(w) for v, w in sorted(phi.vertex_weights.items())},
            "edges": {f"{u}-{v}": str(w) for (u, v), w in sorted(phi.edge_weights.items())},
        }))
    else:
        print(format_weighting(g, phi), end="")
    return 0


def _sweep_one(task: tuple[int, int, tuple, int, int]) -> dict:
    index, n, edges, bound, seed = task
    g = Graph(n, edges)
    record = {"id": index, "n": n, "m": g.m, "edges": _edge_list(g.edges), "seed": seed}
    try:
        cert = certify_b4(g) if bound == 4 else certify_b5(g)
        record.update(ok=True, cap_max=max(cert.cap, default=0),
                      witness=list(cert.witness), permanent=str(cert.permanent))
    except TwcertError as exc:
        record.update(ok=False, error=str(exc))
    return record


def _cmd_sweep(args) -> int:
    graphs = nice_atlas_graphs(args.max_n)
    tasks = [(i, g.n, g.edges, args.bound, args.seed) for i, g in enumerate(graphs)]
    failures = 0
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            records = pool.map(_sweep_one, tasks, chunksize=8)
    else:
        records = [_sweep_one(t) for t in tasks]
    for record in records:
        if not record["ok"]:
            failures += 1
        print(json.dumps(record))
    print(f"# swept {len(records)} nice graphs up to n={args.max_n}, "
          f"failures {failures}, seed {args.seed}", file=sys.stderr)
    return 0 if failures == 0 else 1


def _cmd_gen(args) -> int:
    rng = rng_for(args.seed, f"gen:n={args.n}:p={args.p}")
    g = random_nice_graph(args.n, args.p, rng)
    sys.stdout.write(format_graph(g))
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twcert",
        description="Exact small-exponent certificates for total weight choosability.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("partition", _cmd_partition, "partition the edge set by a vertex subset")
    p.add_argument("graph")
    p.add_argument("--J", required=True, help="comma-separated vertex list")

    p = add("good-subset", _cmd_good_subset, "construct and validate a good subset")
    p.add_argument("graph")

    p = add("cover", _cmd_cover, "build a covering family with the given load bound")
    p.add_argument("graph")
    p.add_argument("--bound", type=int, choices=(4, 5), default=4)

    p = add("certify", _cmd_certify, "produce a small-exponent certificate")
    p.add_argument("graph")
    p.add_argument("--bound", type=int, choices=(4, 5), default=4)
    p.add_argument("--trace", action="store_true", help="trace construction steps to stderr")

    p = add("verify", _cmd_verify, "recheck a certificate against its graph")
    p.add_argument("graph")
    p.add_argument("certificate")

    p = add("solve", _cmd_solve, "find a proper weighting from a lists file")
    p.add_argument("graph")
    p.add_argument("lists")

    p = add("sweep", _cmd_sweep, "certify every nice graph up to a vertex count")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--bound", type=int, choices=(4, 5), default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    p = add("gen", _cmd_gen, "sample a random nice graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TwcertError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
