"""Command line front end.

Every verb prints one JSON document (``chi-dp`` prints a bare number unless
``--json`` is given).  Exit status is 0 on success, 1 when the input is
refused and 2 when an internal bound fails; in the last two cases the
output is an error record ``{"error": ..., "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from collections import Counter

from . import __version__
from .cover import dumps_assignment, loads_assignment, random_assignment
from .errors import InternalConsistencyError, OutsideCatalog, Refusal
from .graph import (degree_stats, format_edge_list, is_mp2, mp2_reasons,
                    parse_edge_list)
from .mp2 import registry as cat
from .mp2.registry import case_procedure
from .pipeline import run_pipeline
from .solver import dp_chromatic_number_exact, solve_exact, verify_coloring
from .transform import renames_to_dict, straighten_tree

EXIT_OK, EXIT_REFUSAL, EXIT_INTERNAL = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def _read_graph(path):
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _read_assignment(path, g):
    with open(path) as fh:
        return loads_assignment(fh.read(), g)


def _parse_params(text):
    """``"n=2,m=1"`` -> {"n": 2, "m": 1}; empty -> {}."""
    out = {}
    for part in filter(None, (text or "").split(",")):
        key, sep, val = part.partition("=")
        if not sep:
            raise Refusal(f"parameter {part!r} is not of the form name=value")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise Refusal(f"parameter {key!r} needs an integer value") from None
    return out


def _parse_tree(text, g):
    by_name = {str(v): v for v in g}
    edges = []
    for part in filter(None, text.replace(";", ",").split(",")):
        ends = part.replace("-", " ").split()
        if len(ends) != 2 or any(e not in by_name for e in ends):
            raise Refusal(f"tree edge {part!r} does not name two vertices")
        edges.append((by_name[ends[0]], by_name[ends[1]]))
    return edges


# ---------------------------------------------------------------------------
# verbs

def cmd_diam(args, out):
    g = _read_graph(args.graph)
    s = degree_stats(g)
    d = s.diameter if s.diameter != float("inf") else "infinite"
    out.write(_dump({"vertices": g.n, "edges": g.m, "diameter": d,
                     "min_degree": s.min_degree, "max_degree": s.max_degree}) + "\n")


def cmd_check_mp2(args, out):
    g = _read_graph(args.graph)
    out.write(_dump({"mp2": is_mp2(g), "reasons": mp2_reasons(g)}) + "\n")


def cmd_catalog(args, out):
    if args.action == "list":
        rows = []
        for name in cat.names():
            keys = cat.family_params(name)
            row = {"name": name, "params": keys}
            if keys:
                row["min"] = list(cat.family_min(name))
            else:
                g = cat.catalog(name).graph
                row.update(vertices=g.n, edges=g.m)
            rows.append(row)
        out.write(_dump(rows) + "\n")
        return
    if not args.name:
        raise Refusal("catalog emit needs an entry name")
    entry = cat.catalog(args.name, _parse_params(args.params))
    if args.format == "json":
        out.write(_dump({
            "name": entry.name, "params": entry.param_dict,
            "vertices": [str(v) for v in entry.graph],
            "edges": [[str(u), str(v)] for u, v in entry.graph.edges()],
            "triangles": {k: list(t) for k, t in entry.named_triangles.items()},
        }) + "\n")
    else:
        out.write(f"# {entry.label}\n" + format_edge_list(entry.graph))


def cmd_assign(args, out):
    g = _read_graph(args.graph)
    out.write(dumps_assignment(random_assignment(g, args.k, args.seed)))


def cmd_color(args, out):
    g = _read_graph(args.graph)
    m = _read_assignment(args.assignment, g)
    res = run_pipeline(g, m)
    cert = res.to_dict()
    cert["verified"] = verify_coloring(m, res.coloring)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(res.trace.dumps())
        cert["trace"] = args.trace
    out.write(_dump(cert) + "\n")


def cmd_solve(args, out):
    g = _read_graph(args.graph)
    m = _read_assignment(args.assignment, g)
    res = solve_exact(m)
    doc = res.to_dict()
    if res.sat:
        doc["verified"] = verify_coloring(m, res.coloring)
    out.write(_dump(doc) + "\n")


def cmd_chi_dp(args, out):
    g = _read_graph(args.graph)
    res = dp_chromatic_number_exact(g, args.kmax, budget=args.budget)
    if not args.json:
        out.write(f"{res.value if res.value is not None else f'>{args.kmax}'}\n")
        return
    from .cover import assignment_to_dict
    out.write(_dump({
        "chi_dp": res.value, "kmax": args.kmax,
        "counterexamples": {str(k): assignment_to_dict(m)
                            for k, m in res.counterexamples.items()},
    }) + "\n")


def cmd_fuzz(args, out):
    entry = cat.catalog(args.name, _parse_params(args.params))
    rng = random.Random(args.seed)
    seeds = [rng.randrange(2 ** 32) for _ in range(args.trials)]
    branches = Counter()
    failures = []
    for i, s in enumerate(seeds):
        m = random_assignment(entry.graph, 4, s)
        try:
            col, trace = case_procedure(entry, m)
            if not verify_coloring(m, col):
                raise InternalConsistencyError("coloring does not verify", trace)
            branches[" / ".join(trace.branches()) or "-"] += 1
        except InternalConsistencyError as exc:
            rec = {"trial": i, "seed": s, "message": str(exc)}
            if args.artifacts:
                os.makedirs(args.artifacts, exist_ok=True)
                path = os.path.join(args.artifacts, f"{entry.label}-trial{i}.json")
                with open(path, "w") as fh:
                    fh.write(dumps_assignment(m))
                gpath = os.path.join(args.artifacts, f"{entry.label}.edges")
                with open(gpath, "w") as fh:
                    fh.write(format_edge_list(entry.graph))
                rec["assignment"] = path
            failures.append(rec)
    out.write(_dump({"entry": entry.label, "trials": args.trials, "seed": args.seed,
                     "failures": failures, "branches": dict(sorted(branches.items()))}) + "\n")
    return EXIT_INTERNAL if failures else EXIT_OK


def cmd_straighten(args, out):
    g = _read_graph(args.graph)
    m = _read_assignment(args.assignment, g)
    tree = _parse_tree(args.tree, g)
    new_m, renames = straighten_tree(m, tree)
    doc = {"renames": renames_to_dict(renames, m),
           "assignment": json.loads(dumps_assignment(new_m))}
    out.write(_dump(doc) + "\n")


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dpcolor", description="DP-coloring toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("diam", help="diameter and degree statistics")
    s.add_argument("graph")
    s.set_defaults(func=cmd_diam)

    s = sub.add_parser("check-mp2", help="maximal planar with diameter <= 2?")
    s.add_argument("graph")
    s.set_defaults(func=cmd_check_mp2)

    s = sub.add_parser("catalog", help="list or emit catalog entries")
    s.add_argument("action", choices=["list", "emit"])
    s.add_argument("name", nargs="?")
    s.add_argument("--params", default="", help="e.g. n=2,m=1")
    s.add_argument("--format", choices=["edges", "json"], default="edges")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("assign", help="seeded random matching assignment")
    s.add_argument("graph")
    s.add_argument("--k", type=int, default=4)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(func=cmd_assign)

    s = sub.add_parser("color", help="color a planar graph of diameter <= 2")
    s.add_argument("graph")
    s.add_argument("assignment")
    s.add_argument("--trace", help="write the coloring trace to this file")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("solve", help="exact search for one assignment")
    s.add_argument("graph")
    s.add_argument("assignment")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("chi-dp", help="DP-chromatic number by adversary search")
    s.add_argument("graph")
    s.add_argument("--kmax", type=int, required=True)
    s.add_argument("--budget", type=int, default=10 ** 8)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_chi_dp)

    s = sub.add_parser("fuzz", help="random assignments against a catalog procedure")
    s.add_argument("name")
    s.add_argument("--params", default="")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--artifacts", help="directory for failing assignments")
    s.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("straighten", help="rename colors along a tree")
    s.add_argument("graph")
    s.add_argument("assignment")
    s.add_argument("--tree", required=True, help="edges as a-b,c-d,...")
    s.set_defaults(func=cmd_straighten)
    return p


def run(argv, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args, out)
        return EXIT_OK if status is None else status
    except InternalConsistencyError as exc:
        kind = "outside-catalog" if isinstance(exc, OutsideCatalog) else "internal-consistency"
        out.write(_dump({"error": kind, "message": str(exc)}) + "\n")
        return EXIT_INTERNAL
    except (Refusal, OSError, ValueError, KeyError) as exc:
        out.write(_dump({"error": "refusal", "message": str(exc)}) + "\n")
        return EXIT_REFUSAL


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
