"""The catalog of MP2 graphs with minimum degree 4 and the coloring driver.

Nine entries are fixed graphs shipped as edge-list files next to a JSON
manifest; six are families built here from their parameters.  Vertex names
follow the notation the case procedures in :mod:`dpcolor.mp2.cases` are
written against.

:func:`color_mp2` is the whole inductive argument in one place: small
graphs are colored greedily, ``K5 - e`` by its own procedure, a degree-3
vertex is peeled off and colored last, and a graph of minimum degree 4 is
matched against the catalog and handed to the entry's procedure.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterator, Mapping

from ..cover import MatchingAssignment, pad_pairs
from ..errors import InternalConsistencyError, OutsideCatalog, Refusal
from ..graph import Graph, is_mp2, k5_minus_edge, parse_edge_list
from ..solver import GreedyFailure, extend_greedy, verify_coloring
from . import cases
from .context import CaseContext
from .symmetry import find_isomorphism
from .trace import ColoringTrace


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple = ()
    graph: Graph = field(default=None, compare=False, repr=False)
    named_triangles: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(str(p) for p in self.params)})"

    @property
    def param_dict(self) -> dict:
        return dict(zip(family_params(self.name), self.params))


# ---------------------------------------------------------------------------
# manifest and data files

@lru_cache(maxsize=1)
def manifest() -> dict:
    text = resources.files(__package__).joinpath("data/manifest.json").read_text()
    return json.loads(text)


def names() -> list[str]:
    return list(manifest()["order"])


def is_family(name: str) -> bool:
    return name in manifest()["families"]


def family_params(name: str) -> list[str]:
    if is_family(name):
        return list(manifest()["families"][name]["params"])
    return []


def family_min(name: str) -> tuple:
    return tuple(manifest()["families"][name]["min"])


def _family_base(name: str) -> int:
    return manifest()["families"][name]["base"]


@lru_cache(maxsize=None)
def _fixed_graph(name: str) -> Graph:
    info = manifest()["fixed"][name]
    text = resources.files(__package__).joinpath("data", info["file"]).read_text()
    return parse_edge_list(text)


_TEMPLATE = re.compile(r"\{(\w+)([+-]\d+)?\}")


def _fill(template: str, params: Mapping) -> str:
    def sub(mt):
        return str(params[mt.group(1)] + int(mt.group(2) or 0))
    return _TEMPLATE.sub(sub, template)


# ---------------------------------------------------------------------------
# families

def _from_adj(order: list, adj: Mapping) -> Graph:
    g = Graph(order)
    for a, bs in adj.items():
        for b in bs:
            g.add_edge(a, b)
    return g


def _path(adj: dict, vs: list) -> None:
    for a, b in zip(vs, vs[1:]):
        adj.setdefault(a, []).append(b)


def _xs(prefix: str, count: int, start: int = 1) -> list:
    return [f"{prefix}{i}" for i in range(start, start + count)]


def family_G1(n: int) -> Graph:
    """Double wheel: y and z over the cycle x0 ... x_{n-1}."""
    X = _xs("x", n, start=0)
    g = Graph(["y", "z"] + X)
    for i, x in enumerate(X):
        g.add_edge("y", x)
        g.add_edge("z", x)
        g.add_edge(x, X[(i + 1) % n])
    return g


def family_G5(n: int) -> Graph:
    X = _xs("x", n)
    adj = {"y1": X + ["v", "w", "v1"], "y2": X + ["v", "w", "v2"],
           "w": ["x1", "v1", "v2"], "v": [X[-1], "v1", "v2"], "v1": ["v2"]}
    _path(adj, X)
    return _from_adj(["y1", "y2", "v", "w", "v1", "v2"] + X, adj)


def family_G6(n: int, m: int) -> Graph:
    X, Z = _xs("x", n), _xs("z", m)
    adj = {"y1": ["w", "v2", "v"] + X, "y2": ["w", "v", "v1"] + X + Z,
           "w": ["v2", "x1", Z[-1]], "v2": ["v", "v1"] + Z, "v": ["v1", X[-1]],
           "v1": ["z1"]}
    _path(adj, X)
    _path(adj, Z)
    return _from_adj(["y1", "y2", "v", "v1", "v2", "w"] + X + Z, adj)


def family_G7(n: int, m: int, l: int) -> Graph:
    X, Q, P = _xs("x", n), _xs("q", m), _xs("p", l)
    adj = {"y1": ["z1", "v", "v1", "w"] + X, "y2": ["v", "v2", "w"] + X + Q + P,
           "z1": ["v1", "w", P[-1]] + Q, "v": ["v1", "v2", "x1"],
           "v1": ["v2"] + P, "v2": ["p1"], "w": [X[-1], "q1"], Q[-1]: [P[-1]]}
    _path(adj, X)
    _path(adj, Q)
    _path(adj, P)
    return _from_adj(["y1", "y2", "z1", "v", "v1", "v2", "w"] + X + Q + P, adj)


def family_G8(n: int, m: int) -> Graph:
    X, Z = _xs("x", n), _xs("z", m)
    adj = {"y1": ["v", "w", "p1", "v1"] + X + Z, "y2": ["v", "w", "p2", "p", "v2"] + X,
           "p": ["p2", "p1", "v1", "v2"] + Z, "v": ["x1", "v1", "v2"],
           "v1": ["z1", "v2"], "w": [X[-1], "p1", "p2"], "p1": [Z[-1], "p2"]}
    _path(adj, X)
    _path(adj, Z)
    return _from_adj(["y1", "y2", "p", "v", "v1", "v2", "w", "p1", "p2"] + X + Z, adj)


def family_G9(n: int) -> Graph:
    X = _xs("x", n)
    adj = {"v": ["v1", "v2", "y1", "y2", "x1"], "v1": ["v2", "y1", "z1"],
           "v2": ["y2", "z1"], "y1": ["z1", "w", "p1"] + X,
           "y2": ["z1", "w", "p2"] + X, "z1": ["p1", "p2"],
           "w": ["p1", "p2", X[-1]], "p1": ["p2"]}
    _path(adj, X)
    return _from_adj(["v", "v1", "v2", "y1", "y2", "z1", "w", "p1", "p2"] + X, adj)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "G1": family_G1, "G5": family_G5, "G6": family_G6, "G7": family_G7,
    "G8": family_G8, "G9": family_G9,
}


# ---------------------------------------------------------------------------
# lookup

def _check_params(name: str, params: tuple) -> tuple:
    keys = family_params(name)
    if not keys:
        if params:
            raise Refusal(f"{name} takes no parameters")
        return ()
    lo = family_min(name)
    if len(params) != len(keys):
        raise Refusal(f"{name} takes parameters {', '.join(keys)}")
    params = tuple(int(p) for p in params)
    if any(p < b for p, b in zip(params, lo)):
        rng = ", ".join(f"{k} >= {b}" for k, b in zip(keys, lo))
        raise Refusal(f"{name}{params} outside the validated range ({rng})")
    return params


def catalog(name: str, params=()) -> CatalogEntry:
    """The labelled catalog entry ``name`` at the given parameters.

    ``params`` may be a tuple in the family's parameter order or a mapping
    from parameter names.
    """
    if name not in manifest()["order"]:
        raise Refusal(f"unknown catalog entry {name!r}; known: {', '.join(names())}")
    if isinstance(params, Mapping):
        keys = family_params(name)
        unknown = set(params) - set(keys)
        if unknown:
            raise Refusal(f"{name} has no parameter(s) {sorted(unknown)}")
        missing = [k for k in keys if k not in params]
        if missing:
            raise Refusal(f"{name} needs parameter(s) {missing}")
        params = tuple(params[k] for k in keys)
    return _entry(name, _check_params(name, tuple(params)))


@lru_cache(maxsize=512)
def _entry(name: str, params: tuple) -> CatalogEntry:
    if is_family(name):
        info = manifest()["families"][name]
        g = FAMILIES[name](*params)
        pd = dict(zip(info["params"], params))
        tris = {k: tuple(_fill(t, pd).split()) for k, t in info["triangles"].items()}
    else:
        info = manifest()["fixed"][name]
        g = _fixed_graph(name)
        tris = {k: tuple(t.split()) for k, t in info["triangles"].items()}
    entry = CatalogEntry(name, params, g, tris)
    problems = entry_problems(entry)
    if problems:
        raise InternalConsistencyError(f"catalog entry {entry.label}: {'; '.join(problems)}")
    return entry


def entry_problems(entry: CatalogEntry) -> list[str]:
    """Static checks every entry must pass (empty list when fine)."""
    g = entry.graph
    out = []
    if not is_mp2(g):
        out.append("not an MP2 graph")
    delta = min(g.degree(v) for v in g)
    if delta != 4:
        out.append(f"minimum degree {delta}, not 4")
    for label, (a, b, c) in entry.named_triangles.items():
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            out.append(f"{label} = {a} {b} {c} is not a triangle")
    inside = manifest()["fixed"].get(entry.name, {}).get("inside")
    if inside:
        big = _fixed_graph(inside)
        if not all(big.has_edge(u, v) for u, v in g.edges()) or g.n > big.n:
            out.append(f"not a subgraph of {inside}")
    return out


def smallest_params(name: str, count: int = 3) -> list[tuple]:
    """The ``count`` smallest validated parameter tuples, ordered by total
    size and then lexicographically.  Fixed entries give ``[()]``."""
    if not is_family(name):
        return [()]
    out = []
    for total in itertools.count(sum(family_min(name))):
        out.extend(_tuples_with_sum(name, total))
        if len(out) >= count:
            return out[:count]


def _tuples_with_sum(name: str, total: int) -> list[tuple]:
    lo = family_min(name)
    out = []
    for t in itertools.product(*(range(b, total + 1) for b in lo)):
        if sum(t) == total:
            out.append(t)
    return sorted(out)


def entries_of_size(nv: int) -> Iterator[CatalogEntry]:
    """Every catalog entry (all parameter values) with ``nv`` vertices, in
    catalog order."""
    for name in names():
        if is_family(name):
            total = nv - _family_base(name)
            if total >= sum(family_min(name)):
                for t in _tuples_with_sum(name, total):
                    yield _entry(name, t)
        elif _fixed_graph(name).n == nv:
            yield _entry(name, ())


def _degree_profile(g: Graph) -> list:
    return sorted(g.degree(v) for v in g)


def identify_all(g: Graph) -> list[tuple[CatalogEntry, dict]]:
    """Every catalog entry isomorphic to ``g`` with one isomorphism each."""
    _require_delta4(g)
    prof = _degree_profile(g)
    out = []
    for entry in entries_of_size(g.n):
        if entry.graph.m != g.m or _degree_profile(entry.graph) != prof:
            continue
        phi = find_isomorphism(g, entry.graph)
        if phi is not None:
            out.append((entry, phi))
    return out


def identify_catalog(g: Graph):
    """First catalog entry isomorphic to ``g`` as ``(entry, phi)`` where
    ``phi`` maps vertices of ``g`` to the entry's labels; None if no entry
    matches."""
    _require_delta4(g)
    prof = _degree_profile(g)
    for entry in entries_of_size(g.n):
        if entry.graph.m != g.m or _degree_profile(entry.graph) != prof:
            continue
        phi = find_isomorphism(g, entry.graph)
        if phi is not None:
            return entry, phi
    return None


def _require_delta4(g: Graph) -> None:
    if not is_mp2(g):
        raise Refusal("catalog identification needs an MP2 graph")
    if g.n < 6 or min(g.degree(v) for v in g) != 4:
        raise Refusal("catalog identification needs minimum degree 4")


# ---------------------------------------------------------------------------
# procedures

PROCEDURES: dict[str, Callable] = {
    "H1": cases.color_H1, "G1": cases.color_G1, "G2": cases.color_G2,
    "G3": cases.color_G3, "G4": cases.color_G4, "G5": cases.color_G5,
    "G6": cases.color_G6, "G7": cases.color_G7, "G8": cases.color_G8,
    "G9": cases.color_G9, "G10": cases.color_G10, "G11": cases.color_G11,
    "G12": cases.color_G12, "G13": cases.color_G13,
}


def _check_assignment(graph: Graph, m: MatchingAssignment) -> None:
    if m.host != graph:
        raise Refusal("assignment is over a different graph")
    for v in graph:
        if len(m.lists[v]) != 4:
            raise Refusal(f"vertex {v!r} has a list of size {len(m.lists[v])}, not 4")
    if not m.is_perfect():
        raise Refusal("every edge matching must be perfect")


def case_procedure(entry: CatalogEntry, m: MatchingAssignment):
    """Run the entry's procedure on ``m`` (over ``entry.graph``).

    Returns ``(coloring, trace)``; the coloring is verified before it is
    returned.
    """
    _check_assignment(entry.graph, m)
    if entry.name == "H2":
        return _color_inside(entry, m)
    ctx = CaseContext(entry.graph, m, entry=entry.label)
    PROCEDURES[entry.name](ctx, *entry.params)
    return ctx.finish(), ctx.trace


def _color_inside(entry: CatalogEntry, m: MatchingAssignment):
    """Color a subgraph of a bigger fixed entry by coloring the bigger one.

    Missing vertices get a copy of an existing list and missing edges get
    matchings that pair equal colors.  Any coloring of the big cover
    restricts to the small one.
    """
    big_name = manifest()["fixed"][entry.name]["inside"]
    big = _entry(big_name, ())
    some = next(iter(m.lists.values()))
    lists = {v: (m.lists[v] if v in entry.graph else some) for v in big.graph}
    pairs = {}
    for u, v in big.graph.edges():
        if entry.graph.has_edge(u, v):
            pairs[(u, v)] = m.pairs(u, v)
        else:
            shared = [(c, c) for c in lists[u] if c in lists[v]]
            pairs[(u, v)] = pad_pairs(lists[u], lists[v], shared)
    mbig = MatchingAssignment(big.graph, lists, pairs)
    col_big, tr_big = case_procedure(big, mbig)
    extra = [v for v in big.graph if v not in entry.graph]
    trace = ColoringTrace(entry.label)
    trace.add("embed", into=big.label, extra=extra)
    trace.extend(tr_big.relabeled(lambda x: x, drop=extra))
    col = {v: col_big[v] for v in entry.graph}
    if not verify_coloring(m, col):
        raise InternalConsistencyError("restricted coloring is not independent", trace)
    return col, trace


def reduce_degree3(g: Graph, v) -> Graph:
    """``g - v`` for a degree-3 vertex of an MP2 graph; the result is
    checked to be MP2 again."""
    if v not in g or g.degree(v) != 3:
        raise Refusal(f"{v!r} is not a degree-3 vertex")
    if not is_mp2(g):
        raise Refusal("reduce_degree3 needs an MP2 graph")
    h = g.copy()
    h.remove_vertex(v)
    if not is_mp2(h):
        raise InternalConsistencyError(f"removing {v!r} left a graph that is not MP2")
    return h


def color_mp2(g: Graph, m: MatchingAssignment):
    """A verified M_L-coloring of the MP2 graph ``g`` and its trace."""
    if not is_mp2(g):
        raise Refusal("color_mp2 needs a maximal planar graph of diameter at most 2")
    _check_assignment(g, m)
    trace = ColoringTrace("mp2")
    removed = []
    core = g
    while core.n > 5:
        low = [v for v in core if core.degree(v) == 3]
        if not low:
            break
        removed.append(low[0])
        trace.add("reduce", vertex=low[0])
        core = reduce_degree3(core, low[0])
    mc = m.restrict(core)
    col = _color_core(core, mc, trace)
    for v in reversed(removed):
        res = m.residual(v, col)
        if not res:
            raise InternalConsistencyError(f"degree-3 vertex {v!r} has no color left", trace)
        col[v] = res[0]
        trace.add("color", vertex=v, color=res[0], why="degree-3")
    if not verify_coloring(m, col):
        raise InternalConsistencyError("final coloring is not independent", trace)
    return col, trace


def _color_core(core: Graph, m: MatchingAssignment, trace: ColoringTrace) -> dict:
    if core.n < 5:
        trace.add("base", kind="greedy")
        try:
            col = extend_greedy(m, {}, core.vertices)
        except GreedyFailure as exc:
            raise InternalConsistencyError(str(exc), trace) from exc
        for v in core:
            trace.add("color", vertex=v, color=col[v], why="greedy")
        return col
    if core.n == 5:
        k5e = k5_minus_edge()
        phi = find_isomorphism(core, k5e)
        if phi is None:
            raise InternalConsistencyError("five-vertex MP2 graph is not K5 - e", trace)
        ctx = CaseContext(k5e, m.relabeled(phi), entry="K5-e")
        cases.color_k5e(ctx)
        col = ctx.finish()
        inv = {b: a for a, b in phi.items()}
        trace.add("base", kind="K5-e")
        trace.extend(ctx.trace.relabeled(inv.__getitem__))
        return {inv[v]: c for v, c in col.items()}
    found = identify_catalog(core)
    if found is None:
        raise OutsideCatalog(
            f"minimum-degree-4 MP2 graph on {core.n} vertices is outside the catalog", trace)
    entry, phi = found
    trace.add("identify", entry=entry.label, mapping={str(a): b for a, b in phi.items()})
    col, sub = case_procedure(entry, m.relabeled(phi))
    inv = {b: a for a, b in phi.items()}
    trace.extend(sub.relabeled(inv.__getitem__))
    return {inv[v]: c for v, c in col.items()}
