"""Coloring planar graphs of diameter at most two.

The graph is completed to a maximal planar graph on the same vertices,
which cannot increase any distance, so the completion is an MP2 graph.
Added edges get matchings pairing equal colors.  A coloring of the
completed cover is then a coloring of the original cover as well, since
the original cover is a subgraph of the completed one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import networkx as nx

from .cover import MatchingAssignment, pad_pairs
from .errors import InternalConsistencyError, Refusal
from .graph import Graph, complete_graph, diameter, is_maximal_planar, is_mp2
from .mp2.registry import catalog, color_mp2, names, smallest_params
from .mp2.trace import ColoringTrace
from .solver import verify_coloring


@dataclass
class Completion:
    original: Graph
    completed: Graph
    added_edges: list = field(default_factory=list)

    def problems(self) -> list[str]:
        out = []
        g, h = self.original, self.completed
        if set(g.vertices) != set(h.vertices):
            out.append("vertex sets differ")
        if any(not h.has_edge(u, v) for u, v in g.edges()):
            out.append("an original edge is missing from the completion")
        if h.m != g.m + len(self.added_edges):
            out.append("added edge count does not match")
        if not is_maximal_planar(h):
            out.append("completion is not maximal planar")
        if diameter(h) > diameter(g):
            out.append("completion has larger diameter")
        return out


def _faces(emb: nx.PlanarEmbedding) -> list[list]:
    seen: set = set()
    out = []
    for v in emb.nodes:
        for w in emb.neighbors_cw_order(v):
            if (v, w) not in seen:
                out.append(emb.traverse_face(v, w, mark_half_edges=seen))
    return out


def _add_chord(emb: nx.PlanarEmbedding, face: list) -> tuple | None:
    """Split ``face`` by one chord joining two vertices two steps apart.

    The face is walked as half-edges a->b->c with c the ccw successor of a
    around b; the new half-edges are slotted into the rotations of a and c
    so that a b c becomes a triangle.
    """
    k = len(face)
    for i in range(k):
        a, b, c = face[i], face[(i + 1) % k], face[(i + 2) % k]
        if a == c or emb.has_edge(a, c):
            continue
        emb.add_half_edge_ccw(c, a, b)
        emb.add_half_edge_cw(a, c, b)
        return a, c
    return None


def triangulate_diam2(g: Graph) -> Completion:
    """A maximal planar supergraph of ``g`` on the same vertex set."""
    if g.n < 3:
        raise Refusal("need at least 3 vertices")
    d = diameter(g)
    if d > 2:
        raise Refusal(f"diameter is {d}, not at most 2")
    planar, emb = nx.check_planarity(g.to_networkx())
    if not planar:
        raise Refusal("graph is not planar")
    added = []
    while True:
        big = [f for f in _faces(emb) if len(f) > 3]
        if not big:
            break
        chord = _add_chord(emb, big[0])
        if chord is None:
            raise InternalConsistencyError(f"no chord fits into face {big[0]!r}")
        added.append(chord)
    h = g.copy()
    for u, v in added:
        h.add_edge(u, v)
    comp = Completion(g, h, added)
    bad = comp.problems()
    if bad:
        raise InternalConsistencyError("; ".join(bad))
    return comp


def extend_assignment(m: MatchingAssignment, comp: Completion) -> MatchingAssignment:
    """``m`` on the completed graph; added edges pair equal colors and are
    padded to perfect matchings."""
    pairs = {(u, v): m.pairs(u, v) for u, v in comp.original.edges()}
    for u, v in comp.added_edges:
        lu, lv = m.lists[u], m.lists[v]
        shared = [(c, c) for c in lu if c in lv]
        pairs[(u, v)] = pad_pairs(lu, lv, shared)
    return MatchingAssignment(comp.completed, m.lists, pairs)


@dataclass
class PipelineResult:
    coloring: dict
    completion: Completion
    trace: ColoringTrace

    def to_dict(self) -> dict:
        return {
            "added_edges": [[str(u), str(v)] for u, v in self.completion.added_edges],
            "trace_steps": len(self.trace.steps),
            "entries": [s["entry"] for s in self.trace.steps if s["op"] == "identify"],
            "coloring": {str(v): c for v, c in self.coloring.items()},
        }


def run_pipeline(g: Graph, m: MatchingAssignment) -> PipelineResult:
    if m.host != g:
        raise Refusal("assignment is over a different graph")
    comp = triangulate_diam2(g)
    mc = extend_assignment(m, comp)
    col, trace = color_mp2(comp.completed, mc)
    if not verify_coloring(mc, col):
        raise InternalConsistencyError("coloring fails on the completed cover", trace)
    if not verify_coloring(m, col):
        raise InternalConsistencyError("coloring fails on the original cover", trace)
    return PipelineResult(col, comp, trace)


def color_diam2(g: Graph, m: MatchingAssignment) -> dict:
    """A verified coloring of the cover of ``m`` for a planar ``g`` of
    diameter at most two."""
    return run_pipeline(g, m).coloring


# ---------------------------------------------------------------------------
# instance generation

def plane_faces(g: Graph) -> list[tuple]:
    """Triangular faces of a maximal planar graph."""
    planar, emb = nx.check_planarity(g.to_networkx())
    if not planar:
        raise Refusal("graph is not planar")
    return [tuple(f) for f in _faces(emb)]


def _dominating(g: Graph, face) -> bool:
    seen = set(face)
    for v in face:
        seen |= g.neighbors(v)
    return len(seen) == g.n


def stack_mp2(start: Graph, n: int, rng: random.Random) -> Graph:
    """Grow a maximal planar graph by stacking new vertices into faces that
    dominate the graph, which keeps the diameter at most two.  Stops early
    when no face dominates."""
    g = start.copy()
    faces = plane_faces(g)
    nxt = 0
    while g.n < n:
        good = [f for f in faces if _dominating(g, f)]
        if not good:
            break
        a, b, c = rng.choice(good)
        while f"s{nxt}" in g:
            nxt += 1
        v = f"s{nxt}"
        for u in (a, b, c):
            g.add_edge(v, u)
        faces.remove((a, b, c))
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    return g


def thin_edges(g: Graph, rng: random.Random, tries: int) -> Graph:
    """Delete random edges as long as the diameter stays at most two."""
    h = g.copy()
    for _ in range(tries):
        edges = h.edges()
        if not edges:
            break
        u, v = rng.choice(edges)
        trial = Graph(h.vertices, [e for e in edges if e != (u, v)])
        if diameter(trial) <= 2:
            h = trial
    return h


def random_diam2_planar(n_max: int, seed: int, start: str = "K4",
                        delete_fraction: float = 0.3) -> Graph:
    """A planar graph of diameter at most two with at most ``n_max`` vertices.

    ``start="K4"`` stacks from K4.  ``start="catalog"`` starts from a random
    small catalog graph instead, which reaches graphs that stacking from K4
    never produces.
    """
    rng = random.Random(seed)
    if start == "K4":
        base = complete_graph(4)
        base = base.relabel({i: f"k{i}" for i in range(4)})
    elif start == "catalog":
        pool = [catalog(nm, p) for nm in names() for p in smallest_params(nm)]
        pool = [e for e in pool if e.graph.n <= n_max]
        base = rng.choice(pool).graph
    else:
        raise Refusal(f"unknown start {start!r}")
    target = rng.randint(base.n, max(base.n, n_max))
    g = stack_mp2(base, target, rng)
    if not is_mp2(g):
        raise InternalConsistencyError("stacking left the MP2 class")
    tries = int(delete_fraction * g.m)
    return thin_edges(g, rng, rng.randint(0, tries))
