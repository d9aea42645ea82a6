"""Automorphisms of small labelled graphs and a backtracking isomorphism
finder used to recognise catalog members."""

from __future__ import annotations

from functools import lru_cache

from ..graph import Graph


def _refine_key(g: Graph, v) -> tuple:
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))


def isomorphisms(g: Graph, h: Graph, fixed: dict | None = None, limit: int | None = None):
    """Yield vertex maps g -> h that are graph isomorphisms.

    Plain backtracking: vertices of ``g`` are placed in BFS order so every
    new vertex has an already placed neighbor; candidates must agree on the
    degree signature and on adjacency to everything placed so far.
    ``fixed`` pins some images in advance.
    """
    if g.n != h.n or g.m != h.m:
        return
    kg = {v: _refine_key(g, v) for v in g}
    kh = {v: _refine_key(h, v) for v in h}
    if sorted(kg.values()) != sorted(kh.values()):
        return
    order = []
    seen = set()
    fixed = dict(fixed or {})
    starts = list(fixed) + [v for v in g if v not in fixed]
    for s in starts:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(g.neighbors(u), key=lambda x: (x not in fixed, -g.degree(x), str(x))):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    by_key: dict = {}
    for v in h:
        by_key.setdefault(kh[v], []).append(v)

    phi: dict = {}
    used: set = set()
    count = 0

    def ok(u, x):
        if kg[u] != kh[x]:
            return False
        for w in g.neighbors(u):
            if w in phi and not h.has_edge(x, phi[w]):
                return False
        placed_nbrs = sum(1 for w in g.neighbors(u) if w in phi)
        return placed_nbrs == sum(1 for y in h.neighbors(x) if y in used)

    def rec(i):
        nonlocal count
        if limit is not None and count >= limit:
            return
        if i == len(order):
            count += 1
            yield dict(phi)
            return
        u = order[i]
        cands = [fixed[u]] if u in fixed else by_key.get(kg[u], [])
        for x in cands:
            if x in used or not ok(u, x):
                continue
            phi[u] = x
            used.add(x)
            yield from rec(i + 1)
            del phi[u]
            used.discard(x)

    yield from rec(0)


def find_isomorphism(g: Graph, h: Graph, fixed: dict | None = None):
    for phi in isomorphisms(g, h, fixed, limit=1):
        return phi
    return None


def automorphism_mapping(g: Graph, src, dst):
    """An automorphism of ``g`` sending the tuple ``src`` onto ``dst``
    position by position, or None."""
    return _automorphism_cached(_freeze(g), tuple(src), tuple(dst))


def _freeze(g: Graph):
    return tuple(g.vertices), tuple(g.edges())


@lru_cache(maxsize=4096)
def _automorphism_cached(frozen, src, dst):
    verts, edges = frozen
    g = Graph(verts, edges)
    return find_isomorphism(g, g, dict(zip(src, dst)))


def automorphisms(g: Graph) -> list[dict]:
    return list(isomorphisms(g, g))
