"""Straightening along trees, property P on triangles, and two local
coloring tricks that the case procedures lean on.

An edge is *straight* when its matching only pairs equal color names.
Renaming colors vertex by vertex never changes which colorings exist, and
along a tree one can always rename so that every tree edge is straight.
A triangle has *property P* when its three matchings compose to the
identity, which is exactly when all three edges can be made straight at
once.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Mapping

from .cover import MatchingAssignment
from .errors import Refusal
from .graph import Vertex

Straightening = dict  # vertex -> {old color: new color}


def is_straight(m: MatchingAssignment, u: Vertex, v: Vertex) -> bool:
    ps = m.pairs(u, v)
    if any(a != b for a, b in ps):
        return False
    common = set(m.lists[u]) & set(m.lists[v])
    return len(ps) == len(common)


def straight_edges(m: MatchingAssignment) -> set:
    return {(u, v) for u, v in m.host.edges() if is_straight(m, u, v)}


def _check_forest(m: MatchingAssignment, edges) -> list:
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    seen = set()
    out = []
    for u, v in edges:
        if not m.host.has_edge(u, v):
            raise Refusal(f"tree edge {u!r}-{v!r} is not an edge of the graph")
        key = frozenset((u, v))
        if key in seen:
            continue
        seen.add(key)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise Refusal(f"edge set is not a forest (cycle closed by {u!r}-{v!r})")
        parent[ru] = rv
        out.append((u, v))
    return out


def straighten_tree(m: MatchingAssignment, tree: Iterable[tuple]):
    """Rename colors so that every edge of the forest ``tree`` is straight.

    Each component is rooted at its earliest vertex (graph order) and
    processed breadth first.  A child takes over its parent's color names
    through the (already renamed) parent-child matching.

    Returns ``(new_assignment, renames)`` where ``renames[v]`` maps every
    old color of ``v`` to its new name.  Vertices off the tree keep their
    names and have identity entries.
    """
    edges = _check_forest(m, tree)
    sizes = {len(m.lists[v]) for e in edges for v in e}
    if len(sizes) > 1:
        raise Refusal("straightening needs equal list sizes on the tree")
    adj: dict = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    pos = m.host.index()
    renames: Straightening = {v: {c: c for c in m.lists[v]} for v in m.host}
    done = set()
    for root in sorted(adj, key=pos.__getitem__):
        if root in done:
            continue
        done.add(root)
        queue = deque([root])
        while queue:
            p = queue.popleft()
            for w in sorted(adj[p], key=pos.__getitem__):
                if w in done:
                    continue
                done.add(w)
                # pair (a at p, b at w) in old names; p's a is now renames[p][a]
                ps = m.pairs(p, w)
                if len(ps) != len(m.lists[w]):
                    raise Refusal(f"matching on {p!r}-{w!r} is not perfect")
                renames[w] = {b: renames[p][a] for a, b in ps}
                queue.append(w)
    return m.renamed(renames), renames


def compose_renames(first: Mapping, second: Mapping) -> Straightening:
    """Renames equivalent to applying ``first`` and then ``second``."""
    out = {}
    for v, r1 in first.items():
        r2 = second.get(v, {})
        out[v] = {c: r2.get(d, d) for c, d in r1.items()}
    return out


def invert_renames(renames: Mapping) -> Straightening:
    return {v: {d: c for c, d in r.items()} for v, r in renames.items()}


def renames_to_dict(renames: Mapping, m: MatchingAssignment) -> dict:
    """Structured form: vertex -> new names of its colors in list order."""
    return {str(v): [renames[v].get(c, c) for c in m.lists[v]] for v in m.host}


# ---------------------------------------------------------------------------

def _require_triangle(m: MatchingAssignment, tri) -> None:
    a, b, c = tri
    g = m.host
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise Refusal(f"{tri!r} is not a triangle")


def has_property_P(m: MatchingAssignment, triangle) -> bool:
    """Going v1 -> v2 -> v3 through the matchings agrees with v1 -> v3."""
    _require_triangle(m, triangle)
    v1, v2, v3 = triangle
    m12, m23, m13 = m.matching(v1, v2), m.matching(v2, v3), m.matching(v1, v3)
    for a in m.lists[v1]:
        b = m12.get(a)
        c = m23.get(b) if b is not None else None
        if c is None or m13.get(a) != c:
            return False
    return True


def exploit_non_property_P(m: MatchingAssignment, triangle, partial: Mapping | None = None):
    """Colors for v1 and v2 that cost v3 at most one residual color.

    On an uncolored triangle with 4-lists this leaves v3 with at least 3
    colors; that is the postcondition checked by callers.  The search
    returns the first valid pair in list order.  If ``partial`` is given,
    colors come from residual lists and v3's loss is measured against its
    current residual.
    """
    _require_triangle(m, triangle)
    if has_property_P(m, triangle):
        raise Refusal(f"triangle {triangle!r} has property P")
    v1, v2, v3 = triangle
    partial = dict(partial or {})
    r1 = m.residual(v1, partial)
    r2 = m.residual(v2, partial)
    before = set(m.residual(v3, partial))
    m12, m13, m23 = m.matching(v1, v2), m.matching(v1, v3), m.matching(v2, v3)
    for a1, a2 in product(r1, r2):
        if m12.get(a1) == a2:
            continue
        lost = {m13.get(a1), m23.get(a2)} & before
        if len(lost) <= 1:
            return a1, a2
    raise Refusal(f"no pair on {triangle!r} keeps v3's loss at one color")


def color_path_ends(m: MatchingAssignment, x, y, z, partial: Mapping | None = None):
    """Colors for the ends of a path x-y-z that cost y at most one color.

    Needs ``xz`` to be a non-edge and ``|L(x)| + |L(z)| > |L(y)|`` on
    residual lists.  By pigeonhole some color of x and some color of z
    block the same color of y (or one of them blocks nothing there).
    """
    g = m.host
    if not (g.has_edge(x, y) and g.has_edge(y, z)):
        raise Refusal(f"{x!r}-{y!r}-{z!r} is not a path")
    if g.has_edge(x, z):
        raise Refusal(f"{x!r}{z!r} is an edge")
    partial = dict(partial or {})
    if x in partial or z in partial:
        raise Refusal("path ends must be uncolored")
    rx, rz = m.residual(x, partial), m.residual(z, partial)
    ry = set(m.residual(y, partial))
    if len(rx) + len(rz) <= len(ry):
        raise Refusal("residual sizes do not satisfy |L(x)| + |L(z)| > |L(y)|")
    mxy, mzy = m.matching(x, y), m.matching(z, y)
    for a1, a2 in product(rx, rz):
        lost = {mxy.get(a1), mzy.get(a2)} & ry
        if len(lost) <= 1:
            return a1, a2
    raise Refusal("no pair of end colors keeps y's loss at one color")
