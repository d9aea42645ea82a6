"""List assignments, matching assignments and the cover graph H_L.

A matching assignment attaches to every edge ``uv`` a matching between the
color lists ``L(u)`` and ``L(v)``.  A pair ``(a, b)`` on edge ``uv`` means
that ``u`` colored ``a`` and ``v`` colored ``b`` conflict.  A coloring is a
choice of one color per vertex that hits no such pair, i.e. an independent
transversal of the cover graph.

Color names are per-vertex labels.  Color 2 at ``u`` and color 2 at ``v``
have nothing in common unless the matching on ``uv`` says so.

Colorings (full or partial) are plain ``dict`` objects mapping vertex to
color throughout the package.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import Refusal
from .graph import Graph, Vertex


class MatchingAssignment:
    """Lists plus per-edge matchings over a host graph.

    ``pairs`` maps each host edge ``(u, v)`` (in either orientation) to an
    iterable of color pairs ``(c_u, c_v)``.  Edges missing from ``pairs``
    get the empty matching.  Construction does not validate; call
    :func:`validate_assignment` for that.  Instances are treated as
    immutable; transforms build new ones.
    """

    def __init__(self, host: Graph, lists: Mapping, pairs: Mapping | None = None):
        self.host = host
        self.lists = {v: tuple(lists[v]) for v in host}
        self._pairs: dict[tuple, tuple] = {}
        self._map: dict[tuple, dict] = {}
        pos = host.index()
        given = {}
        for (u, v), ps in (pairs or {}).items():
            if not host.has_edge(u, v):
                raise Refusal(f"matching given for non-edge {u!r}-{v!r}")
            if pos[u] > pos[v]:
                u, v, ps = v, u, [(b, a) for a, b in ps]
            given[(u, v)] = tuple((a, b) for a, b in ps)
        for u, v in host.edges():
            ps = tuple(sorted(given.get((u, v), ())))
            self._pairs[(u, v)] = ps
            self._map[(u, v)] = {a: b for a, b in ps}
            self._map[(v, u)] = {b: a for a, b in ps}

    # ------------------------------------------------------------------
    def pairs(self, u: Vertex, v: Vertex) -> tuple:
        """Pairs of edge uv oriented as (color at u, color at v)."""
        if (u, v) in self._pairs:
            return self._pairs[(u, v)]
        return tuple((b, a) for a, b in self._pairs[(v, u)])

    def matching(self, u: Vertex, v: Vertex) -> dict:
        """Matching of edge uv as a dict from colors of u to colors of v."""
        return self._map[(u, v)]

    def partner(self, u: Vertex, c, v: Vertex):
        """Color of v that conflicts with u colored c, or None."""
        return self._map[(u, v)].get(c)

    def residual(self, v: Vertex, partial: Mapping) -> list:
        """Colors of v not blocked by colored neighbors (list order kept)."""
        blocked = set()
        for w in self.host.neighbors(v):
            cw = partial.get(w)
            if cw is not None:
                b = self._map[(w, v)].get(cw)
                if b is not None:
                    blocked.add(b)
        return [c for c in self.lists[v] if c not in blocked]

    def is_perfect(self) -> bool:
        return all(
            len(ps) == len(self.lists[u]) == len(self.lists[v])
            for (u, v), ps in self._pairs.items())

    def renamed(self, renames: Mapping) -> "MatchingAssignment":
        """Apply per-vertex color bijections ``renames[v][old] -> new``."""
        ident = {}
        r = {v: renames.get(v, ident) for v in self.host}
        lists = {v: tuple(r[v].get(c, c) for c in self.lists[v]) for v in self.host}
        pairs = {e: [(r[e[0]].get(a, a), r[e[1]].get(b, b)) for a, b in ps]
                 for e, ps in self._pairs.items()}
        return MatchingAssignment(self.host, lists, pairs)

    def with_matching(self, u: Vertex, v: Vertex, ps) -> "MatchingAssignment":
        pairs = dict(self._pairs)
        pairs.pop((u, v), None)
        pairs.pop((v, u), None)
        pairs[(u, v)] = list(ps)
        return MatchingAssignment(self.host, self.lists, pairs)

    def relabeled(self, phi: Mapping) -> "MatchingAssignment":
        """Carry the assignment along a vertex bijection ``phi``."""
        host = self.host.relabel(phi)
        return MatchingAssignment(
            host, {phi[v]: self.lists[v] for v in self.host},
            {(phi[u], phi[v]): ps for (u, v), ps in self._pairs.items()})

    def restrict(self, sub: Graph) -> "MatchingAssignment":
        """The assignment seen by a subgraph on a subset of the vertices."""
        return MatchingAssignment(
            sub, {v: self.lists[v] for v in sub},
            {(u, v): self.pairs(u, v) for u, v in sub.edges()})

    def canonical_pairs(self) -> dict:
        return dict(self._pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatchingAssignment):
            return NotImplemented
        return (self.host == other.host and self.lists == other.lists
                and self._pairs == other._pairs)

    def __repr__(self) -> str:
        return f"MatchingAssignment(n={self.host.n}, m={self.host.m})"


# ---------------------------------------------------------------------------
# constructors

def pad_pairs(la: tuple, lb: tuple, pairs: Iterable) -> list:
    """Extend a partial matching to a perfect one (equal list sizes only).

    Unmatched colors on each side are paired in ascending list order.
    """
    pairs = list(pairs)
    if len(la) != len(lb):
        return pairs
    used_a = {a for a, _ in pairs}
    used_b = {b for _, b in pairs}
    free_a = [c for c in la if c not in used_a]
    free_b = [c for c in lb if c not in used_b]
    return pairs + list(zip(free_a, free_b))


def identity_assignment(g: Graph, lists: Mapping | None = None, k: int = 4) -> MatchingAssignment:
    """Matchings pair equal colors; padded to perfect when list sizes agree.

    With identical lists on every vertex this is ordinary list coloring.
    ``lists`` defaults to ``{1..k}`` everywhere.
    """
    if lists is None:
        lists = {v: tuple(range(1, k + 1)) for v in g}
    pairs = {}
    for u, v in g.edges():
        lv = set(lists[v])
        shared = [(c, c) for c in lists[u] if c in lv]
        pairs[(u, v)] = pad_pairs(tuple(lists[u]), tuple(lists[v]), shared)
    return MatchingAssignment(g, lists, pairs)


def random_assignment(g: Graph, k: int, seed: int | random.Random = 0) -> MatchingAssignment:
    """Lists ``{1..k}`` and an independent uniform permutation per edge."""
    if k < 1:
        raise Refusal("k must be at least 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    colors = list(range(1, k + 1))
    pairs = {}
    for u, v in g.edges():
        image = colors[:]
        rng.shuffle(image)
        pairs[(u, v)] = list(zip(colors, image))
    return MatchingAssignment(g, {v: colors for v in g}, pairs)


def permutation_assignment(g: Graph, k: int, perms: Mapping) -> MatchingAssignment:
    """Lists ``{1..k}``; edge (u, v) gets ``c -> perms[(u, v)][c - 1]``.

    Edges absent from ``perms`` are straight.
    """
    colors = list(range(1, k + 1))
    pairs = {}
    for u, v in g.edges():
        if (u, v) in perms:
            p = perms[(u, v)]
            pairs[(u, v)] = [(c, p[c - 1]) for c in colors]
        elif (v, u) in perms:
            p = perms[(v, u)]
            pairs[(u, v)] = [(p[c - 1], c) for c in colors]
        else:
            pairs[(u, v)] = [(c, c) for c in colors]
    return MatchingAssignment(g, {v: colors for v in g}, pairs)


# ---------------------------------------------------------------------------
# validation and the cover graph

def validate_assignment(m: MatchingAssignment) -> list[str]:
    """All invariant violations of ``m`` as messages (empty when valid)."""
    out = []
    for v in m.host:
        lst = m.lists[v]
        if not lst:
            out.append(f"vertex {v!r}: empty list")
        if len(set(lst)) != len(lst):
            out.append(f"vertex {v!r}: repeated color in list")
    for (u, v), ps in m.canonical_pairs().items():
        lu, lv = set(m.lists[u]), set(m.lists[v])
        left = [a for a, _ in ps]
        right = [b for _, b in ps]
        if len(set(left)) != len(left):
            out.append(f"edge {u!r}-{v!r}: color of {u!r} used twice")
        if len(set(right)) != len(right):
            out.append(f"edge {u!r}-{v!r}: color of {v!r} used twice")
        for a, b in ps:
            if a not in lu:
                out.append(f"edge {u!r}-{v!r}: color {a!r} not in L({u!r})")
            if b not in lv:
                out.append(f"edge {u!r}-{v!r}: color {b!r} not in L({v!r})")
        if len(lu) == len(lv) and len(ps) != len(lu):
            out.append(f"edge {u!r}-{v!r}: matching not perfect")
    return out


@dataclass
class CoverGraph:
    nodes: list
    edges: set
    origin: Graph

    def is_independent(self, nodes: Iterable) -> bool:
        nodes = list(nodes)
        for i, a in enumerate(nodes):
            for b in nodes[i + 1:]:
                if frozenset((a, b)) in self.edges:
                    return False
        return True


def build_cover(m: MatchingAssignment) -> CoverGraph:
    bad = validate_assignment(m)
    if bad:
        raise Refusal("invalid matching assignment: " + "; ".join(bad))
    nodes = [(v, c) for v in m.host for c in m.lists[v]]
    edges = set()
    for v in m.host:
        lst = m.lists[v]
        for i, a in enumerate(lst):
            for b in lst[i + 1:]:
                edges.add(frozenset(((v, a), (v, b))))
    for (u, v), ps in m.canonical_pairs().items():
        for a, b in ps:
            edges.add(frozenset(((u, a), (v, b))))
    return CoverGraph(nodes, edges, m.host)


def residual_list(m: MatchingAssignment, v: Vertex, partial: Mapping) -> list:
    if v in partial:
        raise Refusal(f"vertex {v!r} is already colored")
    return m.residual(v, partial)


# ---------------------------------------------------------------------------
# structured text

def assignment_to_dict(m: MatchingAssignment) -> dict:
    return {
        "lists": {str(v): list(m.lists[v]) for v in m.host},
        "matchings": {f"{u} {v}": [list(p) for p in ps]
                      for (u, v), ps in m.canonical_pairs().items()},
    }


def dumps_assignment(m: MatchingAssignment) -> str:
    return json.dumps(assignment_to_dict(m), sort_keys=True, indent=1) + "\n"


def assignment_from_dict(data: dict, host: Graph | None = None) -> MatchingAssignment:
    """Inverse of :func:`assignment_to_dict`.

    Without ``host`` the graph is rebuilt from the file with string vertex
    names.  With ``host``, tokens are matched to its vertices by ``str``.
    """
    if host is None:
        host = Graph(data["lists"])
        for key in data["matchings"]:
            u, v = key.split()
            host.add_edge(u, v)
    by_name = {str(v): v for v in host}
    missing = set(by_name) - set(data["lists"])
    if missing:
        raise Refusal(f"assignment lacks lists for {sorted(missing)}")
    lists = {by_name[k]: tuple(c) for k, c in data["lists"].items() if k in by_name}
    pairs = {}
    for key, ps in data["matchings"].items():
        a, b = key.split()
        if a not in by_name or b not in by_name:
            raise Refusal(f"matching {key!r} names unknown vertex")
        pairs[(by_name[a], by_name[b])] = [tuple(p) for p in ps]
    return MatchingAssignment(host, lists, pairs)


def loads_assignment(text: str, host: Graph | None = None) -> MatchingAssignment:
    return assignment_from_dict(json.loads(text), host)
