"""Verification, greedy extension, exact search and the adversarial
DP-chromatic number for small graphs."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Mapping

from .cover import MatchingAssignment, permutation_assignment
from .errors import Refusal
from .graph import Graph, Vertex

SAT = "SAT"
UNSAT = "UNSAT"


def verify_coloring(m: MatchingAssignment, coloring: Mapping) -> bool:
    g = m.host
    if set(coloring) != set(g.vertices):
        return False
    for v in g:
        if coloring[v] not in m.lists[v]:
            return False
    for u, v in g.edges():
        if m.partner(u, coloring[u], v) == coloring[v]:
            return False
    return True


def conflicts(m: MatchingAssignment, coloring: Mapping) -> list:
    """Edges whose matching contains the chosen pair (partial colorings ok)."""
    out = []
    for u, v in m.host.edges():
        if u in coloring and v in coloring and m.partner(u, coloring[u], v) == coloring[v]:
            out.append((u, v))
    return out


class GreedyFailure(Refusal):
    def __init__(self, vertex, partial, history):
        super().__init__(f"greedy extension stuck at {vertex!r}")
        self.vertex = vertex
        self.partial = partial
        self.history = history


def extend_greedy(m: MatchingAssignment, partial: Mapping, order: Iterable[Vertex]) -> dict:
    """Color ``order`` one vertex at a time with the first residual color.

    ``order`` must list exactly the uncolored vertices.  Raises
    :class:`GreedyFailure` at the first vertex whose residual is empty;
    ``history`` then holds the residual seen at every step.
    """
    order = list(order)
    col = dict(partial)
    missing = set(m.host.vertices) - set(col)
    if set(order) != missing or len(order) != len(missing):
        raise Refusal("order must cover exactly the uncolored vertices")
    history = []
    for v in order:
        res = m.residual(v, col)
        history.append((v, res))
        if not res:
            raise GreedyFailure(v, col, history)
        col[v] = res[0]
    return col


# ---------------------------------------------------------------------------
# exact search

@dataclass
class SolveResult:
    status: str
    coloring: dict | None = None
    nodes: int = 0
    seconds: float = 0.0

    @property
    def sat(self) -> bool:
        return self.status == SAT

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "coloring": None if self.coloring is None
            else {str(v): c for v, c in self.coloring.items()},
            "nodes": self.nodes,
        }


def solve_exact(m: MatchingAssignment) -> SolveResult:
    """Complete backtracking search for an M_L-coloring.

    The next vertex is the uncolored one with fewest live colors (ties by
    vertex order).  Live colors are tracked with per-color block counters
    that are decremented again on backtrack.
    """
    t0 = time.perf_counter()
    g = m.host
    verts = g.vertices
    nbrs = {v: list(g.neighbors(v)) for v in verts}
    match = {(u, v): m.matching(u, v) for u in verts for v in nbrs[u]}
    blocked = {v: {c: 0 for c in m.lists[v]} for v in verts}
    live = {v: len(m.lists[v]) for v in verts}
    col: dict = {}
    nodes = 0

    def place(v, c, delta):
        for w in nbrs[v]:
            if w in col:
                continue
            b = match[(v, w)].get(c)
            if b is None or b not in blocked[w]:
                continue
            before = blocked[w][b]
            blocked[w][b] = before + delta
            if before == 0 and delta > 0:
                live[w] -= 1
            elif before + delta == 0:
                live[w] += 1

    def pick():
        best, best_live = None, None
        for v in verts:
            if v not in col and (best is None or live[v] < best_live):
                best, best_live = v, live[v]
                if best_live == 0:
                    break
        return best

    def rec() -> bool:
        nonlocal nodes
        v = pick()
        if v is None:
            return True
        if live[v] == 0:
            return False
        for c in m.lists[v]:
            if blocked[v][c]:
                continue
            nodes += 1
            col[v] = c
            place(v, c, +1)
            if rec():
                return True
            place(v, c, -1)
            del col[v]
        return False

    ok = rec()
    dt = time.perf_counter() - t0
    if ok:
        return SolveResult(SAT, dict((v, col[v]) for v in verts), nodes, dt)
    return SolveResult(UNSAT, None, nodes, dt)


def brute_force_colorings(m: MatchingAssignment) -> list[dict]:
    """Every M_L-coloring by walking the full product of lists.

    Exponential; meant as an independent reference for small instances.
    """
    verts = m.host.vertices
    edges = m.host.edges()
    out = []
    for choice in product(*(m.lists[v] for v in verts)):
        col = dict(zip(verts, choice))
        if all(m.partner(u, col[u], v) != col[v] for u, v in edges):
            out.append(col)
    return out


# ---------------------------------------------------------------------------
# adversarial search over matching assignments

DEFAULT_BUDGET = 10 ** 8


def spanning_forest(g: Graph) -> list[tuple]:
    """BFS forest rooted at the earliest vertex of each component."""
    seen = set()
    tree = []
    for root in g:
        if root in seen:
            continue
        seen.add(root)
        frontier = [root]
        pos = g.index()
        while frontier:
            nxt = []
            for u in frontier:
                for w in sorted(g.neighbors(u), key=pos.__getitem__):
                    if w not in seen:
                        seen.add(w)
                        tree.append((u, w))
                        nxt.append(w)
            frontier = nxt
    return tree


def adversary_space_size(g: Graph, k: int, canonical: bool = True) -> int:
    free = g.m - len(spanning_forest(g)) if canonical else g.m
    return math.factorial(k) ** free


def iter_assignments(g: Graph, k: int, canonical: bool = True):
    """Perfect-matching assignments with lists ``{1..k}``.

    With ``canonical`` the spanning forest edges are fixed straight and only
    the remaining edges range over all ``k!`` permutations.  Every
    assignment is equivalent, up to renaming colors, to one of these.
    """
    if canonical:
        tree = {frozenset(e) for e in spanning_forest(g)}
        free = [e for e in g.edges() if frozenset(e) not in tree]
    else:
        free = g.edges()
    perms = list(permutations(range(1, k + 1)))
    for choice in product(perms, repeat=len(free)):
        yield permutation_assignment(g, k, dict(zip(free, choice)))


def dp_colorable_for_all(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                         canonical: bool = True):
    """Is every k-list matching assignment of ``g`` colorable?

    Returns ``(True, None)`` or ``(False, counterexample)``; the
    counterexample is the first failing assignment in enumeration order.
    """
    size = adversary_space_size(g, k, canonical)
    if size > budget:
        raise Refusal(f"adversary space has {size} assignments, budget is {budget}")
    for m in iter_assignments(g, k, canonical):
        if not solve_exact(m).sat:
            return False, m
    return True, None


@dataclass
class DPChromaticResult:
    value: int | None
    counterexamples: dict = field(default_factory=dict)  # k -> assignment


def dp_chromatic_number_exact(g: Graph, k_max: int, budget: int = DEFAULT_BUDGET) -> DPChromaticResult:
    """Least k <= k_max such that every k-assignment is colorable.

    ``value`` is None when even k_max fails.  For every k that fails, a
    counterexample assignment is kept.
    """
    res = DPChromaticResult(None)
    for k in range(1, k_max + 1):
        ok, cex = dp_colorable_for_all(g, k, budget)
        if ok:
            res.value = k
            return res
        res.counterexamples[k] = cex
    return res
