"""Working state for a catalog coloring procedure.

A procedure is written against vertex *names* of its catalog graph and
talks to a :class:`CaseContext`.  The context holds

* the working matching assignment (the original one after the renamings
  done so far),
* the cumulative renaming from original to working color names,
* the partial coloring in working names,
* the trace, recorded in original names.

Every bound the procedure relies on is checked when it is used.  A failed
check raises :class:`InternalConsistencyError` with the trace attached.

``view(sigma)`` gives a second handle on the same state in which names are
first sent through the vertex map ``sigma``.  Procedures use it to rerun a
branch on a symmetric copy of a triangle.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from ..cover import MatchingAssignment
from ..errors import InternalConsistencyError, Refusal
from ..graph import Graph
from ..solver import verify_coloring
from ..transform import (
    color_path_ends,
    exploit_non_property_P,
    has_property_P,
    is_straight,
    straighten_tree,
)
from .trace import ColoringTrace


def _names(spec) -> list:
    if isinstance(spec, str):
        return spec.split()
    return list(spec)


def path_edges(spec) -> list:
    """``"a b c"`` -> [(a, b), (b, c)]; tuples of names work too."""
    vs = _names(spec)
    return list(zip(vs, vs[1:]))


class _State:
    def __init__(self, graph: Graph, m: MatchingAssignment, trace: ColoringTrace):
        self.graph = graph
        self.m0 = m
        self.m = m
        self.ren = {v: {c: c for c in m.lists[v]} for v in graph}
        self.forest: list = []
        self.col: dict = {}
        self.trace = trace


class CaseContext:
    def __init__(self, graph: Graph, m: MatchingAssignment, entry: str = "",
                 trace: ColoringTrace | None = None, _state=None, _phi=None):
        if _state is None:
            if m.host != graph:
                raise Refusal("assignment host differs from catalog graph")
            _state = _State(graph, m, trace or ColoringTrace(entry))
        self._s = _state
        self._phi = _phi or {}

    # naming -------------------------------------------------------------
    def v(self, name):
        return self._phi.get(name, name)

    def view(self, sigma: Mapping) -> "CaseContext":
        phi = {a: self.v(b) for a, b in sigma.items()}
        for k, val in self._phi.items():
            phi.setdefault(k, val)
        return CaseContext(self._s.graph, self._s.m0, _state=self._s, _phi=phi)

    def symmetric(self, src, dst) -> "CaseContext":
        """View under an automorphism of the catalog graph taking the names
        in ``src`` to those in ``dst`` (in this view's naming)."""
        from .symmetry import automorphism_mapping
        a = [self.v(x) for x in _names(src)]
        b = [self.v(x) for x in _names(dst)]
        sigma = automorphism_mapping(self._s.graph, a, b)
        if sigma is None:
            self.fail(f"no automorphism takes {a!r} to {b!r}")
        self._s.trace.add("symmetry", src=a, dst=b)
        # sigma acts on real vertices; names go through phi first
        phi = {n: sigma[self.v(n)] for n in self._s.graph}
        return CaseContext(self._s.graph, self._s.m0, _state=self._s, _phi=phi)

    @property
    def graph(self) -> Graph:
        return self._s.graph

    @property
    def trace(self) -> ColoringTrace:
        return self._s.trace

    def fail(self, msg: str):
        self._s.trace.add("fail", message=msg)
        raise InternalConsistencyError(msg, self._s.trace)

    def note(self, text: str) -> None:
        self._s.trace.add("note", text=text)

    def branch(self, name: str) -> None:
        self._s.trace.add("branch", name=name)

    # queries ------------------------------------------------------------
    def adjacent(self, a, b) -> bool:
        return self._s.graph.has_edge(self.v(a), self.v(b))

    def res(self, name) -> list:
        v = self.v(name)
        if v in self._s.col:
            self.fail(f"residual asked for colored vertex {v!r}")
        return self._s.m.residual(v, self._s.col)

    def res_under(self, name, colors: Mapping) -> list:
        """Residual list of ``name`` against the partial coloring ``colors``
        (names to working colors) alone, ignoring what is colored now."""
        partial = {self.v(k): c for k, c in colors.items()}
        return self._s.m.residual(self.v(name), partial)

    def colored(self, name):
        return self._s.col.get(self.v(name))

    def is_colored(self, name) -> bool:
        return self.v(name) in self._s.col

    def straight(self, a, b) -> bool:
        return is_straight(self._s.m, self.v(a), self.v(b))

    def matched(self, a, ca, b, cb) -> bool:
        """Is (a, ca)(b, cb) a pair of the working matching on ab?"""
        return self._s.m.partner(self.v(a), ca, self.v(b)) == cb

    def partner(self, a, ca, b):
        return self._s.m.partner(self.v(a), ca, self.v(b))

    def P(self, label: str, tri) -> bool:
        t = tuple(self.v(x) for x in _names(tri))
        ok = has_property_P(self._s.m, t)
        self._s.trace.add("test", label=label, triangle=list(t), P=ok)
        return ok

    # bounds -------------------------------------------------------------
    def require(self, name, k: int) -> None:
        r = self.res(name)
        if len(r) < k:
            self.fail(f"|L({self.v(name)!r}, I)| = {len(r)} < {k}")

    def requires(self, **bounds) -> None:
        for name, k in bounds.items():
            self.require(name, k)

    # renaming -------------------------------------------------------------
    def straighten(self, *paths) -> None:
        """Make every edge on the given paths straight.

        Edges joining two parts of the current forest are added to it; an
        edge that would close a cycle is not, and its straightness must
        then follow from property P of the triangles involved.  Either way
        each listed edge is checked to be straight afterwards.
        """
        s = self._s
        want = [(self.v(a), self.v(b)) for p in paths for a, b in path_edges(p)]
        comp = {}

        def find(x):
            while comp.get(x, x) != x:
                x = comp[x]
            return x

        for a, b in s.forest:
            comp[find(a)] = find(b)
        added = []
        for a, b in want:
            if not s.graph.has_edge(a, b):
                self.fail(f"{a!r}{b!r} is not an edge")
            ra, rb = find(a), find(b)
            if ra != rb:
                comp[ra] = rb
                added.append((a, b))
        if added:
            s.forest.extend(added)
            new_m, renames = straighten_tree(s.m, s.forest)
            s.m = new_m
            s.ren = {v: {c: renames[v][d] for c, d in s.ren[v].items()} for v in s.ren}
            s.col = {v: renames[v][c] for v, c in s.col.items()}
            s.trace.add("straighten", edges=[list(e) for e in added])
        for a, b in want:
            if not is_straight(s.m, a, b):
                self.fail(f"edge {a!r}{b!r} is not straight after renaming")

    def _component(self, v) -> set:
        adj = {}
        for a, b in self._s.forest:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        seen, stack = {v}, [v]
        while stack:
            for w in adj.get(stack.pop(), ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def _orig(self, v, c):
        for o, d in self._s.ren[v].items():
            if d == c:
                return o
        self.fail(f"no original name for color {c!r} at {v!r}")

    # coloring -------------------------------------------------------------
    def color(self, name, c, why: str = "") -> None:
        v = self.v(name)
        if c not in self.res(name):
            self.fail(f"color {c!r} is not available at {v!r}")
        self._s.col[v] = c
        self._s.trace.add("color", vertex=v, color=self._orig(v, c), why=why)

    def uncolor(self, *names) -> None:
        for name in (n for spec in names for n in _names(spec)):
            v = self.v(name)
            if v in self._s.col:
                del self._s.col[v]
                self._s.trace.add("uncolor", vertex=v)

    def reset(self) -> None:
        """Drop the whole partial coloring and forget the straightened
        forest (the renamed colors stay as they are)."""
        for v in list(self._s.col):
            del self._s.col[v]
            self._s.trace.add("uncolor", vertex=v)
        self._s.forest = []

    def match_color(self, name, other) -> None:
        """Give ``name`` the color already on ``other`` (straight-joined,
        non-adjacent)."""
        c = self.colored(other)
        a, b = self.v(name), self.v(other)
        if c is None:
            self.fail(f"{b!r} is not colored")
        if self._s.graph.has_edge(a, b):
            self.fail(f"{a!r} and {b!r} are adjacent")
        if b not in self._component(a):
            self.fail(f"{a!r} and {b!r} are not joined by straight tree edges")
        self.color(name, c, why="same")

    def same_color(self, *names, color=None, allow_adjacent=False):
        """Give the listed pairwise non-adjacent vertices one common color.

        They must lie in one tree of the straightened forest, which is
        what makes "the same color" meaningful.  The least common residual
        color is used unless ``color`` is given.
        """
        vs = [n for spec in names for n in _names(spec)]
        real = [self.v(n) for n in vs]
        for i, a in enumerate(real):
            for b in real[i + 1:]:
                if not allow_adjacent and self._s.graph.has_edge(a, b):
                    self.fail(f"same color asked for adjacent {a!r}, {b!r}")
        comp = self._component(real[0])
        for b in real[1:]:
            if b not in comp:
                self.fail(f"{real[0]!r} and {b!r} are not joined by straight tree edges")
        common = None
        for n in vs:
            r = self.res(n)
            common = [c for c in (common if common is not None else r) if c in r]
        if color is not None:
            if color not in common:
                self.fail(f"color {color!r} not common to {real!r}")
            common = [color]
        if not common:
            self.fail(f"no common residual color on {real!r}")
        alpha = common[0]
        for n in vs:
            self.color(n, alpha, why="same")
        return alpha

    def choose(self, name, keep: Mapping | None = None, among: Iterable | None = None,
               avoid: Iterable = ()):
        """Color ``name`` with the least residual color that leaves every
        ``keep[u]`` vertex with at least that many residual colors."""
        v = self.v(name)
        keep = keep or {}
        cand = self.res(name)
        if among is not None:
            among = list(among)
            cand = [c for c in cand if c in among]
        avoid = set(avoid)
        s = self._s
        for c in cand:
            if c in avoid:
                continue
            s.col[v] = c
            ok = all(len(self.res(u)) >= k for u, k in keep.items())
            del s.col[v]
            if ok:
                self.color(name, c, why="choose")
                return c
        self.fail(f"no color for {v!r} keeps {dict(keep)!r}")

    def exploit(self, v1, v2, v3, need: int = 3):
        """Non-P triangle: color v1, v2 so that v3 keeps ``need`` colors."""
        t = (self.v(v1), self.v(v2), self.v(v3))
        try:
            a1, a2 = exploit_non_property_P(self._s.m, t, self._s.col)
        except Refusal as exc:
            self.fail(f"exploit on {t!r}: {exc}")
        self.color(v1, a1, why="exploit")
        self.color(v2, a2, why="exploit")
        if need:
            self.require(v3, need)
        return a1, a2

    def path_ends(self, x, y, z):
        t = (self.v(x), self.v(y), self.v(z))
        before = len(self.res(y))
        try:
            a1, a2 = color_path_ends(self._s.m, *t, self._s.col)
        except Refusal as exc:
            self.fail(f"path ends {t!r}: {exc}")
        self.color(x, a1, why="path-ends")
        self.color(z, a2, why="path-ends")
        if len(self.res(y)) < before - 1:
            self.fail(f"path ends cost {t[1]!r} more than one color")
        return a1, a2

    def greedy(self, *order) -> None:
        for name in (n for spec in order for n in _names(spec)):
            r = self.res(name)
            if not r:
                self.fail(f"greedy step: {self.v(name)!r} has no color left")
            self.color(name, r[0], why="greedy")

    # wrap-up -------------------------------------------------------------
    def finish(self) -> dict:
        s = self._s
        missing = [v for v in s.graph if v not in s.col]
        if missing:
            self.fail(f"procedure ended with uncolored vertices {missing!r}")
        out = {v: self._orig(v, s.col[v]) for v in s.graph}
        if not verify_coloring(s.m0, out):
            self.fail("final coloring is not independent in the cover")
        return out
