"""Simple undirected graphs plus the metric and planarity predicates used
to recognise maximal planar graphs of diameter two (MP2-graphs).

Vertices keep insertion order.  Whenever an algorithm needs a deterministic
tie-break it uses that order, so a graph read from a file behaves the same
way on every run.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

import networkx as nx

from .errors import InternalConsistencyError, Refusal

Vertex = Hashable


class Graph:
    """Finite simple undirected graph with ordered vertices."""

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable[tuple] = ()):
        self._adj: dict[Vertex, set] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    # construction -------------------------------------------------------
    def add_vertex(self, v: Vertex) -> None:
        if v not in self._adj:
            self._adj[v] = set()

    def add_edge(self, u: Vertex, v: Vertex) -> None:
        if u == v:
            raise Refusal(f"self-loop at {u!r}")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_vertex(self, v: Vertex) -> None:
        for w in self._adj.pop(v):
            self._adj[w].discard(v)

    def copy(self) -> "Graph":
        g = Graph(self.vertices)
        for u, v in self.edges():
            g.add_edge(u, v)
        return g

    def relabel(self, mapping: dict) -> "Graph":
        """Return the image of this graph under a vertex bijection."""
        g = Graph(mapping[v] for v in self.vertices)
        for u, v in self.edges():
            g.add_edge(mapping[u], mapping[v])
        return g

    def subgraph(self, keep: Iterable[Vertex]) -> "Graph":
        keep = set(keep)
        g = Graph(v for v in self.vertices if v in keep)
        for u, v in self.edges():
            if u in keep and v in keep:
                g.add_edge(u, v)
        return g

    # queries ------------------------------------------------------------
    @property
    def vertices(self) -> list:
        return list(self._adj)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self) -> Iterator:
        return iter(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def neighbors(self, v: Vertex) -> set:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    def index(self) -> dict:
        """Position of each vertex in the insertion order."""
        return {v: i for i, v in enumerate(self._adj)}

    def edges(self) -> list[tuple]:
        """Each edge once, as (earlier, later) in vertex order."""
        pos = self.index()
        out = []
        for u in self._adj:
            for v in sorted(self._adj[u], key=pos.__getitem__):
                if pos[u] < pos[v]:
                    out.append((u, v))
        return out

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self._adj)
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        return cls(g.nodes, g.edges)


def build_graph(edge_list: Iterable[tuple]) -> Graph:
    """Build a graph from vertex pairs; duplicates collapse, loops are refused."""
    g = Graph()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise Refusal(f"self-loop in edge list: {pair!r}")
        g.add_edge(u, v)
    return g


# ---------------------------------------------------------------------------
# metrics

@dataclass(frozen=True)
class GraphMetrics:
    diameter: float
    min_degree: int
    max_degree: int


def bfs_distances(g: Graph, source: Vertex) -> dict:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def diameter(g: Graph) -> float:
    """Largest shortest-path distance; ``math.inf`` for a disconnected graph.

    The empty graph and a single vertex have diameter 0.
    """
    best = 0
    for v in g:
        dist = bfs_distances(g, v)
        if len(dist) < g.n:
            return math.inf
        best = max(best, max(dist.values()))
    return best


def degree_stats(g: Graph) -> GraphMetrics:
    degs = [g.degree(v) for v in g] or [0]
    return GraphMetrics(diameter(g), min(degs), max(degs))


# ---------------------------------------------------------------------------
# planarity

def is_planar(g: Graph) -> bool:
    # networkx ships the left-right planarity test; no reason to write another
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar


def is_maximal_planar(g: Graph) -> bool:
    if g.n < 3:
        raise Refusal("maximal planarity is only defined here for |V| >= 3")
    return g.m == 3 * g.n - 6 and is_planar(g)


def is_mp2(g: Graph) -> bool:
    """Maximal planar with diameter at most two.

    For five or more vertices every such graph has minimum degree 3 or 4.
    That fact is re-checked here and a violation is reported as a bug.
    """
    if g.n < 3:
        return False
    if not is_maximal_planar(g) or diameter(g) > 2:
        return False
    if g.n >= 5:
        delta = min(g.degree(v) for v in g)
        if not 3 <= delta <= 4:
            raise InternalConsistencyError(
                f"MP2 graph with minimum degree {delta}; predicates disagree")
    return True


def mp2_reasons(g: Graph) -> list[str]:
    """Human readable list of MP2 conditions that ``g`` fails (empty if MP2)."""
    reasons = []
    if g.n < 3:
        return ["fewer than 3 vertices"]
    if g.m != 3 * g.n - 6:
        reasons.append(f"edge count {g.m} != 3n-6 = {3 * g.n - 6}")
    if not is_planar(g):
        reasons.append("not planar")
    d = diameter(g)
    if d > 2:
        reasons.append(f"diameter {d} > 2")
    return reasons


# ---------------------------------------------------------------------------
# edge-list text format

def parse_edge_list(text: str) -> Graph:
    """One edge per line, two whitespace separated tokens, '#' comments.

    A line with a single token declares an isolated vertex.  Tokens are kept
    as strings.
    """
    g = Graph()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) == 1:
            g.add_vertex(toks[0])
        elif len(toks) == 2:
            if toks[0] == toks[1]:
                raise Refusal(f"line {lineno}: self-loop {toks[0]!r}")
            g.add_edge(toks[0], toks[1])
        else:
            raise Refusal(f"line {lineno}: expected 1 or 2 tokens, got {len(toks)}")
    return g


def format_edge_list(g: Graph) -> str:
    lines = []
    touched = set()
    for u, v in g.edges():
        lines.append(f"{u} {v}")
        touched.update((u, v))
    isolated = [f"{v}" for v in g if v not in touched]
    return "\n".join(isolated + lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))


# ---------------------------------------------------------------------------
# small named graphs used throughout tests and examples

def cycle_graph(n: int) -> Graph:
    return build_graph((i, (i + 1) % n) for i in range(n))


def complete_graph(n: int) -> Graph:
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))


def k5_minus_edge() -> Graph:
    """K5 without the edge u-v; the other three vertices are w1, w2, w3."""
    names = ["u", "v", "w1", "w2", "w3"]
    g = Graph(names)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if {a, b} != {"u", "v"}:
                g.add_edge(a, b)
    return g


def octahedron() -> Graph:
    return Graph.from_networkx(nx.octahedral_graph())
