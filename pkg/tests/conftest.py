import networkx as nx
import pytest

from dpcolor.graph import Graph, build_graph


def nx_to_graph(h: nx.Graph) -> Graph:
    return Graph(sorted(h.nodes), h.edges)


def path_graph(n):
    return build_graph((i, i + 1) for i in range(n - 1))


def star(k):
    return build_graph((0, i) for i in range(1, k + 1))


def petersen():
    return nx_to_graph(nx.petersen_graph())


def small_connected_graphs(max_n=5):
    """All connected graphs on 1..max_n vertices up to isomorphism."""
    out = []
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_n and nx.is_connected(h):
            out.append(nx_to_graph(h))
    return out


@pytest.fixture
def c4():
    return build_graph([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


# acceptance results are collected here and printed once at the end
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
