from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.cover import (MatchingAssignment, build_cover, dumps_assignment,
                           identity_assignment, loads_assignment, random_assignment,
                           residual_list, validate_assignment)
from dpcolor.errors import Refusal
from dpcolor.graph import Graph, build_graph, complete_graph, cycle_graph, k5_minus_edge
from dpcolor.solver import brute_force_colorings, solve_exact

from conftest import small_connected_graphs


def test_identity_assignment_examples():
    g = build_graph([("u", "v")])
    m = identity_assignment(g)
    assert m.pairs("u", "v") == ((1, 1), (2, 2), (3, 3), (4, 4))
    m = identity_assignment(g, {"u": (1, 2), "v": (3, 4)})
    assert m.pairs("u", "v") == ((1, 3), (2, 4))
    tri = complete_graph(3)
    m = identity_assignment(tri)
    assert all(dict(m.pairs(a, b)) == {c: c for c in range(1, 5)} for a, b in tri.edges())


def test_mirror_orientation():
    g = build_graph([("u", "v")])
    m = MatchingAssignment(g, {"u": (1, 2), "v": (1, 2)}, {("v", "u"): [(1, 2), (2, 1)]})
    assert m.partner("u", 2, "v") == 1 and m.partner("v", 1, "u") == 2
    assert m.pairs("v", "u") == tuple((b, a) for a, b in m.pairs("u", "v"))


def test_random_assignment_examples():
    m = random_assignment(k5_minus_edge(), 4, 11)
    assert len(m.canonical_pairs()) == 9
    assert all(len(ps) == 4 for ps in m.canonical_pairs().values())
    assert dumps_assignment(m) == dumps_assignment(random_assignment(k5_minus_edge(), 4, 11))
    m = random_assignment(cycle_graph(4), 2, 5)
    assert len(m.canonical_pairs()) == 4 and m.is_perfect()
    with pytest.raises(Refusal):
        random_assignment(cycle_graph(4), 0, 1)


def test_cover_counts():
    cov = build_cover(identity_assignment(build_graph([("u", "v")])))
    assert len(cov.nodes) == 8
    fiber = [e for e in cov.edges if len({x for x, _ in e}) == 1]
    assert len(fiber) == 12 and len(cov.edges) == 16
    g = Graph(["solo"])
    cov = build_cover(identity_assignment(g))
    assert len(cov.nodes) == 4 and len(cov.edges) == 6
    cov = build_cover(identity_assignment(cycle_graph(4), k=2))
    assert len(cov.nodes) == 8
    fiber = [e for e in cov.edges if len({x for x, _ in e}) == 1]
    assert len(fiber) == 4 and len(cov.edges) - len(fiber) == 8


def test_cover_rejects_bad_assignment():
    g = build_graph([("u", "v")])
    m = MatchingAssignment(g, {"u": (1, 2), "v": (1, 2)}, {("u", "v"): [(1, 1), (1, 2)]})
    with pytest.raises(Refusal, match="u"):
        build_cover(m)


def test_residual_list_examples(c4):
    m = identity_assignment(c4)
    assert residual_list(m, "a", {}) == [1, 2, 3, 4]
    assert len(residual_list(m, "a", {"b": 3})) == 3
    tri = complete_graph(3)
    m = identity_assignment(tri)
    assert residual_list(m, 2, {0: 1, 1: 2}) == [3, 4]
    with pytest.raises(Refusal):
        residual_list(m, 0, {0: 1})


def test_validate_assignment():
    g = build_graph([("u", "v")])
    assert validate_assignment(identity_assignment(g)) == []
    dup = MatchingAssignment(g, {"u": (1, 2), "v": (1, 2)}, {("u", "v"): [(1, 1), (1, 2)]})
    assert validate_assignment(dup)
    outside = MatchingAssignment(g, {"u": (1, 2), "v": (1, 2)}, {("u", "v"): [(1, 7)]})
    assert validate_assignment(outside)


def test_json_round_trip():
    g = k5_minus_edge()
    m = random_assignment(g, 4, 3)
    text = dumps_assignment(m)
    assert loads_assignment(text, g) == m
    assert dumps_assignment(loads_assignment(text)) == text


def test_relabeled_assignment():
    g = k5_minus_edge()
    m = random_assignment(g, 4, 8)
    phi = {v: f"n{i}" for i, v in enumerate(g)}
    r = m.relabeled(phi)
    for u, v in g.edges():
        assert r.pairs(phi[u], phi[v]) == m.pairs(u, v)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 5))
def test_cover_node_count_and_residual_drop(seed, k):
    g = k5_minus_edge()
    m = random_assignment(g, k, seed)
    assert len(build_cover(m).nodes) == sum(len(m.lists[v]) for v in g)
    # coloring one more vertex removes exactly one color from each
    # uncolored neighbor whose partner color is still present
    partial = {"u": m.lists["u"][seed % k]}
    for w in g.neighbors("u"):
        before = set(m.lists[w])
        after = set(residual_list(m, w, partial))
        assert before - after == {m.partner("u", partial["u"], w)}


def test_identity_solver_matches_list_coloring_bruteforce():
    """Identity matchings turn the problem into list coloring; compare the
    exact solver with a plain proper-coloring enumeration."""
    for g in small_connected_graphs(6):
        for k in (1, 2, 3):
            m = identity_assignment(g, k=k)
            verts = g.vertices
            proper = any(
                all(c[verts.index(u)] != c[verts.index(v)] for u, v in g.edges())
                for c in product(range(1, k + 1), repeat=len(verts)))
            assert solve_exact(m).sat == proper
            assert bool(brute_force_colorings(m)) == proper
