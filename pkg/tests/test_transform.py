import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.cover import (MatchingAssignment, identity_assignment, permutation_assignment,
                           random_assignment)
from dpcolor.errors import Refusal
from dpcolor.graph import Graph, build_graph, complete_graph, k5_minus_edge
from dpcolor.solver import brute_force_colorings, solve_exact, spanning_forest
from dpcolor.transform import (color_path_ends, exploit_non_property_P, has_property_P,
                               is_straight, straight_edges, straighten_tree)

TRI = ("v1", "v2", "v3")


def triangle(perms=None):
    g = build_graph([("v1", "v2"), ("v2", "v3"), ("v1", "v3")])
    return permutation_assignment(g, 4, perms or {})


def test_straight_edges_examples():
    g = k5_minus_edge()
    assert straight_edges(identity_assignment(g)) == set(g.edges())
    m = permutation_assignment(build_graph([("a", "b")]), 4, {("a", "b"): (2, 1, 3, 4)})
    assert not straight_edges(m)
    assert not straight_edges(identity_assignment(Graph()))


def test_straighten_k5e_path():
    m = random_assignment(k5_minus_edge(), 4, 2)
    new, _ = straighten_tree(m, [("u", "w1"), ("w1", "v")])
    assert is_straight(new, "u", "w1") and is_straight(new, "w1", "v")


def test_straighten_single_transposition():
    g = build_graph([("a", "b")])
    m = permutation_assignment(g, 4, {("a", "b"): (2, 1, 3, 4)})
    new, ren = straighten_tree(m, [("a", "b")])
    assert ren["a"] == {1: 1, 2: 2, 3: 3, 4: 4}
    assert ren["b"] == {2: 1, 1: 2, 3: 3, 4: 4}
    assert is_straight(new, "a", "b")


def test_straighten_rejects_cycles():
    g = complete_graph(3)
    with pytest.raises(Refusal):
        straighten_tree(identity_assignment(g), g.edges())


def test_property_P_examples():
    assert has_property_P(triangle(), TRI)
    assert not has_property_P(triangle({("v1", "v3"): (2, 1, 3, 4)}), TRI)
    with pytest.raises(Refusal):
        has_property_P(identity_assignment(build_graph([("a", "b"), ("b", "c")])), ("a", "b", "c"))


def _exploit_oracle(m, tri):
    """All (a1, a2) pairs, independent in the cover, leaving v3 >= 3 colors."""
    v1, v2, v3 = tri
    good = []
    for a1, a2 in product(m.lists[v1], m.lists[v2]):
        if m.partner(v1, a1, v2) == a2:
            continue
        if len(m.residual(v3, {v1: a1, v2: a2})) >= 3:
            good.append((a1, a2))
    return good


def test_exploit_single_twist_frozen():
    m = triangle({("v1", "v3"): (2, 1, 3, 4)})
    # oracle computed once by enumerating all 16 pairs, then frozen
    assert _exploit_oracle(m, TRI) == [(1, 2), (2, 1)]
    a1, a2 = exploit_non_property_P(m, TRI)
    assert (a1, a2) == (1, 2)
    assert m.partner("v1", a1, "v3") == m.partner("v2", a2, "v3") == 2
    assert len(m.residual("v3", {"v1": a1, "v2": a2})) == 3


def test_exploit_refuses_P_triangle():
    with pytest.raises(Refusal):
        exploit_non_property_P(triangle(), TRI)


def test_path_ends_examples():
    g = build_graph([("x", "y"), ("y", "z"), ("x", "p"), ("z", "q"), ("y", "r")])
    m = random_assignment(g, 4, 21)
    partial = {"p": 1, "q": 2, "r": 3}
    a1, a2 = color_path_ends(m, "x", "y", "z", partial)
    before = len(m.residual("y", partial))
    after = len(m.residual("y", {**partial, "x": a1, "z": a2}))
    assert before - after <= 1
    tri = identity_assignment(complete_graph(3))
    with pytest.raises(Refusal):
        color_path_ends(tri, 0, 1, 2)


def test_path_ends_prefers_a_coinciding_pair():
    # x and z both block y's color 1 when colored 1; that pair costs y one color
    g = build_graph([("x", "y"), ("y", "z")])
    m = identity_assignment(g)
    a1, a2 = color_path_ends(m, "x", "y", "z")
    assert a1 == a2 == 1
    assert len(m.residual("y", {"x": a1, "z": a2})) == 3


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_P_equals_straightenable(seed):
    m = random_assignment(triangle().host, 4, seed)
    new, _ = straighten_tree(m, [("v1", "v2"), ("v2", "v3")])
    assert has_property_P(m, TRI) == is_straight(new, "v1", "v3")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9), st.randoms(use_true_random=False))
def test_P_invariant_under_renaming(seed, rnd):
    m = random_assignment(triangle().host, 4, seed)
    ren = {}
    for v in TRI:
        img = [1, 2, 3, 4]
        rnd.shuffle(img)
        ren[v] = dict(zip([1, 2, 3, 4], img))
    assert has_property_P(m, TRI) == has_property_P(m.renamed(ren), TRI)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_exploit_postcondition(seed):
    m = random_assignment(triangle().host, 4, seed)
    if has_property_P(m, TRI):
        return
    a1, a2 = exploit_non_property_P(m, TRI)
    assert m.partner("v1", a1, "v2") != a2
    assert len(m.residual("v3", {"v1": a1, "v2": a2})) >= 3
    assert (a1, a2) in _exploit_oracle(m, TRI)


def _random_graph(rng, n):
    g = Graph(range(n))
    for i in range(1, n):
        g.add_edge(i, rng.randrange(i))
    for _ in range(rng.randint(0, n)):
        a, b = rng.sample(range(n), 2)
        g.add_edge(a, b)
    return g


@pytest.mark.parametrize("seed", range(15))
def test_straightening_preserves_solutions(seed):
    rng = random.Random(seed)
    g = _random_graph(rng, rng.randint(2, 6))
    k = rng.choice([2, 3])
    m = random_assignment(g, k, rng)
    tree = spanning_forest(g)
    new, ren = straighten_tree(m, tree)
    assert all(is_straight(new, u, v) for u, v in tree)
    old_sols = brute_force_colorings(m)
    mapped = sorted(sorted((v, ren[v][c]) for v, c in s.items()) for s in old_sols)
    assert mapped == sorted(sorted(s.items()) for s in brute_force_colorings(new))
    assert solve_exact(m).status == solve_exact(new).status
    # idempotent on its tree
    again, ren2 = straighten_tree(new, tree)
    assert all(is_straight(again, u, v) for u, v in tree)
    assert all(ren2[v] == {c: c for c in new.lists[v]} for v in g)
