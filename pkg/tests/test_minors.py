from __future__ import annotations

import itertools

import pytest

from stressfree import catalog
from stressfree.graph import Graph, GraphError, are_isomorphic, complete_graph, empty_graph
from stressfree.minors import (
    MinorWitness,
    SearchBudgetExceeded,
    check_mader,
    delta_wye,
    edge_triangle_counts,
    has_clique_minor,
    has_minor,
    is_linkless,
    linkless_obstruction,
    mader_bound,
    petersen_family,
    triangle_saturated_minor,
    verify_minor_witness,
    wye_delta,
)
from stressfree.graph import CliqueSeparation

from conftest import random_graph


def _paths(g: Graph, a: int, b: int, blocked: set[int]):
    stack = [(a, [a])]
    while stack:
        x, path = stack.pop()
        for y in g.neighbors(x):
            if y == b:
                yield path + [b]
            elif y not in blocked and y not in path:
                stack.append((y, path + [y]))


def has_subdivision(g: Graph, r: int) -> bool:
    """Topological K_r by choosing branch vertices and internally disjoint paths."""
    pairs = list(itertools.combinations(range(r), 2))
    for branch in itertools.permutations(g.vertices, r):
        if list(branch[:1]) != [min(branch)] or any(g.degree(v) < r - 1 for v in branch):
            continue

        def route(k: int, used: set[int]) -> bool:
            if k == len(pairs):
                return True
            i, j = pairs[k]
            for p in _paths(g, branch[i], branch[j], used | set(branch)):
                inner = set(p[1:-1])
                if len(p) == 2 and k > 0 and any(
                        {branch[x], branch[y]} == {branch[i], branch[j]} for x, y in pairs[:k]):
                    continue
                if route(k + 1, used | inner):
                    return True
            return False

        if route(0, set()):
            return True
    return False


def test_clique_in_clique():
    w = has_minor(complete_graph(5), complete_graph(4))
    assert w is not None and verify_minor_witness(complete_graph(5), complete_graph(4), w)
    assert all(len(b) == 1 for b in w.branch_sets)


def test_petersen_has_k5():
    g = catalog.get("petersen")
    w = has_clique_minor(g, 5)
    assert w is not None and verify_minor_witness(g, complete_graph(5), w)
    assert sorted(len(b) for b in w.branch_sets) == [2] * 5


def test_icosahedron_has_no_k5():
    assert has_clique_minor(catalog.get("icosahedron"), 5) is None


def test_k4_pattern_k5():
    assert has_clique_minor(complete_graph(4), 5) is None


def test_verifier_rejects_bad_witnesses():
    g, h = complete_graph(4), complete_graph(3)
    ok = MinorWitness(4, h, (frozenset({1}), frozenset({2}), frozenset({3, 4})))
    assert verify_minor_witness(g, h, ok)
    overlap = MinorWitness(4, h, (frozenset({1, 2}), frozenset({2}), frozenset({3})))
    assert not verify_minor_witness(g, h, overlap)
    path = Graph.from_edges([(1, 2), (2, 3), (3, 4)])
    missing = MinorWitness(4, h, (frozenset({1}), frozenset({2}), frozenset({3, 4})))
    assert not verify_minor_witness(path, h, missing)
    disconnected = MinorWitness(4, Graph.from_edges([(1, 2)]), (frozenset({1, 3}), frozenset({2})))
    assert not verify_minor_witness(path, Graph.from_edges([(1, 2)]), disconnected)
    empty = MinorWitness(4, h, (frozenset(), frozenset({2}), frozenset({3})))
    assert not verify_minor_witness(g, h, empty)


def test_search_agrees_with_subdivisions(rng):
    for _ in range(80):
        g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.2, 0.7))
        for r in (2, 3, 4):
            w = has_clique_minor(g, r)
            assert (w is not None) == has_subdivision(g, r), (g.sorted_edges(), r)


def test_witnesses_verify_and_monotone(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 8))
        h = random_graph(rng, rng.randint(2, 4))
        w = has_minor(g, h)
        if w is None:
            continue
        assert verify_minor_witness(g, h, w)
        missing = [e for e in complete_graph(g.n).sorted_edges() if e not in g.edges]
        if missing:
            assert has_minor(g.add_edges(missing[:2]), h) is not None


def test_clique_minor_transitivity(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(5, 8), 0.6)
        if has_clique_minor(g, 5):
            assert has_clique_minor(g, 4)


def test_disconnected_pattern():
    two_edges = Graph.from_edges([(1, 2), (3, 4)])
    assert has_minor(Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5)]), two_edges) is not None
    assert has_minor(Graph.from_edges([(1, 2), (1, 3), (1, 4)]), two_edges) is None
    assert has_minor(Graph.from_edges([(1, 2)], 5), empty_graph(4)) is not None


def test_budget_exceeded():
    with pytest.raises(SearchBudgetExceeded):
        has_clique_minor(catalog.get("icosahedron"), 5, budget=10)


def test_delta_wye_round_trip():
    k6 = complete_graph(6)
    g = delta_wye(k6, (1, 2, 3))
    assert g.n == 7 and g.m == 15 and g.degree(7) == 3
    back = wye_delta(g, 7)
    assert back == k6
    assert wye_delta(complete_graph(4), 1) is None
    with pytest.raises(GraphError):
        wye_delta(k6, 1)


def test_petersen_family():
    fam = petersen_family()
    assert len(fam) == 7
    assert all(g.m == 15 for g in fam)
    assert fam[0] == complete_graph(6)
    assert sum(1 for g in fam if g.n == 10 and set(g.degrees()) == {3}) == 1
    for a, b in itertools.combinations(fam, 2):
        assert not are_isomorphic(a, b)
    for name in catalog.PETERSEN_FAMILY_NAMES:
        assert any(are_isomorphic(catalog.get(name), f) for f in fam)


def test_petersen_girth():
    g = catalog.get("petersen")
    assert g.triangle_count() == 0
    assert not any(len(g.neighbors(a) & g.neighbors(b)) for a, b in itertools.combinations(g.vertices, 2)
                   if g.has_edge(a, b))
    # no 4-cycles
    assert all(len(g.neighbors(a) & g.neighbors(b)) <= 1 for a, b in itertools.combinations(g.vertices, 2))


def test_linkless_examples():
    assert is_linkless(complete_graph(5))
    w = linkless_obstruction(complete_graph(6))
    assert w is not None and all(len(b) == 1 for b in w.branch_sets)
    assert is_linkless(catalog.get("octahedron"))
    assert not is_linkless(catalog.get("K7-"))


def test_mader():
    assert mader_bound(5, 6) == 12
    assert mader_bound(3, 9) == 8
    assert mader_bound(6, 10) == 30
    for r in (2, 8):
        with pytest.raises(ValueError):
            mader_bound(r, 10)
    assert check_mader(catalog.get("icosahedron"), 5)
    assert not check_mader(complete_graph(5), 5)


def test_mader_agreement(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8), rng.uniform(0.3, 0.9))
        for r in range(3, 7):
            if has_clique_minor(g, r) is None:
                assert check_mader(g, r)


def test_triangle_saturated_preconditions():
    with pytest.raises(ValueError):
        triangle_saturated_minor(catalog.get("icosahedron"), 5)
    with pytest.raises(ValueError):
        triangle_saturated_minor(empty_graph(3), 3)
    with pytest.raises(ValueError):
        triangle_saturated_minor(complete_graph(4), 7)


def test_triangle_saturated_witnesses(rng):
    g = Graph.from_edges([(1, 2), (2, 3), (1, 3), (3, 4)]).remove_edges([(3, 4)])
    w = triangle_saturated_minor(g, 3)
    assert verify_minor_witness(g, complete_graph(3), w)
    checked = 0
    for _ in range(400):
        g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.6, 1.0))
        if g.m == 0:
            continue
        counts = edge_triangle_counts(g)
        for r in range(3, 7):
            if min(counts.values()) < r - 2:
                continue
            out = triangle_saturated_minor(g, r)
            assert out is not None
            if isinstance(out, CliqueSeparation):
                assert r == 6 and len(out.clique) <= 4
            else:
                assert verify_minor_witness(g, complete_graph(r), out)
            checked += 1
    assert checked > 50


def test_triangle_saturated_split():
    # two copies of K_{2,2,2,2} glued on a 4-clique: every edge lies in >= 4 triangles,
    # no vertex neighbourhood holds a K_5 minor, and a K_4 separates
    k = catalog.get("K2,2,2,2")
    first = k.relabel({1: 1, 3: 2, 5: 3, 7: 4, 2: 5, 4: 6, 6: 7, 8: 8}, 12)
    second = k.relabel({1: 1, 3: 2, 5: 3, 7: 4, 2: 9, 4: 10, 6: 11, 8: 12}, 12)
    g = Graph(12, first.edges | second.edges)
    assert min(edge_triangle_counts(g).values()) >= 4
    out = triangle_saturated_minor(g, 6)
    assert isinstance(out, CliqueSeparation) and out.clique == (1, 2, 3, 4)


def test_mader_small_hosts():
    # fewer than r - 1 vertices: every graph qualifies
    assert mader_bound(6, 3) == 3
    assert mader_bound(7, 5) == 10
    for r in range(3, 8):
        assert mader_bound(r, r - 1) == (r - 1) * (r - 2) // 2


def test_witnesses_are_minimal(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 8), 0.6)
        h = complete_graph(rng.randint(2, 4))
        w = has_minor(g, h)
        if w is None:
            continue
        for i, b in enumerate(w.branch_sets):
            for v in b:
                if len(b) > 1:
                    smaller = w.branch_sets[:i] + (b - {v},) + w.branch_sets[i + 1:]
                    assert not verify_minor_witness(g, h, MinorWitness(w.host_n, h, smaller))
