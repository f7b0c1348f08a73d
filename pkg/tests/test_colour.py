import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs
from oracles import colour_cycle_violation
from metricbasis.colour import (
    ColourGraph,
    build_colour_graph,
    check_all,
    check_basis_forced_colour_counts,
    check_cycle_property,
    check_transitivity,
    monochromatic_components,
)
from metricbasis.constructions import lemma_family, named_graph
from metricbasis.errors import NotAClique, PropertyViolated
from metricbasis.graph import complete_graph, path_graph
from metricbasis.resolver import analyze


def _names(g, pairs):
    return {frozenset((g.label(x), g.label(y))) for x, y in pairs}


def test_fig7_colour_classes():
    g = named_graph("fig7")
    r1, r2 = g.vertex("r1"), g.vertex("r2")
    cg = build_colour_graph(g.distances(), [r1, r2])
    assert len(cg.edges) == 8
    assert _names(g, cg.edges_of(r1)) == {frozenset(p) for p in [("r1", "v1"), ("r1", "v3"), ("v1", "v3"), ("v2", "v4")]}
    assert _names(g, cg.edges_of(r2)) == {frozenset(p) for p in [("r2", "v1"), ("r2", "v2"), ("v1", "v2"), ("v3", "v4")]}
    comps = [{g.label(v) for v in c} for c in monochromatic_components(cg, r1)]
    assert sorted(comps, key=len) == [{"v2", "v4"}, {"r1", "v1", "v3"}]
    assert all(r.passed for r in check_all(cg, [r1, r2], is_basis=True))


def test_all_vertices_of_complete_graph_give_no_edges():
    g = complete_graph(5)
    cg = build_colour_graph(g.distances(), range(5))
    assert cg.edges == () and cg.resolving


def test_non_resolving_set():
    g = path_graph(4)
    cg = build_colour_graph(g.distances(), [1])
    assert not cg.resolving
    with pytest.raises(ValueError):
        check_transitivity(cg)
    with pytest.raises(ValueError):
        build_colour_graph(g.distances(), [])


def test_hand_built_violation():
    bad = ColourGraph(3, (0, 1), ((0, 1, 0), (0, 2, 1), (1, 2, 1)), True)
    rep = check_cycle_property(bad)
    assert not rep.passed and set(rep.witness) == {0, 1, 2}
    with pytest.raises(PropertyViolated):
        rep.require()
    assert not check_transitivity(bad).passed


def test_single_edge_passes():
    cg = ColourGraph(2, (0,), ((0, 1, 0),), True)
    assert check_cycle_property(cg).passed


def test_not_a_clique():
    cg = ColourGraph(3, (0,), ((0, 1, 0), (1, 2, 0)), True)
    with pytest.raises(NotAClique):
        monochromatic_components(cg, 0)
    assert monochromatic_components(cg, 5) == []


def test_forced_counts():
    g = named_graph("fig1b")
    a = analyze(g)
    cg = build_colour_graph(g.distances(), a.bases[0])
    assert check_basis_forced_colour_counts(cg, a.basis_forced).passed
    g = lemma_family(2, 1)
    a = analyze(g)
    for b in a.bases:
        cg = build_colour_graph(g.distances(), b)
        for f in a.basis_forced:
            assert len(cg.edges_of(f)) >= 2
    # a fabricated forced vertex with a single colour edge fails
    lone = ColourGraph(3, (0,), ((0, 1, 0),), True)
    assert not check_basis_forced_colour_counts(lone, [0]).passed


@given(st.integers(3, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 2)), max_size=14),
)))
def test_cycle_check_matches_enumeration(data):
    n, raw = data
    seen, edges = set(), []
    for x, y, c in raw:
        if x != y and frozenset((x, y)) not in seen:
            seen.add(frozenset((x, y)))
            edges.append((min(x, y), max(x, y), c))
    cg = ColourGraph(n, (0, 1, 2), tuple(edges), True)
    assert check_cycle_property(cg).passed == (colour_cycle_violation(n, edges) is None)


@given(connected_graphs(max_n=8))
def test_properties_on_every_basis(g):
    a = analyze(g)
    for b in a.bases:
        cg = build_colour_graph(g.distances(), b)
        assert colour_cycle_violation(g.n, cg.edges) is None
        for rep in check_all(cg, a.basis_forced, is_basis=True):
            assert rep.passed, rep


def test_dot_is_deterministic():
    g = named_graph("fig7")
    cg = build_colour_graph(g.distances(), [0, 1])
    dot = cg.to_dot(g)
    assert dot == cg.to_dot(g)
    assert 'color="red"' in dot and 'color="blue"' in dot
