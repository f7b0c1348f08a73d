import json

from hypothesis import given

from conftest import connected_graphs
from metricbasis.constructions import h_family, lemma_family, named_graph
from metricbasis.graph import cut_vertices, cycle_graph, star_graph
from metricbasis.theorems import (
    TheoremEntry,
    atlas_corpus,
    random_corpus,
    run_all,
    run_corpus,
    summarize,
)


def test_catalogue_passes():
    for name in ("fig1a", "fig1b", "fig1c", "fig2a", "fig4", "fig8a", "fig8b"):
        rep = run_all(named_graph(name))
        assert rep.ok, (name, rep.failures)


def test_vacuous_entries_are_explicit():
    rep = run_all(cycle_graph(5))
    e = rep.entry("cut-vertex-void")
    assert e.applicable is False and e.passed is None
    assert rep.entry("forced-count").passed is None


def test_fig1b_details():
    rep = run_all(named_graph("fig1b"))
    assert rep.entry("unicyclic-at-most-2-forced").passed is True
    # each cut vertex leaves one pendant path behind, so 2.5 applies, not 2.4
    assert rep.entry("cut-vertex-void").applicable is False
    assert rep.entry("cut-vertex-not-forced").passed is True
    g = named_graph("fig1b")
    assert all(v in rep.analysis.void for v in cut_vertices(g))
    # its forced pendants sit outside both pendant theorems
    assert rep.entry("pendant-split").applicable is False
    assert rep.entry("pendant-degree-two").applicable is False


def test_fig8a_equality_case():
    e = run_all(named_graph("fig8a")).entry("dense-edge-bound")
    assert e.applicable and e.passed


def test_h_family_edge_bound_strict():
    g = h_family(3, 2)
    rep = run_all(g)
    assert rep.entry("edge-bound").passed
    assert rep.analysis.k == 3


def test_lemma_family_count_bound():
    rep = run_all(lemma_family(2, 1))
    assert rep.entry("forced-count").passed and rep.analysis.k == 2


def test_star_pendants_not_forced():
    rep = run_all(star_graph(4))
    assert rep.entry("pendant-split").passed
    assert rep.entry("trees-no-forced").passed


def test_report_json():
    d = json.loads(run_all(named_graph("fig4")).to_json())
    assert d["schema"] == "v1" and d["ok"] and d["dim"] == 2
    assert all({"id", "applicable", "passed"} <= set(t) for t in d["theorems"])


def test_failure_carries_witness():
    e = TheoremEntry("x", True, False, (1, 2), "boom")
    assert e.failed and e.to_dict()["witness"] == [1, 2]


def test_atlas_counts():
    assert sum(1 for _ in atlas_corpus(5)) == 1 + 2 + 6 + 21


def test_random_corpus_is_seeded():
    a = random_corpus(5, 8, 10, seed=4)
    b = random_corpus(5, 8, 10, seed=4)
    assert a == b and all(g.is_connected() for g in a)


def test_parallel_matches_serial():
    graphs = list(atlas_corpus(5))
    s1 = summarize(run_corpus(graphs, threads=1)).to_dict()
    s2 = summarize(run_corpus(graphs, threads=2)).to_dict()
    assert s1 == s2 and s1["ok"]


@given(connected_graphs(max_n=9))
def test_no_violations_on_random_graphs(g):
    rep = run_all(g)
    assert rep.ok, rep.to_text()
