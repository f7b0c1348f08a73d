import random

import numpy as np
import pytest
from hypothesis import given

from conftest import connected_graphs
from metricbasis import kernels
from metricbasis.graph import complete_graph, twin_classes
from metricbasis.kernels import BudgetHit, SearchBudget, pack_rows, vertex_masks
from metricbasis.resolver import analyze, build_pair_system, search_covers
from metricbasis.theorems import random_connected_graph

needs_numba = pytest.mark.skipif(not kernels.numba_available(), reason="numba not installed")


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv(kernels.ENV_FLAG, "1")
    assert kernels.default_backend() == "numpy"
    monkeypatch.setenv(kernels.ENV_FLAG, "0")
    expected = "numba" if kernels.numba_available() else "numpy"
    assert kernels.default_backend() == expected


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("cuda")


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    b = SearchBudget(max_nodes=3)
    b.charge(2)
    with pytest.raises(BudgetHit):
        b.charge(1)


def test_pack_rows_round_trip():
    rng = np.random.default_rng(0)
    bits = rng.random((5, 130)) < 0.5
    words = pack_rows(bits)
    assert words.shape == (5, 3)
    back = np.unpackbits(words.view(np.uint8), axis=1, bitorder="little")[:, :130].astype(bool)
    assert np.array_equal(back, bits)
    masks = vertex_masks(bits)
    assert all(int(masks[p]) == sum(1 << v for v in range(5) if bits[v, p]) for p in range(130))


@needs_numba
@given(connected_graphs(max_n=10))
def test_backends_identical(g):
    a = analyze(g, backend="numba")
    b = analyze(g, backend="numpy")
    assert (a.dim, a.bases, a.roles, a.nodes) == (b.dim, b.bases, b.roles, b.nodes)


@needs_numba
def test_backends_identical_on_larger_graphs():
    rng = random.Random(3)
    for n in (16, 24, 30):
        g = random_connected_graph(n, rng, 0.4)
        a = analyze(g, backend="numba")
        b = analyze(g, backend="numpy")
        assert (a.dim, a.bases, a.nodes) == (b.dim, b.bases, b.nodes)


@needs_numba
def test_numba_grows_solution_buffer():
    # the kernel starts with room for 64 solutions and doubles on overflow
    g = random_connected_graph(30, random.Random(1), 0.5)
    a = analyze(g, backend="numba")
    assert len(a.bases) > 64


@pytest.mark.parametrize("backend", kernels.BACKENDS)
def test_budget_stops_each_backend(backend):
    if backend == "numba" and not kernels.numba_available():
        pytest.skip("numba not installed")
    g = complete_graph(10)
    ps = build_pair_system(g.distances())
    with pytest.raises(BudgetHit):
        search_covers(ps, 9, twin_classes(g), enumerate_all=True,
                      budget=SearchBudget(max_nodes=4), backend=backend)
