"""Exact resolving-set engine: pair system, metric dimension, all metric bases.

A set R resolves G when every unordered vertex pair {x, y} has some w in R
with d(w, x) != d(w, y). Writing each vertex as the set of pairs it separates
turns this into set cover over the n(n-1)/2 pairs, which is what the search
kernels solve.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    EmptyBasisList,
    GraphTooLarge,
    NotABasisMember,
    SearchBudgetExceeded,
    TrivialGraph,
)
from .graph import DistanceMatrix, Graph, TwinClasses, twin_classes
from .kernels import BudgetHit, SearchBudget

MAX_SEARCH_VERTICES = 64
REPORT_SCHEMA = "v1"


class Role(enum.Enum):
    BASIS_FORCED = "basis_forced"
    VOID = "void"
    FLEXIBLE = "flexible"


@dataclass(frozen=True, eq=False)
class PairSystem:
    """All unordered pairs x < y in row-major order plus per-vertex cover rows.

    ``cover[w, p]`` is True when ``w`` separates pair ``p``; ``words`` is the
    same matrix packed into uint64 words for word-parallel unions.
    """

    n: int
    pair_x: np.ndarray
    pair_y: np.ndarray
    cover: np.ndarray
    words: np.ndarray
    full: np.ndarray

    @property
    def num_pairs(self) -> int:
        return len(self.pair_x)

    def pair_index(self, x: int, y: int) -> int:
        if x == y:
            raise ValueError("a pair needs two distinct vertices")
        x, y = min(x, y), max(x, y)
        return x * (2 * self.n - x - 1) // 2 + (y - x - 1)

    def pair(self, p: int) -> tuple[int, int]:
        return int(self.pair_x[p]), int(self.pair_y[p])

    def covered_pairs(self, w: int) -> list[tuple[int, int]]:
        return [self.pair(p) for p in np.flatnonzero(self.cover[w])]


def build_pair_system(dm: DistanceMatrix) -> PairSystem:
    n = dm.n
    xs, ys = np.triu_indices(n, k=1)
    cover = dm.d[:, xs] != dm.d[:, ys]
    cover.setflags(write=False)
    full = kernels.pack_rows(np.ones((1, len(xs)), dtype=bool))[0]
    return PairSystem(n, xs, ys, cover, kernels.pack_rows(cover), full)


def _as_list(r: Iterable[int]) -> list[int]:
    return sorted({int(v) for v in r})


def is_resolving(ps: PairSystem, r: Iterable[int]) -> bool:
    r = _as_list(r)
    if ps.num_pairs == 0:
        return True
    if not r:
        return False
    union = np.bitwise_or.reduce(ps.words[r], axis=0)
    return bool(np.array_equal(union, ps.full))


def unresolved_pairs(ps: PairSystem, r: Iterable[int]) -> list[tuple[int, int]]:
    """Pairs that no member of ``r`` separates, in pair-index order."""
    r = _as_list(r)
    if not r:
        return [ps.pair(p) for p in range(ps.num_pairs)]
    hit = ps.cover[r].any(axis=0)
    return [ps.pair(p) for p in np.flatnonzero(~hit)]


def resolves_by_signature(dm: DistanceMatrix, r: Iterable[int]) -> bool:
    """Independent check: R resolves iff all distance vectors to R differ."""
    r = _as_list(r)
    if dm.n <= 1:
        return True
    if not r:
        return False
    sig = dm.d[:, r]
    return len(np.unique(sig, axis=0)) == dm.n


def twin_lower_bound(tc: TwinClasses) -> int:
    return sum(len(c) - 1 for c, _ in tc.nontrivial())


def _twin_arrays(tc: TwinClasses | None, n: int) -> tuple[np.ndarray, np.ndarray]:
    groups = [] if tc is None else [c for c, _ in tc.nontrivial()]
    sets = np.zeros((len(groups), n), dtype=bool)
    for i, c in enumerate(groups):
        sets[i, list(c)] = True
    need = np.array([len(c) - 1 for c in groups], dtype=np.int64)
    return sets, need


def _check_searchable(ps: PairSystem) -> None:
    if ps.n > MAX_SEARCH_VERTICES:
        raise GraphTooLarge(f"exact search supports at most {MAX_SEARCH_VERTICES} vertices, got {ps.n}")
    if ps.n < 2:
        raise TrivialGraph("metric dimension is not defined here for graphs with fewer than 2 vertices")


def search_covers(ps: PairSystem, k: int, tc: TwinClasses | None = None, *,
                  enumerate_all: bool, budget: SearchBudget | None = None,
                  backend: str | None = None) -> tuple[list[tuple[int, ...]], int]:
    """Run one fixed-size search; raises ``kernels.BudgetHit`` when out of budget."""
    _check_searchable(ps)
    budget = budget or SearchBudget()
    sets, need = _twin_arrays(tc, ps.n)
    impl = kernels.get_backend(backend)
    return impl.cover_search(ps.cover, sets, need, k, enumerate_all, budget)


def _initial_lower_bound(tc: TwinClasses | None) -> int:
    return max(1, twin_lower_bound(tc) if tc is not None else 0)


def metric_dimension(ps: PairSystem, tc: TwinClasses | None = None, *,
                     budget: SearchBudget | None = None, backend: str | None = None) -> int:
    """Smallest k admitting a resolving k-set (iterative deepening on k)."""
    _check_searchable(ps)
    budget = budget or SearchBudget()
    lower = _initial_lower_bound(tc)
    for k in range(lower, ps.n):
        try:
            found, _ = search_covers(ps, k, tc, enumerate_all=False, budget=budget, backend=backend)
        except BudgetHit:
            raise SearchBudgetExceeded(k, ps.n - 1, budget.nodes, budget.elapsed) from None
        if found:
            return k
    return ps.n - 1


def enumerate_metric_bases(ps: PairSystem, dim: int, tc: TwinClasses | None = None, *,
                           budget: SearchBudget | None = None,
                           backend: str | None = None) -> list[tuple[int, ...]]:
    """Every resolving set of size ``dim``, sorted lexicographically."""
    budget = budget or SearchBudget()
    try:
        found, _ = search_covers(ps, dim, tc, enumerate_all=True, budget=budget, backend=backend)
    except BudgetHit:
        raise SearchBudgetExceeded(dim, dim, budget.nodes, budget.elapsed) from None
    return sorted(set(found))


def classify_vertices(bases: Sequence[Iterable[int]], n: int) -> tuple[Role, ...]:
    if not bases:
        raise EmptyBasisList("classification needs at least one basis")
    sets = [frozenset(b) for b in bases]
    common = frozenset.intersection(*sets)
    seen = frozenset.union(*sets)
    return tuple(
        Role.BASIS_FORCED if v in common else Role.FLEXIBLE if v in seen else Role.VOID
        for v in range(n)
    )


def replace(r: Iterable[int], old: int, new: int) -> frozenset[int]:
    """R[old <- new] = (R minus {old}) plus {new}."""
    r = frozenset(r)
    if old not in r:
        raise NotABasisMember(f"{old} is not in {sorted(r)}")
    return (r - {old}) | {new}


@dataclass(frozen=True)
class ResolvingAnalysis:
    n: int
    dim: int
    bases: tuple[tuple[int, ...], ...]
    roles: tuple[Role, ...]
    nodes: int = 0

    def _with(self, role: Role) -> tuple[int, ...]:
        return tuple(v for v, r in enumerate(self.roles) if r is role)

    @property
    def basis_forced(self) -> tuple[int, ...]:
        return self._with(Role.BASIS_FORCED)

    @property
    def void(self) -> tuple[int, ...]:
        return self._with(Role.VOID)

    @property
    def flexible(self) -> tuple[int, ...]:
        return self._with(Role.FLEXIBLE)

    @property
    def k(self) -> int:
        return len(self.basis_forced)

    def to_dict(self, g: Graph | None = None) -> dict:
        out = {
            "schema": REPORT_SCHEMA,
            "n": self.n,
            "dim": self.dim,
            "num_bases": len(self.bases),
            "bases": [list(b) for b in self.bases],
            "basis_forced": list(self.basis_forced),
            "void": list(self.void),
            "flexible": list(self.flexible),
        }
        if g is not None and g.labels is not None:
            out["labels"] = {str(v): g.label(v) for v in range(g.n)}
        return out

    def to_json(self, g: Graph | None = None) -> str:
        return json.dumps(self.to_dict(g), sort_keys=True)

    def to_text(self, g: Graph | None = None) -> str:
        name = (lambda v: g.label(v)) if g is not None else str

        def fmt(vs):
            return "{" + ", ".join(name(v) for v in vs) + "}"

        lines = [
            f"vertices: {self.n}",
            f"metric dimension: {self.dim}",
            f"metric bases: {len(self.bases)}",
        ]
        lines.extend(f"  {fmt(b)}" for b in self.bases)
        lines.append(f"basis forced ({self.k}): {fmt(self.basis_forced)}")
        lines.append(f"void ({len(self.void)}): {fmt(self.void)}")
        lines.append(f"flexible ({len(self.flexible)}): {fmt(self.flexible)}")
        return "\n".join(lines) + "\n"


def analyze(g: Graph, *, budget: SearchBudget | None = None, backend: str | None = None,
            max_nodes: int | None = None, max_seconds: float | None = None) -> ResolvingAnalysis:
    """Metric dimension, all metric bases and the vertex classification of ``g``."""
    if g.n < 2:
        raise TrivialGraph("analyze needs at least 2 vertices")
    if budget is None:
        budget = SearchBudget(
            max_nodes=max_nodes or kernels.DEFAULT_MAX_NODES,
            max_seconds=max_seconds or kernels.DEFAULT_MAX_SECONDS,
        )
    dm = g.distances()
    ps = build_pair_system(dm)
    tc = twin_classes(g)
    dim = metric_dimension(ps, tc, budget=budget, backend=backend)
    bases = enumerate_metric_bases(ps, dim, tc, budget=budget, backend=backend)
    return ResolvingAnalysis(g.n, dim, tuple(bases), classify_vertices(bases, g.n), budget.nodes)
