"""Structural theorems as executable implications, plus graph corpora to run them on.

Each checker tests its hypotheses first. An entry whose hypotheses never hold
is reported with ``applicable=False`` and ``passed=None`` so vacuous cases are
visible instead of silently passing.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Iterator

from .colour import build_colour_graph, check_all, monochromatic_components
from .constructions.unicyclic import unicyclic_invariants
from .errors import NotAClique
from .graph import (
    Graph,
    complement,
    connected_components,
    cut_vertices,
    from_edge_list,
    induced_subgraph,
    is_path,
    is_tree,
    is_unicyclic,
    pendants,
    twin_classes,
    universal_vertices,
)
from .resolver import REPORT_SCHEMA, ResolvingAnalysis, Role, analyze


@dataclass(frozen=True)
class TheoremEntry:
    id: str
    applicable: bool
    passed: bool | None
    witness: object = None
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.passed is False

    def to_dict(self) -> dict:
        out = {"id": self.id, "applicable": self.applicable, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass(frozen=True)
class TheoremReport:
    n: int
    num_edges: int
    analysis: ResolvingAnalysis
    entries: tuple[TheoremEntry, ...] = field(default=())

    @property
    def failures(self) -> list[TheoremEntry]:
        return [e for e in self.entries if e.failed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def entry(self, theorem_id: str) -> TheoremEntry:
        for e in self.entries:
            if e.id == theorem_id:
                return e
        raise KeyError(theorem_id)

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "n": self.n,
            "edges": self.num_edges,
            "dim": self.analysis.dim,
            "basis_forced": list(self.analysis.basis_forced),
            "ok": self.ok,
            "theorems": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"n={self.n} edges={self.num_edges} dim={self.analysis.dim} k={self.analysis.k}"]
        for e in self.entries:
            status = "n/a " if not e.applicable else ("PASS" if e.passed else "FAIL")
            extra = f"  witness={_jsonable(e.witness)!r} {e.detail}" if e.failed else ""
            lines.append(f"  {status} {e.id}{extra}")
        return "\n".join(lines) + "\n"


class _Collector:
    """Accumulates instances of one implication into a single entry."""

    def __init__(self, theorem_id: str):
        self.id = theorem_id
        self.applicable = False
        self.witness = None
        self.detail = ""

    def instance(self, holds: bool, witness=None, detail: str = "") -> None:
        self.applicable = True
        if not holds and self.witness is None:
            self.witness = witness if witness is not None else ()
            self.detail = detail

    def entry(self) -> TheoremEntry:
        if not self.applicable:
            return TheoremEntry(self.id, False, None)
        return TheoremEntry(self.id, True, self.witness is None, self.witness, self.detail)


def _basis_with(a: ResolvingAnalysis, v: int):
    return next((b for b in a.bases if v in b), None)


def _hangs_path(g: Graph, v: int, comp: Iterable[int]) -> bool:
    sub, _ = induced_subgraph(g, set(comp) | {v})
    return is_path(sub)


def check_cut_vertex_theorems(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    void = _Collector("cut-vertex-void")
    not_forced = _Collector("cut-vertex-not-forced")
    avoid = _Collector("basis-avoids-cut-vertices")
    cuts = sorted(cut_vertices(g))
    for v in cuts:
        comps = connected_components(g, removed=[v])
        if len(comps) >= 3 or (len(comps) == 2 and not any(_hangs_path(g, v, c) for c in comps)):
            void.instance(a.roles[v] is Role.VOID, (v, _basis_with(a, v)), "cut vertex lies in a basis")
        if len(comps) == 2 and any(_hangs_path(g, v, c) for c in comps):
            not_forced.instance(a.roles[v] is not Role.BASIS_FORCED, v, "cut vertex is basis forced")
    if cuts:
        cs = set(cuts)
        avoid.instance(any(not cs & set(b) for b in a.bases), tuple(cuts),
                       "every basis meets a cut vertex")
    return [void.entry(), not_forced.entry(), avoid.entry()]


def check_pendant_theorems(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    split = _Collector("pendant-split")
    deg2 = _Collector("pendant-degree-two")
    tree = _Collector("trees-no-forced")
    if g.n >= 3:
        path = is_path(g)
        for u in sorted(pendants(g)):
            (v,) = g.adj[u]
            if len(connected_components(g, removed=[u, v])) >= 2:
                split.instance(a.roles[u] is not Role.BASIS_FORCED, (u, v), "pendant is basis forced")
            if not path and g.degree(v) == 2:
                deg2.instance(a.roles[u] is not Role.BASIS_FORCED, (u, v), "pendant is basis forced")
    if is_tree(g):
        tree.instance(a.k == 0, a.basis_forced, "tree has basis forced vertices")
    return [split.entry(), deg2.entry(), tree.entry()]


def check_unicyclic_bound(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    rng = _Collector("unicyclic-dim-range")
    bound = _Collector("unicyclic-at-most-2-forced")
    if g.n >= 3 and is_unicyclic(g):
        inv = unicyclic_invariants(g)
        lo, hi = inv.dim_range
        rng.instance(lo <= a.dim <= hi, (a.dim, lo, hi, inv.L, inv.b), "dim outside predicted range")
        bound.instance(a.k <= 2, a.basis_forced, "more than two basis forced vertices")
    return [rng.entry(), bound.entry()]


def check_twin_lemma(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    twins = _Collector("twins")
    for cls, _kind in twin_classes(g).nontrivial():
        for b in a.bases:
            twins.instance(len(set(cls) & set(b)) >= len(cls) - 1, (cls, b), "basis misses two twins")
    return [twins.entry()]


def _complement_components(g: Graph) -> list[Graph]:
    gc = complement(g)
    return [(sorted(c), induced_subgraph(gc, c)[0]) for c in connected_components(gc)]


def _is_complete(h: Graph) -> bool:
    return h.num_edges == comb(h.n, 2)


def _is_star(h: Graph) -> bool:
    return h.n >= 3 and h.num_edges == h.n - 1 and max(h.degree(v) for v in range(h.n)) == h.n - 1


def _degrees(h: Graph) -> list[int]:
    return sorted(h.degree(v) for v in range(h.n))


def check_dense_lemmas(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    universal = _Collector("universal-not-forced")
    complete = _Collector("complement-complete")
    star = _Collector("complement-star")
    p4c4 = _Collector("complement-p4-c4")
    forced = set(a.basis_forced)
    for v in sorted(universal_vertices(g)):
        universal.instance(v not in forced, v, "universal vertex is basis forced")
    for comp, h in _complement_components(g):
        bad = sorted(forced & set(comp))
        if h.n >= 2 and _is_complete(h):
            complete.instance(not bad, (comp, bad), "forced vertex in complete complement component")
        if _is_star(h):
            star.instance(not bad, (comp, bad), "forced vertex in star complement component")
        if g.n >= 5 and h.n == 4 and h.num_edges in (3, 4) and _degrees(h) in ([1, 1, 2, 2], [2, 2, 2, 2]):
            p4c4.instance(not bad, (comp, bad), "forced vertex in P4/C4 complement component")
    return [universal.entry(), complete.entry(), star.entry(), p4c4.entry()]


def _complement_is_p5_plus_isolated(g: Graph) -> bool:
    big = [h for _, h in _complement_components(g) if h.n > 1]
    return len(big) == 1 and big[0].n == 5 and is_path(big[0])


def check_edge_bounds(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    dense = _Collector("dense-edge-bound")
    general = _Collector("edge-bound")
    m, full = g.num_edges, comb(g.n, 2)
    if a.k >= 1 and g.n >= 6:
        ok = m <= full - 4
        if ok and m == full - 4:
            ok = _complement_is_p5_plus_isolated(g) and a.k == 2
        dense.instance(ok, (m, full - 4, a.basis_forced), "edge bound or equality shape fails")
    if a.k >= 1 and g.n >= 3:
        general.instance(m <= full - 2 * a.k, (m, full - 2 * a.k), "too many edges for k forced")
    return [dense.entry(), general.entry()]


def check_count_bounds(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    count = _Collector("forced-count")
    if a.k >= 1:
        count.instance(a.k <= g.n - a.dim - 1 and 2 * a.k <= g.n - 1,
                       (a.k, g.n, a.dim), "too many basis forced vertices")
    return [count.entry()]


def check_colour_lemma(g: Graph, a: ResolvingAnalysis) -> list[TheoremEntry]:
    names = {
        "cycle": "colour-cycles",
        "transitivity": "colour-transitive",
        "forced": "forced-colours",
        "colours": "colour-every-basis-element-used",
        "independence": "colour-basis-independent",
        "incident": "colour-incident-edges",
    }
    cols = {key: _Collector(name) for key, name in names.items()}
    cliques = _Collector("colour-classes-are-cliques")
    dm = g.distances()
    forced = a.basis_forced
    for b in a.bases:
        cg = build_colour_graph(dm, b)
        for rep in check_all(cg, forced, is_basis=True):
            key = "forced" if rep.name.startswith("forced") else rep.name
            cols[key].instance(rep.passed, (b, rep.witness), rep.detail)
        for r in b:
            try:
                monochromatic_components(cg, r)
                cliques.instance(True)
            except NotAClique as exc:
                cliques.instance(False, (b, r, exc.witness), str(exc))
    return [c.entry() for c in cols.values()] + [cliques.entry()]


CHECKERS: tuple[Callable[[Graph, ResolvingAnalysis], list[TheoremEntry]], ...] = (
    check_cut_vertex_theorems,
    check_pendant_theorems,
    check_unicyclic_bound,
    check_twin_lemma,
    check_dense_lemmas,
    check_edge_bounds,
    check_count_bounds,
    check_colour_lemma,
)


def run_all(g: Graph, analysis: ResolvingAnalysis | None = None, **analyze_kw) -> TheoremReport:
    a = analysis if analysis is not None else analyze(g, **analyze_kw)
    entries = []
    for check in CHECKERS:
        entries.extend(check(g, a))
    return TheoremReport(g.n, g.num_edges, a, tuple(entries))


# corpora

def atlas_corpus(max_n: int, min_n: int = 2) -> Iterator[Graph]:
    """Every connected graph on min_n..max_n vertices, up to isomorphism (max_n <= 7)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(h):
            yield from_edge_list(n, h.edges())


def random_connected_graph(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Rejection-sample G(n, p) until connected; p uniform in [0.2, 0.8] when omitted."""
    if n < 2:
        raise ValueError("need n >= 2")
    p = rng.uniform(0.2, 0.8) if p is None else p
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edge_list(n, edges)
        if g.is_connected():
            return g


def random_corpus(count: int, n_min: int, n_max: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(n_min, n_max), rng) for _ in range(count)]


def _run_one(g: Graph) -> TheoremReport:
    return run_all(g)


def run_corpus(graphs: Iterable[Graph], threads: int = 1) -> list[TheoremReport]:
    """Reports in input order, whatever the worker count."""
    graphs = list(graphs)
    if threads <= 1 or len(graphs) < 2:
        return [_run_one(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run_one, graphs, chunksize=max(1, len(graphs) // (threads * 8))))


@dataclass(frozen=True)
class CorpusSummary:
    graphs: int
    applicable: dict
    failures: tuple[tuple[int, TheoremEntry], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "graphs": self.graphs,
            "ok": self.ok,
            "applicable": dict(sorted(self.applicable.items())),
            "failures": [{"graph": i, **e.to_dict()} for i, e in self.failures],
        }

    def to_text(self) -> str:
        lines = [f"graphs checked: {self.graphs}"]
        for tid, cnt in sorted(self.applicable.items()):
            lines.append(f"  {tid}: applicable on {cnt}")
        lines.append(f"failures: {len(self.failures)}")
        for i, e in self.failures[:20]:
            lines.append(f"  graph {i}: {e.id} witness={_jsonable(e.witness)!r}")
        return "\n".join(lines) + "\n"


def summarize(reports: Iterable[TheoremReport]) -> CorpusSummary:
    applicable: dict[str, int] = {}
    failures = []
    count = 0
    for i, rep in enumerate(reports):
        count += 1
        for e in rep.entries:
            if e.applicable:
                applicable[e.id] = applicable.get(e.id, 0) + 1
            if e.failed:
                failures.append((i, e))
    return CorpusSummary(count, applicable, tuple(failures))
