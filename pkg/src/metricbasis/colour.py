"""Colour graph of a vertex set R.

Pair {x, y} is an edge of colour r when r is the only member of R that
separates x and y. Checks return a ``CheckReport`` carrying a witness; call
``require()`` to turn a failure into ``PropertyViolated``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NotAClique, PropertyViolated
from .graph import DistanceMatrix, Graph

# fixed palette, assigned to R in increasing vertex order
PALETTE = (
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
    "cyan4", "gold3", "gray40", "navy", "olivedrab",
)


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def require(self) -> CheckReport:
        if not self.passed:
            raise PropertyViolated(f"{self.name}: {self.detail}", self.witness)
        return self


@dataclass(frozen=True)
class ColourGraph:
    n: int
    R: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (x, y, colour) with x < y
    resolving: bool

    def edges_of(self, r: int) -> list[tuple[int, int]]:
        return [(x, y) for x, y, c in self.edges if c == r]

    def colour_of(self, x: int, y: int) -> int | None:
        x, y = min(x, y), max(x, y)
        for a, b, c in self.edges:
            if (a, b) == (x, y):
                return c
        return None

    def colour_map(self) -> dict[tuple[int, int], int]:
        return {(x, y): c for x, y, c in self.edges}

    def to_dot(self, g: Graph | None = None, name: str = "GR") -> str:
        colours = {r: PALETTE[i % len(PALETTE)] for i, r in enumerate(self.R)}
        label = (lambda v: g.label(v)) if g is not None else str
        lines = [f'graph "{name}" {{']
        for v in range(self.n):
            shape = ', shape=doublecircle' if v in colours else ''
            lines.append(f'  {v} [label="{label(v)}"{shape}];')
        for x, y, c in self.edges:
            lines.append(f'  {x} -- {y} [color="{colours[c]}", label="{label(c)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_colour_graph(dm: DistanceMatrix, r: Iterable[int]) -> ColourGraph:
    R = tuple(sorted({int(v) for v in r}))
    if not R:
        raise ValueError("R must be nonempty")
    xs, ys = np.triu_indices(dm.n, k=1)
    sep = dm.d[list(R)][:, xs] != dm.d[list(R)][:, ys]  # (|R|, pairs)
    count = sep.sum(axis=0)
    edges = []
    for p in np.flatnonzero(count == 1):
        c = R[int(np.argmax(sep[:, p]))]
        edges.append((int(xs[p]), int(ys[p]), c))
    return ColourGraph(dm.n, R, tuple(edges), bool((count > 0).all()))


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(v) for v in range(n)]


def _path(n: int, edges: list[tuple[int, int]], src: int, dst: int) -> list[int]:
    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    prev = {src: None}
    queue = [src]
    for u in queue:
        if u == dst:
            break
        for v in adj[u]:
            if v not in prev:
                prev[v] = u
                queue.append(v)
    out = [dst]
    while prev[out[-1]] is not None:
        out.append(prev[out[-1]])
    return out[::-1]


def check_cycle_property(cg: ColourGraph) -> CheckReport:
    """No cycle uses a colour exactly once.

    A cycle with a single r-edge {x, y} is that edge plus an x-y path free of
    colour r, so it suffices to test connectivity without the r-edges.
    """
    for r in cg.R:
        others = [(x, y) for x, y, c in cg.edges if c != r]
        comp = _components(cg.n, others)
        for x, y in cg.edges_of(r):
            if comp[x] == comp[y]:
                cycle = _path(cg.n, others, y, x) + [y]
                return CheckReport("cycle", False, tuple(cycle),
                                   f"cycle {cycle} uses colour {r} once")
    return CheckReport("cycle", True)


def check_transitivity(cg: ColourGraph) -> CheckReport:
    if not cg.resolving:
        raise ValueError("transitivity is only guaranteed for resolving sets")
    cmap = cg.colour_map()
    for r in cg.R:
        nbrs = defaultdict(set)
        for x, y in cg.edges_of(r):
            nbrs[x].add(y)
            nbrs[y].add(x)
        for x, ns in sorted(nbrs.items()):
            ns = sorted(ns)
            for i, y in enumerate(ns):
                for z in ns[i + 1:]:
                    if cmap.get((min(y, z), max(y, z))) != r:
                        return CheckReport("transitivity", False, (x, y, z),
                                           f"{x}{y} and {x}{z} have colour {r} but {y}{z} does not")
    return CheckReport("transitivity", True)


def check_independence(cg: ColourGraph) -> CheckReport:
    rs = set(cg.R)
    for x, y, _ in cg.edges:
        if x in rs and y in rs:
            return CheckReport("independence", False, (x, y), f"R contains edge {x}{y}")
    return CheckReport("independence", True)


def check_incident_colours(cg: ColourGraph) -> CheckReport:
    """An edge touching r in R must carry colour r."""
    rs = set(cg.R)
    for x, y, c in cg.edges:
        for v in (x, y):
            if v in rs and c != v:
                return CheckReport("incident", False, (x, y, c), f"edge {x}{y} touches {v} but has colour {c}")
    return CheckReport("incident", True)


def check_all_colours_present(cg: ColourGraph) -> CheckReport:
    used = {c for _, _, c in cg.edges}
    missing = [r for r in cg.R if r not in used]
    if missing:
        return CheckReport("colours", False, tuple(missing), f"colours {missing} have no edge")
    return CheckReport("colours", True)


def check_basis_forced_colour_counts(cg: ColourGraph, forced: Iterable[int]) -> CheckReport:
    rs = set(cg.R)
    for b in sorted(set(forced) & rs):
        es = cg.edges_of(b)
        if len(es) < 2:
            return CheckReport("forced-count", False, b, f"forced {b} has {len(es)} edges of its colour")
        if not any(x not in rs and y not in rs for x, y in es):
            return CheckReport("forced-outside", False, b,
                               f"forced {b} has no colour edge outside R")
    return CheckReport("forced", True)


def monochromatic_components(cg: ColourGraph, colour: int) -> list[tuple[int, ...]]:
    """Components of the colour class, each verified to be a clique."""
    es = cg.edges_of(colour)
    if not es:
        return []
    comp = _components(cg.n, es)
    touched = sorted({v for e in es for v in e})
    groups = defaultdict(list)
    for v in touched:
        groups[comp[v]].append(v)
    have = set(es)
    out = []
    for vs in sorted(groups.values()):
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                if (a, b) not in have:
                    raise NotAClique(f"colour {colour} component {vs} misses edge {a}{b}", (a, b))
        out.append(tuple(vs))
    return out


def check_all(cg: ColourGraph, forced: Iterable[int] = (), *, is_basis: bool = False) -> list[CheckReport]:
    """Every applicable check; colour presence and the forced counts need a basis."""
    reports = [check_cycle_property(cg), check_independence(cg), check_incident_colours(cg)]
    if cg.resolving:
        reports.append(check_transitivity(cg))
    if is_basis:
        reports.append(check_all_colours_present(cg))
        reports.append(check_basis_forced_colour_counts(cg, forced))
    return reports
