"""Immutable simple graphs over dense vertex ids 0..n-1."""

from __future__ import annotations

import enum
import itertools
import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DisconnectedGraph, InvalidGraph


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph. ``adj[v]`` is the neighbour set of ``v``.

    ``labels`` optionally names every vertex (figure names, gadget names);
    ids stay the dense integers used by every algorithm.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InvalidGraph("adjacency length does not match n")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise InvalidGraph(f"self-loop at {u}")
            for v in nbrs:
                if not 0 <= v < self.n or u not in self.adj[v]:
                    raise InvalidGraph(f"asymmetric or out-of-range edge {u}-{v}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise InvalidGraph("label count does not match n")
            if len(set(self.labels)) != self.n:
                raise InvalidGraph("labels must be unique")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __hash__(self):
        return hash((self.n, self.adj, self.labels))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def closed_nbhd(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, key: int | str) -> int:
        """Resolve a vertex id or label to its id."""
        if isinstance(key, (int, np.integer)):
            if not 0 <= key < self.n:
                raise InvalidGraph(f"vertex {key} out of range")
            return int(key)
        if self.labels is not None and key in self.labels:
            return self.labels.index(key)
        if isinstance(key, str) and key.isdigit() and int(key) < self.n:
            return int(key)
        raise InvalidGraph(f"unknown vertex {key!r}")

    def with_labels(self, labels: Sequence[str] | None) -> Graph:
        return Graph(self.n, self.adj, None if labels is None else tuple(labels))

    @cached_property
    def _distances(self) -> DistanceMatrix | None:
        d = all_pairs_distances(self)
        if (d < 0).any():
            return None
        d.setflags(write=False)
        return DistanceMatrix(self.n, d)

    def distances(self) -> DistanceMatrix:
        """Cached all-pairs distances; raises DisconnectedGraph."""
        dm = self._distances
        if dm is None:
            raise DisconnectedGraph("graph is disconnected")
        return dm

    def is_connected(self) -> bool:
        return self.n <= 1 or len(connected_components(self)) == 1


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    n: int
    d: np.ndarray

    def __call__(self, u: int, v: int) -> int:
        return int(self.d[u, v])


class TwinKind(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    SINGLETON = "singleton"


@dataclass(frozen=True)
class TwinClasses:
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[TwinKind, ...]

    def nontrivial(self) -> list[tuple[tuple[int, ...], TwinKind]]:
        return [(c, k) for c, k in zip(self.classes, self.kinds) if k is not TwinKind.SINGLETON]

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise KeyError(v)


def from_edge_list(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise InvalidGraph("negative vertex count")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraph(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise InvalidGraph(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), None if labels is None else tuple(labels))


def from_labelled_edges(edges: Iterable[tuple[str, str]], order: Sequence[str] | None = None) -> Graph:
    """Build a graph from label pairs; ``order`` fixes the id assignment."""
    edges = list(edges)
    names = list(order) if order is not None else []
    seen = set(names)
    for e in edges:
        for x in e:
            if x not in seen:
                seen.add(x)
                names.append(x)
    index = {x: i for i, x in enumerate(names)}
    return from_edge_list(len(names), [(index[a], index[b]) for a, b in edges], names)


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = frozenset(range(g.n))
    return Graph(g.n, tuple(full - g.adj[v] - {v} for v in range(g.n)), g.labels)


def disjoint_union(gs: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """Union with ids shifted by cumulative offsets; returns (graph, offsets)."""
    if not gs:
        raise InvalidGraph("disjoint_union needs at least one graph")
    offsets = list(itertools.accumulate([0] + [g.n for g in gs[:-1]]))
    adj = []
    for g, off in zip(gs, offsets):
        adj.extend(frozenset(v + off for v in nb) for nb in g.adj)
    labels = None
    if all(g.labels is not None for g in gs):
        merged = [lab for g in gs for lab in g.labels]
        if len(set(merged)) == len(merged):
            labels = tuple(merged)
    return Graph(sum(g.n for g in gs), tuple(adj), labels), offsets


def all_pairs_distances(g: Graph, backend: str | None = None) -> np.ndarray:
    """BFS hop distances, -1 where unreachable."""
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in g.adj])
    indices = np.fromiter((v for a in g.adj for v in sorted(a)), dtype=np.int64, count=int(indptr[-1]))
    return np.asarray(kernels.get_backend(backend).all_pairs_bfs(indptr, indices, g.n))


def distance_matrix(g: Graph) -> DistanceMatrix:
    return g.distances()


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``g`` minus ``removed``, ordered by smallest member."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(frozenset(comp))
    return comps


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraph("graph is disconnected")


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points via iterative low-link DFS."""
    _require_connected(g)
    if g.n <= 2:
        return frozenset()
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    root_children = 0
    stack = [(root, -1, iter(sorted(g.adj[root])))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for v in it:
            if disc[v] < 0:
                timer += 1
                disc[v] = low[v] = timer
                stack.append((v, u, iter(sorted(g.adj[v]))))
                advanced = True
                break
            if v != parent:
                low[u] = min(low[u], disc[v])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[u])
            if parent == root:
                root_children += 1
            elif low[u] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def pendants(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == g.n - 1)


def is_path(g: Graph) -> bool:
    _require_connected(g)
    return g.num_edges == g.n - 1 and all(len(a) <= 2 for a in g.adj)


def is_tree(g: Graph) -> bool:
    _require_connected(g)
    return g.num_edges == g.n - 1


def is_unicyclic(g: Graph) -> bool:
    _require_connected(g)
    return g.num_edges == g.n


def twin_classes(g: Graph) -> TwinClasses:
    """Maximal true-twin (equal N[v]) and false-twin (equal N(v)) classes.

    A vertex cannot have a true twin and a false twin at once, so grouping
    by closed fingerprints first and open fingerprints second is canonical.
    """
    closed = defaultdict(list)
    for v in range(g.n):
        closed[g.closed_nbhd(v)].append(v)
    in_true = {v for group in closed.values() if len(group) > 1 for v in group}
    opened = defaultdict(list)
    for v in range(g.n):
        if v not in in_true:
            opened[g.adj[v]].append(v)
    found = []
    for group in closed.values():
        if len(group) > 1:
            found.append((tuple(group), TwinKind.TRUE))
    for group in opened.values():
        found.append((tuple(group), TwinKind.FALSE if len(group) > 1 else TwinKind.SINGLETON))
    found.sort(key=lambda item: item[0][0])
    return TwinClasses(tuple(c for c, _ in found), tuple(k for _, k in found))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G[S] with ids compacted in increasing order; returns (graph, old->new)."""
    keep = sorted(set(int(v) for v in keep))
    for v in keep:
        if not 0 <= v < g.n:
            raise InvalidGraph(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(keep)}
    adj = tuple(frozenset(relabel[u] for u in g.adj[v] if u in relabel) for v in keep)
    labels = None if g.labels is None else tuple(g.labels[v] for v in keep)
    return Graph(len(keep), adj, labels), relabel


def remove_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    if not 0 <= v < g.n:
        raise InvalidGraph(f"vertex {v} out of range")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return from_edge_list(g.n, list(g.edges) + list(edges), g.labels)


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least relabelled edge list (degree-refined brute force).

    Intended for the small pattern pieces (n <= 8); cost grows factorially.
    """
    by_degree = defaultdict(list)
    for v in range(g.n):
        by_degree[g.degree(v)].append(v)
    blocks = [by_degree[d] for d in sorted(by_degree)]
    best = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [v for part in parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        edges = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))
        if best is None or edges < best:
            best = edges
    return g.n, best or ()


# --- text formats -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format ('#' starts a comment)."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise InvalidGraph("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        if len(header) != 2:
            raise ValueError
        n, m = header
        edges = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise InvalidGraph(f"malformed edge list: {exc}") from None
    if len(edges) != len(rows) - 1:
        raise InvalidGraph("every edge line must hold exactly two vertex ids")
    if len(edges) != m:
        raise InvalidGraph(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        out["labels"] = {str(v): lab for v, lab in enumerate(g.labels)}
    return out


def from_json_dict(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = [tuple(e) for e in obj["edges"]]
        raw = obj.get("labels")
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraph(f"malformed graph JSON: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise InvalidGraph("edges must be pairs")
    labels = None
    if raw:
        if isinstance(raw, list):
            labels = [str(x) for x in raw]
        else:
            labels = [str(raw.get(str(v), v)) for v in range(n)]
    return from_edge_list(n, edges, labels)


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True)


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraph(f"invalid JSON: {exc}") from None
    return from_json_dict(obj)


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G", highlight: dict[int, str] | None = None) -> str:
    """Graphviz DOT; ``highlight`` maps vertex -> fill colour."""
    lines = [f"graph {_dot_id(name)} {{"]
    for v in range(g.n):
        attrs = [f"label={_dot_id(g.label(v))}"]
        if highlight and v in highlight:
            attrs.append(f"style=filled, fillcolor={_dot_id(highlight[v])}")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    """Read a ``.json`` graph or an edge-list file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return from_json(text)
    return parse_edge_list(text)
