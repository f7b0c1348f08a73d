"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

from itertools import combinations

import networkx as nx

INF = float("inf")


def floyd_warshall(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return [[-1 if x == INF else int(x) for x in row] for row in d]


def resolves(d, r):
    sigs = {tuple(d[v][w] for w in r) for v in range(len(d))}
    return len(sigs) == len(d)


def naive_bases(d):
    """(dim, all metric bases) by trying every subset in size order."""
    n = len(d)
    for k in range(1, n + 1):
        found = [c for c in combinations(range(n), k) if resolves(d, c)]
        if found:
            return k, found
    raise AssertionError("V itself always resolves")


def cut_vertices_by_removal(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    base = nx.number_connected_components(g)
    out = set()
    for v in range(n):
        h = g.copy()
        h.remove_node(v)
        if nx.number_connected_components(h) > base:
            out.add(v)
    return out


def simple_cycles(n, edges):
    """Every simple cycle of an undirected graph as a list of vertices."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return [c for c in nx.simple_cycles(g) if len(c) >= 3]


def colour_cycle_violation(n, coloured_edges):
    """Brute force: some simple cycle uses a colour exactly once."""
    colour = {frozenset((x, y)): c for x, y, c in coloured_edges}
    for cyc in simple_cycles(n, [(x, y) for x, y, _ in coloured_edges]):
        counts = {}
        for i, a in enumerate(cyc):
            c = colour[frozenset((a, cyc[(i + 1) % len(cyc)]))]
            counts[c] = counts.get(c, 0) + 1
        if 1 in counts.values():
            return cyc
    return None
