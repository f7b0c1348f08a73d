"""Unicyclic graphs: the unique cycle and the invariants L, b and type 1.

A leg at v is a path hanging off v: it starts at a neighbour of v away from
the cycle, every inner vertex has degree 2 and it ends at a leaf.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotUnicyclic
from ..graph import Graph, is_unicyclic


@dataclass(frozen=True)
class UnicyclicInvariants:
    L: int
    b: int
    type1: bool
    cycle: tuple[int, ...]
    legs: tuple[int, ...]  # legs[v] is the number of legs hanging at v
    branches: tuple[int, ...]  # branches[v] counts all subtrees hanging at v

    @property
    def dim_range(self) -> tuple[int, int]:
        low = self.L + max(2 - self.b, 0)
        return low, low + 1


def unique_cycle(g: Graph) -> tuple[int, ...]:
    """Cycle vertices in traversal order, found by stripping degree-1 vertices."""
    if not g.is_connected() or not is_unicyclic(g):
        raise NotUnicyclic("graph is not connected and unicyclic")
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    on = {v for v in range(g.n) if alive[v]}
    start = min(on)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(u for u in g.adj[cur] if u in on and u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def _is_leg(g: Graph, parent: int, u: int) -> bool:
    while True:
        rest = [x for x in g.adj[u] if x != parent]
        if not rest:
            return True
        if len(rest) > 1:
            return False
        parent, u = u, rest[0]


def unicyclic_invariants(g: Graph) -> UnicyclicInvariants:
    cycle = unique_cycle(g)
    on = set(cycle)
    # orient every off-cycle edge away from the cycle
    parent = {v: None for v in cycle}
    order = list(cycle)
    for v in order:
        for u in g.adj[v]:
            if u not in on and u not in parent:
                parent[u] = v
                order.append(u)
    legs = [0] * g.n
    branches = [0] * g.n
    for v in range(g.n):
        kids = [u for u in g.adj[v] if u not in on and parent.get(u) == v]
        branches[v] = len(kids)
        legs[v] = sum(_is_leg(g, v, u) for u in kids)
    L = sum(legs[v] - 1 for v in range(g.n) if legs[v] > 1)
    b = sum(1 for v in cycle if branches[v] > 1 or (branches[v] == 1 and legs[v] == 0))
    max_deg = max(g.degree(v) for v in range(g.n))
    type1 = max_deg <= 3 and all(v in on for v in range(g.n) if g.degree(v) == 3)
    return UnicyclicInvariants(L, b, type1, cycle, tuple(legs), tuple(branches))


def branch_count_L(inv: UnicyclicInvariants) -> int:
    """L computed with every hanging subtree counted, legs or not."""
    return sum(c - 1 for c in inv.branches if c > 1)
