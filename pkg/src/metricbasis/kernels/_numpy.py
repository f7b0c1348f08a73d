"""Pure-numpy backend. Same traversal order as the numba backend."""

from __future__ import annotations

import numpy as np


def all_pairs_bfs(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    adj = np.zeros((n, n), dtype=np.uint8)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    step = 0
    while frontier.any():
        step += 1
        nxt = ((frontier.astype(np.uint8) @ adj) > 0) & ~reached
        dist[nxt] = step
        reached |= nxt
        frontier = nxt
    return dist


def cover_search(cover, twin_sets, twin_need, k, enumerate_all, budget):
    """Find size-<=k vertex sets whose cover rows jointly hit every column.

    Branches on the uncovered column with the fewest non-excluded coverers
    (lowest index on ties); the i-th branch takes the i-th coverer and
    excludes the earlier ones, so every cover is produced at most once.
    Returns ``(solutions, nodes)``.
    """
    n = cover.shape[0]
    solutions: list[tuple[int, ...]] = []
    nodes = 0
    has_twins = twin_sets.shape[0] > 0

    def visit(chosen, excl, cov, depth):
        nonlocal nodes
        nodes += 1
        budget.tick()
        unc = ~cov
        n_unc = int(unc.sum())
        if n_unc == 0:
            solutions.append(tuple(int(v) for v in np.flatnonzero(chosen)))
            return not enumerate_all
        if depth == k:
            return False
        room = k - depth
        if has_twins:
            have = (twin_sets & chosen).sum(axis=1)
            if int(np.maximum(twin_need - have, 0).sum()) > room:
                return False
            if ((twin_sets & ~excl).sum(axis=1) < twin_need).any():
                return False
        sub = cover[:, unc] & ~excl[:, None]
        best_gain = int(sub.sum(axis=1).max())
        if best_gain == 0 or -(-n_unc // best_gain) > room:
            return False
        counts = sub.sum(axis=0)
        col = int(counts.argmin())
        if counts[col] == 0:
            return False
        tried = excl.copy()
        for w in np.flatnonzero(sub[:, col]):
            chosen[w] = True
            if visit(chosen, tried, cov | cover[w], depth + 1):
                return True
            chosen[w] = False
            tried[w] = True
        return False

    visit(
        np.zeros(n, dtype=bool),
        np.zeros(n, dtype=bool),
        np.zeros(cover.shape[1], dtype=bool),
        0,
    )
    return solutions, nodes
