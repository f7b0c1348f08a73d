"""Numba backend: bit-packed pair masks, resumable explicit-stack DFS."""

from __future__ import annotations

import numpy as np
from numba import njit

from . import pack_rows, vertex_masks

_ONE = np.uint64(1)
_ZERO = np.uint64(0)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)

DONE = 0
PAUSED = 1
FULL = 2

# state slots
_DEPTH = 0
_PENDING = 1
_NSOL = 2

_CHUNK = 1 << 20


@njit(cache=True)
def all_pairs_bfs(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u] + 1
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if dist[s, v] < 0:
                    dist[s, v] = du
                    queue[tail] = v
                    tail += 1
    return dist


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _search(words, coverers, full, twin_masks, twin_need, k, enumerate_all,
            cov, chosen, excl, remaining, tried, state, sols, max_steps):
    n = words.shape[0]
    nw = words.shape[1]
    n_pairs = coverers.shape[0]
    n_twin = twin_masks.shape[0]
    steps = 0
    while steps < max_steps:
        d = state[_DEPTH]
        if d < 0:
            return DONE, steps
        if state[_PENDING] == 1:
            if state[_NSOL] >= sols.shape[0]:
                return FULL, steps
            state[_PENDING] = 0
            steps += 1
            n_cov = 0
            for i in range(nw):
                n_cov += _popcount(cov[d, i])
            n_unc = n_pairs - n_cov
            if n_unc == 0:
                sols[state[_NSOL]] = chosen[d]
                state[_NSOL] += 1
                if not enumerate_all:
                    state[_DEPTH] = -1
                    return DONE, steps
                state[_DEPTH] = d - 1
                continue
            if d == k:
                state[_DEPTH] = d - 1
                continue
            room = k - d
            prune = False
            deficit = 0
            for t in range(n_twin):
                need = twin_need[t]
                have = _popcount(twin_masks[t] & chosen[d])
                if have < need:
                    deficit += need - have
                if _popcount(twin_masks[t] & ~excl[d]) < need:
                    prune = True
            if prune or deficit > room:
                state[_DEPTH] = d - 1
                continue
            blocked = chosen[d] | excl[d]
            best_gain = 0
            for v in range(n):
                if (blocked >> np.uint64(v)) & _ONE:
                    continue
                g = 0
                for i in range(nw):
                    g += _popcount(words[v, i] & ~cov[d, i])
                if g > best_gain:
                    best_gain = g
            if best_gain == 0 or (n_unc + best_gain - 1) // best_gain > room:
                state[_DEPTH] = d - 1
                continue
            best_pair = -1
            best_count = n + 1
            for i in range(nw):
                unc = full[i] & ~cov[d, i]
                while unc != _ZERO:
                    low = unc & (~unc + _ONE)
                    unc ^= low
                    p = i * 64 + _popcount(low - _ONE)
                    c = _popcount(coverers[p] & ~excl[d])
                    if c < best_count:
                        best_count = c
                        best_pair = p
                        if c == 0:
                            break
                if best_count == 0:
                    break
            if best_count == 0:
                state[_DEPTH] = d - 1
                continue
            remaining[d] = coverers[best_pair] & ~excl[d]
            tried[d] = _ZERO
            continue
        rem = remaining[d]
        if rem == _ZERO:
            state[_DEPTH] = d - 1
            continue
        low = rem & (~rem + _ONE)
        remaining[d] = rem ^ low
        w = _popcount(low - _ONE)
        chosen[d + 1] = chosen[d] | low
        excl[d + 1] = excl[d] | tried[d]
        tried[d] |= low
        for i in range(nw):
            cov[d + 1, i] = cov[d, i] | words[w, i]
        state[_DEPTH] = d + 1
        state[_PENDING] = 1
    return PAUSED, steps


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def cover_search(cover, twin_sets, twin_need, k, enumerate_all, budget):
    """Numba counterpart of ``_numpy.cover_search``; identical contract."""
    n, n_pairs = cover.shape
    words = pack_rows(cover)
    full = pack_rows(np.ones((1, n_pairs), dtype=bool))[0]
    coverers = vertex_masks(cover)
    if twin_sets.shape[0]:
        twin_masks = vertex_masks(twin_sets.T)
    else:
        twin_masks = np.zeros(0, dtype=np.uint64)
    need = np.asarray(twin_need, dtype=np.int64)
    depth = k + 2
    cov = np.zeros((depth, words.shape[1]), dtype=np.uint64)
    chosen = np.zeros(depth, dtype=np.uint64)
    excl = np.zeros(depth, dtype=np.uint64)
    remaining = np.zeros(depth, dtype=np.uint64)
    tried = np.zeros(depth, dtype=np.uint64)
    state = np.array([0, 1, 0], dtype=np.int64)
    sols = np.zeros(64, dtype=np.uint64)
    nodes = 0
    while True:
        steps_allowed = max(min(_CHUNK, budget.nodes_left), 1)
        status, steps = _search(words, coverers, full, twin_masks, need, k,
                                enumerate_all, cov, chosen, excl, remaining,
                                tried, state, sols, steps_allowed)
        nodes += steps
        if status == DONE:
            budget.nodes += steps
            break
        if status == FULL:
            sols = np.concatenate([sols, np.zeros_like(sols)])
        budget.charge(steps)
    found = [_mask_to_tuple(int(m)) for m in sols[: state[_NSOL]]]
    return found, nodes
