"""Hot kernels: all-pairs BFS and the pair-cover branch-and-bound.

Two interchangeable backends exist:

* ``numba``: bit-packed pair masks, explicit-stack DFS compiled with ``@njit``.
* ``numpy``: boolean matrices and a recursive DFS, no compiler required.

Both visit the search tree in the same order, so node counts and the raw
solution sequence agree exactly. The backend is chosen per call; the default
is ``numba`` unless ``METRICBASIS_NO_NUMBA`` is set to a truthy value or numba
cannot be imported.
"""

from __future__ import annotations

import importlib
import os
import time
from dataclasses import dataclass, field

import numpy as np

BACKENDS = ("numba", "numpy")
ENV_FLAG = "METRICBASIS_NO_NUMBA"

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_SECONDS = 60.0


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def default_backend() -> str:
    flag = os.environ.get(ENV_FLAG, "").strip().lower()
    if flag not in ("", "0", "false", "no") or not numba_available():
        return "numpy"
    return "numba"


def get_backend(name: str | None = None):
    """Return the kernel module for ``name`` (``None`` means the default)."""
    name = name or default_backend()
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
    return importlib.import_module(f"metricbasis.kernels._{name}")


class BudgetHit(Exception):
    """Internal signal; the resolver converts it into SearchBudgetExceeded."""


@dataclass
class SearchBudget:
    """Node and wall-clock allowance shared across all searches of one analysis."""

    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("search budget must be positive")

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started

    @property
    def nodes_left(self) -> int:
        return max(self.max_nodes - self.nodes, 0)

    def charge(self, nodes: int) -> None:
        self.nodes += nodes
        if self.nodes >= self.max_nodes or self.elapsed > self.max_seconds:
            raise BudgetHit

    def tick(self) -> None:
        # per-node charge for the pure-python path; clock read every 1024 nodes
        self.nodes += 1
        if self.nodes >= self.max_nodes:
            raise BudgetHit
        if not self.nodes & 1023 and self.elapsed > self.max_seconds:
            raise BudgetHit


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a boolean (rows, P) matrix into little-endian uint64 words (rows, W)."""
    rows, width = bits.shape
    words = max((width + 63) // 64, 1)
    padded = np.zeros((rows, words * 64), dtype=np.uint8)
    padded[:, :width] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64, copy=False)


def vertex_masks(bits: np.ndarray) -> np.ndarray:
    """Column-wise vertex sets of a boolean (n, P) matrix as uint64 masks, n <= 64."""
    n = bits.shape[0]
    weights = np.left_shift(np.uint64(1), np.arange(n, dtype=np.uint64))
    return (bits.astype(np.uint64) * weights[:, None]).sum(axis=0, dtype=np.uint64)
