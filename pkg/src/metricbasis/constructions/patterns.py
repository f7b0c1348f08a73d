"""Dense graphs described by the components of their complement.

A pattern is a list of pieces; the graph is the complement of their disjoint
union. Component i gets labels v{j}^{i}; isolated-block vertices are u{j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import BuilderError, ResultDisconnected, UnknownName
from ..graph import Graph, complement, from_edge_list


@dataclass(frozen=True)
class Piece:
    kind: str
    size: int = 0  # leaves for K1n, order for Kn, block size for K0

    def edges(self) -> tuple[int, list[tuple[int, int]]]:
        k, s = self.kind, self.size
        if k == "K2":
            return 2, [(0, 1)]
        if k == "K3":
            return 3, [(0, 1), (1, 2), (0, 2)]
        if k == "P4":
            return 4, [(0, 1), (1, 2), (2, 3)]
        if k == "P5":
            return 5, [(0, 1), (1, 2), (2, 3), (3, 4)]
        if k == "C4":
            return 4, [(0, 1), (1, 2), (2, 3), (3, 0)]
        if k == "K1_4":
            return 5, [(0, i) for i in range(1, 5)]
        if k == "G":
            # K_{1,3} with a pendant on one leaf
            return 5, [(0, 1), (0, 2), (0, 3), (3, 4)]
        if k == "J":
            # triangle with a pendant
            return 4, [(0, 1), (1, 2), (0, 2), (1, 3)]
        if k == "H7":
            # path v1..v7, v8 pendant on v4
            return 8, [(i, i + 1) for i in range(6)] + [(3, 7)]
        if k == "K1n":
            return s + 1, [(0, i) for i in range(1, s + 1)]
        if k == "Kn":
            return s, [(i, j) for i in range(s) for j in range(i + 1, s)]
        if k == "K0":
            return s, []
        raise UnknownName(f"unknown pattern piece {k!r}")

    @property
    def order(self) -> int:
        return self.edges()[0]


K2 = Piece("K2")
K3 = Piece("K3")
P4 = Piece("P4")
P5 = Piece("P5")
C4 = Piece("C4")
K1_4 = Piece("K1_4")
SpecialG = Piece("G")
SpecialJ = Piece("J")
H7 = Piece("H7")


def K1n(n: int) -> Piece:
    if n < 1:
        raise BuilderError("K1n needs at least one leaf")
    return Piece("K1n", n)


def Kn(n: int) -> Piece:
    if n < 2:
        raise BuilderError("Kn needs at least two vertices")
    return Piece("Kn", n)


def IsolatedBlock(m: int) -> Piece:
    if m < 1:
        raise BuilderError("an isolated block needs at least one vertex")
    return Piece("K0", m)


_FIXED = {"K2": K2, "K3": K3, "P4": P4, "P5": P5, "C4": C4, "K1_4": K1_4,
          "G": SpecialG, "SpecialG": SpecialG, "J": SpecialJ, "SpecialJ": SpecialJ,
          "H7": H7}
_SIZED = {"K1n": K1n, "Kn": Kn, "K0": IsolatedBlock}


def parse_pattern(text: str) -> list[Piece]:
    """Comma-separated pieces; sized ones as ``K1n:3``, ``Kn:4``, ``K0:2``."""
    pieces = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        name, _, arg = tok.partition(":")
        if name in _FIXED and not arg:
            pieces.append(_FIXED[name])
        elif name in _SIZED and arg:
            try:
                pieces.append(_SIZED[name](int(arg)))
            except ValueError:
                raise BuilderError(f"bad size in pattern token {tok!r}") from None
        else:
            raise UnknownName(f"unknown pattern token {tok!r}")
    if not pieces:
        raise BuilderError("empty pattern")
    return pieces


def pattern_union(pieces: Sequence[Piece]) -> Graph:
    """The complement graph itself: the disjoint union of the pieces."""
    n = 0
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    comp = 0
    isolated = 0
    for p in pieces:
        size, es = p.edges()
        edges.extend((a + n, b + n) for a, b in es)
        if p.kind == "K0":
            labels.extend(f"u{isolated + j + 1}" for j in range(size))
            isolated += size
        else:
            comp += 1
            labels.extend(f"v{j + 1}^{comp}" for j in range(size))
        n += size
    return from_edge_list(n, edges, labels)


def from_complement_pattern(pieces: Sequence[Piece] | str) -> Graph:
    if isinstance(pieces, str):
        pieces = parse_pattern(pieces)
    union = pattern_union(pieces)
    if union.n < 2:
        raise BuilderError("a pattern needs at least two vertices")
    g = complement(union)
    if not g.is_connected():
        raise ResultDisconnected("the complement of this pattern is disconnected")
    return g


def lemma_family(k: int, m: int) -> Graph:
    """Complement of k/2 copies of P5 plus m isolated vertices (k even)."""
    if k < 2 or k % 2:
        raise BuilderError("k must be even and at least 2")
    return from_complement_pattern([P5] * (k // 2) + [IsolatedBlock(m)])


def h_family(k: int, m: int) -> Graph:
    """Complement of H7, (k-3)/2 copies of P5 and m isolated vertices (k odd, k >= 3)."""
    if k < 3 or k % 2 == 0:
        raise BuilderError("k must be odd and at least 3")
    return from_complement_pattern([H7] + [P5] * ((k - 3) // 2) + [IsolatedBlock(m)])
