"""Figure graphs, transcribed edge by edge from the drawn coordinates.

Figures 1(a-c) and 2(a) share one hexagon drawn at
(0,0) (1,.5) (1,1.5) (0,2) (-1,1.5) (-1,.5); those vertices are x0..x5 in that
order. Pendants drawn at (2,0) (2,2) (0,3) (-2,2) (-2,0) hang from x1..x5 and
are p1..p5. Labels printed in a figure replace the positional name.
"""

from __future__ import annotations

from ..errors import UnknownName
from ..graph import Graph, from_labelled_edges

_HEX = [("x0", "x1"), ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x0")]
_HEX_ORDER = ["x0", "x1", "x2", "x3", "x4", "x5"]


def _rename(edges, names):
    return [(names.get(a, a), names.get(b, b)) for a, b in edges]


def _fig1a() -> Graph:
    # fig 1(a): the hexagon without x3-x4, so a tree; x4 = v1, x3 = v2
    edges = [e for e in _HEX if e != ("x3", "x4")]
    edges += [("x1", "p1"), ("x2", "p2"), ("x3", "p3"), ("x4", "p4"), ("x5", "p5")]
    names = {"x4": "v1", "x3": "v2"}
    order = [names.get(v, v) for v in _HEX_ORDER + ["p1", "p2", "p3", "p4", "p5"]]
    return from_labelled_edges(_rename(edges, names), order)


def _fig1b() -> Graph:
    # fig 1(b): fig 1(a) plus v1v2; the figure renames x4 = u1 and p2 = u2
    edges = _HEX + [("x1", "p1"), ("x2", "p2"), ("x3", "p3"), ("x4", "p4"), ("x5", "p5")]
    names = {"x4": "u1", "p2": "u2"}
    order = [names.get(v, v) for v in _HEX_ORDER + ["p1", "p2", "p3", "p4", "p5"]]
    return from_labelled_edges(_rename(edges, names), order)


def _fig1c() -> Graph:
    # fig 1(c): fig 1(b) plus u1u2; u2 is redrawn at (0,1) between x2 and x4
    edges = _HEX + [("x1", "p1"), ("x2", "u2"), ("u2", "u1"), ("x3", "p3"), ("u1", "p4"), ("x5", "p5")]
    names = {"x4": "u1"}
    order = [names.get(v, v) for v in _HEX_ORDER] + ["p1", "u2", "p3", "p4", "p5"]
    return from_labelled_edges(_rename(edges, names), order)


def _fig2a() -> Graph:
    # fig 2(a): x0 = u; x2 - h at (2,2) with pendants v1 (2.7,2.7), v2 (3,2), v3 (2.7,1.3)
    edges = _HEX + [("x2", "h"), ("h", "v1"), ("h", "v2"), ("h", "v3"), ("x3", "p3"), ("x4", "p4")]
    names = {"x0": "u"}
    order = [names.get(v, v) for v in _HEX_ORDER] + ["h", "v1", "v2", "v3", "p3", "p4"]
    return from_labelled_edges(_rename(edges, names), order)


def _fig4() -> Graph:
    # fig 4 (left): v4 (0,0), v5 (-.7,-.5), v6 (.7,-.5), v3 (1,.5), v2 (-1,.5), v1 (0,1)
    edges = [
        ("v4", "v5"), ("v5", "v2"), ("v2", "v1"), ("v1", "v3"), ("v3", "v6"),
        ("v6", "v4"), ("v4", "v2"), ("v3", "v4"), ("v5", "v6"),
    ]
    return from_labelled_edges(edges, ["v1", "v2", "v3", "v4", "v5", "v6"])


# figs 7 and 8 share six positions; names follow fig 7:
# r1 (-1,3), r2 (1,3), v1 (0,2), v2 (-1,1), v3 (1,1), v4 (0,0)
_SIX_ORDER = ["r1", "r2", "v1", "v2", "v3", "v4"]
_FIG8B_EDGES = [
    ("v1", "r2"), ("r2", "v3"), ("v3", "v1"), ("v1", "r1"), ("r1", "v2"),
    ("v2", "v1"), ("v1", "v4"), ("v4", "v3"), ("v3", "v2"), ("r2", "r1"),
]


def _fig8a() -> Graph:
    return from_labelled_edges(_FIG8B_EDGES + [("v2", "v4")], _SIX_ORDER)


def _fig8b() -> Graph:
    return from_labelled_edges(_FIG8B_EDGES, _SIX_ORDER)


CATALOGUE = {
    "fig1a": _fig1a,
    "fig1b": _fig1b,
    "fig1c": _fig1c,
    "fig2a": _fig2a,
    "fig4": _fig4,
    "fig7": _fig8a,
    "fig8a": _fig8a,
    "fig8b": _fig8b,
}


def named_graph(name: str) -> Graph:
    try:
        build = CATALOGUE[name]
    except KeyError:
        raise UnknownName(f"unknown graph {name!r}; known: {', '.join(sorted(CATALOGUE))}") from None
    return build()
