"""Glue construction: join connected non-path graphs by a clique on anchors.

Each anchor must be a non-void vertex of its part. The metric bases of the
glued graph W are exactly the unions of (R_i minus g_i) over bases R_i of the
parts that contain the anchors, so dim(W) = sum(dim(G_i)) - k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..errors import AnchorIsVoid, BuilderError, PartDisconnected, PartIsPath
from ..graph import Graph, add_edges, disjoint_union, is_path
from ..resolver import ResolvingAnalysis, Role, analyze


@dataclass(frozen=True)
class GluePart:
    graph: Graph
    anchor: int | str
    tag: str | None = None  # appended to every label as "^tag"


@dataclass(frozen=True)
class GlueSpec:
    parts: tuple[GluePart, ...]

    @classmethod
    def of(cls, *parts: tuple) -> GlueSpec:
        return cls(tuple(p if isinstance(p, GluePart) else GluePart(*p) for p in parts))


@dataclass(frozen=True)
class GlueResult:
    graph: Graph
    anchors: tuple[int, ...]
    offsets: tuple[int, ...]


def _tagged(part: GluePart) -> Graph:
    g = part.graph
    if part.tag is None:
        return g
    return g.with_labels([f"{g.label(v)}^{part.tag}" for v in range(g.n)])


def validate_glue(spec: GlueSpec, **analyze_kw) -> list[ResolvingAnalysis]:
    """Check every part and return its analysis (used for the anchor test)."""
    if len(spec.parts) < 2:
        raise BuilderError("glue needs at least two parts")
    out = []
    for i, part in enumerate(spec.parts):
        g = part.graph
        if not g.is_connected():
            raise PartDisconnected(f"part {i} is disconnected")
        if is_path(g):
            raise PartIsPath(f"part {i} is a path")
        a = analyze(g, **analyze_kw)
        anchor = g.vertex(part.anchor)
        if a.roles[anchor] is Role.VOID:
            raise AnchorIsVoid(f"anchor {g.label(anchor)} of part {i} is a void vertex")
        out.append(a)
    return out


def glue(spec: GlueSpec, *, validate: bool = True, **analyze_kw) -> GlueResult:
    if validate:
        validate_glue(spec, **analyze_kw)
    elif len(spec.parts) < 2:
        raise BuilderError("glue needs at least two parts")
    parts = [_tagged(p) for p in spec.parts]
    union, offsets = disjoint_union(parts)
    if union.labels is None and any(p.labels is not None for p in parts):
        raise BuilderError("part labels collide; give the parts distinct tags")
    anchors = tuple(off + p.graph.vertex(p.anchor) for p, off in zip(spec.parts, offsets))
    w = add_edges(union, combinations(anchors, 2))
    return GlueResult(w, anchors, tuple(offsets))


def glue_dim_formula(spec: GlueSpec, **analyze_kw) -> int:
    analyses = validate_glue(spec, **analyze_kw)
    return sum(a.dim for a in analyses) - len(spec.parts)


def glue_chain(g: Graph, copies: int, first: int | str, link: int | str, **analyze_kw) -> Graph:
    """Iterate the construction over ``copies`` copies of ``g``.

    Copy 1 and copy 2 are joined at their ``first`` anchors; every later copy
    is joined by its ``first`` anchor to the ``link`` vertex of the copy
    before it. Each step adds a single edge. Copy i gets the label tag ``i``.
    """
    if copies < 1:
        raise BuilderError("need at least one copy")
    w = _tagged(GluePart(g, first, "1"))
    for i in range(2, copies + 1):
        left = f"{g.label(g.vertex(first if i == 2 else link))}^{i - 1}"
        spec = GlueSpec.of((w, left), (g, first, str(i)))
        w = glue(spec, **analyze_kw).graph
    return w


def glue_clique(g: Graph, copies: int, anchor: int | str, **analyze_kw) -> Graph:
    """Join ``copies`` copies of ``g`` in one step; anchors form a clique."""
    spec = GlueSpec(tuple(GluePart(g, anchor, str(i)) for i in range(1, copies + 1)))
    return glue(spec, **analyze_kw).graph


def parts_from_json(obj: dict, resolve_graph) -> GlueSpec:
    """``{"parts": [{"named"|"graph": ..., "anchor": ..., "tag": ...}, ...]}``."""
    try:
        raw_parts: Sequence[dict] = obj["parts"]
        parts = []
        for i, p in enumerate(raw_parts):
            g = resolve_graph(p)
            parts.append(GluePart(g, p["anchor"], str(p.get("tag", i + 1))))
    except (KeyError, TypeError) as exc:
        raise BuilderError(f"malformed glue spec: {exc}") from None
    return GlueSpec(tuple(parts))
