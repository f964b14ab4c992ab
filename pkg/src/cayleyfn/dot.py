"""Graphviz DOT text for functional digraphs.

Render with e.g. ``dot -Tpng -O graph.dot``.  Node and edge order is
deterministic (ascending vertex index).
"""

from __future__ import annotations

from .centralizer import PhiMap
from .digraph import decompose, twigs
from .symbolic import Materialization
from .transformation import Transformation

__all__ = ["digraph_dot", "phi_dot", "materialization_dot"]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge_classes(alpha: Transformation) -> dict[int, str]:
    dec = decompose(alpha)
    classes = {v: "cycle" for v in dec.cycle_vertices}
    for twig in twigs(alpha):
        for v in twig.path[:-1]:
            classes.setdefault(v, "twig")
    return classes


def digraph_dot(alpha: Transformation, name: str = "D_alpha") -> str:
    """One node per vertex and one edge v -> alpha(v); cycle edges carry
    ``class="cycle"`` and twig edges ``class="twig"``."""
    classes = _edge_classes(alpha)
    lines = [f"digraph {_quote(name)} {{"]
    for v in range(alpha.size):
        lines.append(f"  {v} [label={_quote(alpha.label(v))}];")
    for v in range(alpha.size):
        cls = classes.get(v)
        attrs = f' [class="{cls}"]' if cls else ""
        if cls == "cycle":
            attrs = ' [class="cycle", penwidth=2]'
        lines.append(f"  {v} -> {alpha.map[v]}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def phi_dot(phi: PhiMap, name: str = "D_Phi") -> str:
    """Digraph of the component map, nodes named by fixed-vertex label."""
    return digraph_dot(phi.base, name)


def materialization_dot(mat: Materialization, name: str = "truncation") -> str:
    alpha = mat.transformation
    classes = _edge_classes(alpha)
    spine = set(mat.spine.values())
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for v in range(alpha.size):
        attrs = [f"label={_quote(alpha.label(v))}"]
        if v in mat.boundary:
            attrs += ['class="boundary"', "style=dashed", "color=gray"]
        elif v in spine:
            attrs.append("shape=box")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for v in range(alpha.size):
        cls = "boundary" if v in mat.boundary and alpha.map[v] == v else classes.get(v)
        attrs = f' [class="{cls}"]' if cls else ""
        lines.append(f"  {v} -> {alpha.map[v]}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
