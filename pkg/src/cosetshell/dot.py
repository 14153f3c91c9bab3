"""Graphviz DOT output for (labelled) Hasse diagrams."""

from __future__ import annotations

from .cosets import Poset, render
from .groups import Group


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(g: Group, poset: Poset, labels: dict | None = None, name: str = "hasse") -> str:
    """Nodes are cosets named by their sorted elements; edges point upward.

    With ``labels`` each edge carries its label and is drawn solid when
    negative, dashed when positive and dotted when zero.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for i, x in enumerate(poset.elements):
        lines.append(f"  n{i} [label={_quote(render(g, x))}];")
    for lo, hi in poset.covers:
        a, b = poset.index[lo], poset.index[hi]
        if labels is None:
            lines.append(f"  n{a} -> n{b} [arrowhead=none];")
            continue
        lam = labels[lo, hi]
        style = "solid" if lam < 0 else "dashed" if lam > 0 else "dotted"
        lines.append(f'  n{a} -> n{b} [arrowhead=none, style={style}, label="{lam}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
