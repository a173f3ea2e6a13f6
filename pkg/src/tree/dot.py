"""
Graphviz output for finite pieces of the tree
"""

from typing import Iterable, Optional

from src.tree.vertex import Vertex


def to_dot(vertices: Iterable[Vertex], name: str = "tree", highlight: Iterable[Vertex] = (),
           title: Optional[str] = None) -> str:
    """
    Undirected DOT graph on the given vertices

    An edge is drawn between every vertex and its parent when both are present,
    which covers balls, paths and geodesic segments alike.
    """
    ordered = list(dict.fromkeys(vertices))
    ids = {v: f"v{i}" for i, v in enumerate(ordered)}
    marked = set(highlight)
    lines = [f"graph {name} {{"]
    if title:
        lines.append(f'  label="{title}";')
    for v in ordered:
        style = ", style=filled, fillcolor=lightblue" if v in marked else ""
        lines.append(f'  {ids[v]} [label="{v}"{style}];')
    for v in ordered:
        parent = v.parent()
        if parent in ids:
            lines.append(f"  {ids[parent]} -- {ids[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
