"""Graphviz DOT rendering of hierarchical graphs and arc multisets.

Levels are drawn as ranks with the empty string at the bottom; up arcs are
solid, down arcs dashed. Input vertices get box shapes. Solution renders
show only the support of the multiset, with arc multiplicities as labels.
"""

from __future__ import annotations

from typing import Iterable

from .hgraph import HierarchicalGraph
from .solutions import ArcMultiset


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_line(hg: HierarchicalGraph, v: int) -> str:
    label = hg.labels[v] if v != 0 else "ε"
    shape = "box" if hg.is_input_vid(v) else "ellipse"
    return f"  v{v} [label={_quote(label)} shape={shape}];"


def _rank_blocks(hg: HierarchicalGraph, vids: Iterable[int]) -> list[str]:
    by_level: dict[int, list[int]] = {}
    for v in vids:
        by_level.setdefault(hg.level_of[v], []).append(v)
    lines = []
    for level in sorted(by_level):
        members = " ".join(f"v{v};" for v in sorted(by_level[level]))
        lines.append(f"  {{ rank=same; {members} }}")
    return lines


def render_graph(hg: HierarchicalGraph) -> str:
    """The full hierarchical graph: one up and one down arc per vertex."""
    n = len(hg.labels)
    lines = ["digraph hierarchical {", "  rankdir=BT;"]
    lines.extend(_node_line(hg, v) for v in range(n))
    lines.extend(_rank_blocks(hg, range(n)))
    for v in range(1, n):
        lines.append(f"  v{hg.pref[v]} -> v{v};")
        lines.append(f"  v{v} -> v{hg.suff[v]} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_solution(hg: HierarchicalGraph, d: ArcMultiset) -> str:
    """The support of an arc multiset with multiplicity labels."""
    if d.hg is not hg and d.hg.labels != hg.labels:
        raise ValueError("multiset belongs to a different graph")
    mark = [False] * len(hg.labels)
    for v in range(1, len(hg.labels)):
        if d.up[v] > 0:
            mark[v] = mark[hg.pref[v]] = True
        if d.down[v] > 0:
            mark[v] = mark[hg.suff[v]] = True
    touched = [v for v, m in enumerate(mark) if m]
    lines = ["digraph solution {", "  rankdir=BT;"]
    lines.extend(_node_line(hg, v) for v in touched)
    lines.extend(_rank_blocks(hg, touched))
    for v in range(1, len(hg.labels)):
        if d.up[v] > 0:
            lines.append(f"  v{hg.pref[v]} -> v{v} [label={int(d.up[v])}];")
        if d.down[v] > 0:
            lines.append(
                f"  v{v} -> v{hg.suff[v]} [style=dashed label={int(d.down[v])}];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
