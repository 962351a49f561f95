"""The collapsing normal form of an Eulerian solution.

Collapsing at v replaces the arc pair (pref1(v), v), (v, suff1(v)) by the
pair one level lower through w = pref1(suff1(v)) = suff1(pref1(v)); at
level 1 the pair (eps, v), (v, eps) is simply removed, which is the only
way the weight ever drops (by exactly 1). The normalizing pass works
levels top-down, vertices in ascending lexicographic order, collapsing at
each vertex while the result stays a valid solution.
"""

from __future__ import annotations

from typing import NamedTuple

from . import _kernels
from .hgraph import HierarchicalGraph
from .solutions import ArcMultiset, InvalidSolutionError, is_eulerian_solution


class CollapseStep(NamedTuple):
    level: int
    vertex: str
    up_after: int
    down_after: int


def _vid(hg: HierarchicalGraph, vertex: int | str) -> int:
    if isinstance(vertex, str):
        return hg.vid(vertex)
    return vertex


def collapse_at(hg: HierarchicalGraph, d: ArcMultiset,
                vertex: int | str) -> ArcMultiset:
    """One collapse at a vertex; returns a new multiset.

    Requires up[v] >= 1 and down[v] >= 1. Does not check that the result is
    still a valid solution; see collapse_keeps_valid.
    """
    v = _vid(hg, vertex)
    if v == 0:
        raise ValueError("cannot collapse at the empty string")
    if d.up[v] < 1 or d.down[v] < 1:
        raise ValueError(f"no arc pair at {hg.labels[v]!r}")
    out = d.copy()
    out.up[v] -= 1
    out.down[v] -= 1
    if hg.level_of[v] > 1:
        out.down[hg.pref[v]] += 1
        out.up[hg.suff[v]] += 1
    return out


def collapse_keeps_valid(hg: HierarchicalGraph, d: ArcMultiset,
                         vertex: int | str) -> bool:
    """Whether collapsing at the vertex leaves a valid Eulerian solution.

    Balance is preserved by construction; connectivity, input coverage and
    epsilon coverage are the real constraints. The vertex itself may be an
    input that must keep positive degree.
    """
    return is_eulerian_solution(hg, collapse_at(hg, d, vertex)).ok


def ca(hg: HierarchicalGraph, d: ArcMultiset, *,
       trace: list[CollapseStep] | None = None,
       repeat_levels: bool = False) -> ArcMultiset:
    """Fully collapse a valid solution; deterministic, returns a new multiset.

    trace, when given a list, receives one CollapseStep per performed
    collapse. repeat_levels re-runs each level pass until it makes no
    change (experiment flag; a single pass is the default behaviour).
    """
    if not is_eulerian_solution(hg, d).ok:
        raise InvalidSolutionError("ca requires a valid Eulerian solution")
    out = d.copy()
    raw: list[tuple[int, int, int]] | None = None if trace is None else []
    _kernels.ca_inplace(hg.arrays(), out.up, out.down, raw, repeat_levels)
    if trace is not None and raw:
        labels = hg.labels
        level_of = hg.level_of
        trace.extend(
            CollapseStep(level_of[v], labels[v], ua, da) for v, ua, da in raw
        )
    return out
