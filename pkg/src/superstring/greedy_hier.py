"""Top-down greedy construction of a solution in the hierarchical graph."""

from __future__ import annotations

from . import _kernels
from .hgraph import HierarchicalGraph
from .solutions import ArcMultiset


def _run(hg: HierarchicalGraph, connect: bool,
         snapshots: list[tuple[int, ArcMultiset]] | None) -> ArcMultiset:
    out = ArcMultiset(hg)
    cb = None
    if snapshots is not None:
        def cb(level: int) -> None:
            snapshots.append((level, out.copy()))
    _kernels.gha_fill(hg.arrays(), out.up, out.down, connect, cb)
    return out


def gha(hg: HierarchicalGraph, *,
        snapshots: list[tuple[int, ArcMultiset]] | None = None) -> ArcMultiset:
    """Greedy hierarchical solution: always valid, often optimal in practice.

    snapshots, when given a list, receives (level, multiset copy) after each
    processed level, top level first.
    """
    return _run(hg, True, snapshots)


def gha_cycle_cover(hg: HierarchicalGraph, *,
                    snapshots: list[tuple[int, ArcMultiset]] | None = None
                    ) -> ArcMultiset:
    """Same construction with the last-chance rule disabled.

    The result is balanced at every vertex and covers all inputs but need
    not be connected or touch the empty string: it is a cycle cover.
    """
    return _run(hg, False, snapshots)
