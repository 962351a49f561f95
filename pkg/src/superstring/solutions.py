"""Arc multisets over a hierarchical graph and Eulerian-solution machinery.

Every arc of the graph is the unique up-arc or the unique down-arc of some
vertex, so a multiset of arcs is two int64 counters per vertex: up[v] counts
copies of (pref1(v), v), down[v] counts copies of (v, suff1(v)). The empty
string's entries stay zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .hgraph import HierarchicalGraph
from .strings import check_permutation, overlap_len


class InvalidSolutionError(ValueError):
    """Operation requires a valid Eulerian solution."""


class ArcMultiset:
    __slots__ = ("hg", "up", "down")

    def __init__(self, hg: HierarchicalGraph,
                 up: np.ndarray | None = None,
                 down: np.ndarray | None = None) -> None:
        n = len(hg)
        self.hg = hg
        self.up = np.zeros(n, dtype=np.int64) if up is None else up
        self.down = np.zeros(n, dtype=np.int64) if down is None else down

    @property
    def weight(self) -> int:
        """Total up-arc count = length of any superstring spelled from this."""
        return int(self.up.sum())

    def copy(self) -> "ArcMultiset":
        return ArcMultiset(self.hg, self.up.copy(), self.down.copy())

    def is_empty(self) -> bool:
        return not (self.up.any() or self.down.any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArcMultiset):
            return NotImplemented
        return (np.array_equal(self.up, other.up)
                and np.array_equal(self.down, other.down))

    def __hash__(self):
        return hash((self.up.tobytes(), self.down.tobytes()))

    def add_pair(self, vid: int, count: int = 1) -> None:
        """Add count copies of the arc pair (pref1(v), v), (v, suff1(v))."""
        self.up[vid] += count
        self.down[vid] += count

    def canonical_triples(self) -> list[tuple[str, int, int]]:
        """(substring, up, down) for every vertex with an incident counter,
        sorted by (level, lexicographic) -- the canonical equality form."""
        up = self.up.tolist()
        down = self.down.tolist()
        labels = self.hg.labels
        return [
            (labels[v], up[v], down[v])
            for v in range(1, len(labels))
            if up[v] or down[v]
        ]

    def to_json(self) -> str:
        return json.dumps([list(t) for t in self.canonical_triples()])

    @classmethod
    def from_json(cls, hg: HierarchicalGraph, text: str) -> "ArcMultiset":
        d = cls(hg)
        for label, up_mult, down_mult in json.loads(text):
            vid = hg.vid(label)
            d.up[vid] = up_mult
            d.down[vid] = down_mult
        return d


@dataclass(frozen=True)
class ValidityReport:
    balanced: bool
    connected: bool
    covers_inputs: bool
    touches_epsilon: bool

    @property
    def ok(self) -> bool:
        return (self.balanced and self.connected
                and self.covers_inputs and self.touches_epsilon)


def is_eulerian_solution(hg: HierarchicalGraph, d: ArcMultiset) -> ValidityReport:
    """Balanced everywhere, one weak component among positive-degree
    vertices, every input visited, and the empty string visited."""
    flags = _kernels.solution_flags(hg.arrays(), d.up, d.down)
    return ValidityReport(
        balanced=bool(flags & _kernels.FLAG_BALANCED),
        connected=bool(flags & _kernels.FLAG_CONNECTED),
        covers_inputs=bool(flags & _kernels.FLAG_COVERS),
        touches_epsilon=bool(flags & _kernels.FLAG_EPSILON),
    )


def disjoint_union(a: ArcMultiset, b: ArcMultiset) -> ArcMultiset:
    """Counter-wise sum; both multisets must live on the same graph."""
    if a.hg is not b.hg and a.hg.labels != b.hg.labels:
        raise ValueError("multisets belong to different graphs")
    return ArcMultiset(a.hg, a.up + b.up, a.down + b.down)


def zigzag(hg: HierarchicalGraph, order: Sequence[int]) -> ArcMultiset:
    """The walk eps -> s_1 -> overlap(s_1, s_2) -> s_2 -> ... -> s_n -> eps
    for the inputs taken in the given order, as an arc multiset."""
    perm = check_permutation(len(hg.inputs), order)
    d = ArcMultiset(hg)
    strings = hg.inputs.strings
    prev = ""
    for i in perm:
        s = strings[i]
        ov = overlap_len(prev, s) if prev else 0
        # descend prev -> overlap
        x = prev
        while len(x) > ov:
            d.down[hg.vid(x)] += 1
            x = x[1:]
        # ascend overlap -> s
        for j in range(ov + 1, len(s) + 1):
            d.up[hg.vid(s[:j])] += 1
        prev = s
    while prev:
        d.down[hg.vid(prev)] += 1
        prev = prev[1:]
    return d


class Spelling(NamedTuple):
    superstring: str
    visit_order: tuple[int, ...]


def spell(hg: HierarchicalGraph, d: ArcMultiset) -> Spelling:
    """Extract the deterministic Eulerian circuit and read off a superstring.

    Arc choice at each vertex: pending down-arc first, then the up-arc to
    the lexicographically smallest child. The circuit is grown by splicing
    sub-circuits at the first position that still has unused arcs. Appending
    one symbol per up-arc yields a superstring whose length equals the
    multiset weight; visit_order lists inputs by first visit.
    """
    report = is_eulerian_solution(hg, d)
    if not report.ok:
        raise InvalidSolutionError(f"not an Eulerian solution: {report}")
    g = hg.arrays()
    suff = g.suff.tolist()
    child_start = g.child_start.tolist()
    child_flat = g.child_flat.tolist()
    n = len(suff)
    up_rem = d.up.tolist()
    down_rem = d.down.tolist()
    child_ptr = child_start[:-1].copy()

    def next_vertex(x: int) -> int:
        if down_rem[x] > 0:
            down_rem[x] -= 1
            return suff[x]
        ptr = child_ptr[x]
        end = child_start[x + 1]
        while ptr < end and up_rem[child_flat[ptr]] == 0:
            ptr += 1
        child_ptr[x] = ptr
        if ptr < end:
            up_rem[child_flat[ptr]] -= 1
            return child_flat[ptr]
        return -1

    def walk_from(v0: int) -> list[int]:
        path = [v0]
        x = v0
        while True:
            nxt = next_vertex(x)
            if nxt < 0:
                break
            path.append(nxt)
            x = nxt
        if x != v0:
            raise InvalidSolutionError("walk did not close")
        return path

    circuit = walk_from(0)
    i = 0
    while i < len(circuit):
        x = circuit[i]
        if down_rem[x] > 0 or (
            child_ptr[x] < child_start[x + 1]
            and any(up_rem[child_flat[p]]
                    for p in range(child_ptr[x], child_start[x + 1]))
        ):
            circuit[i:i + 1] = walk_from(x)
        else:
            i += 1
    if any(up_rem) or any(down_rem):
        raise InvalidSolutionError("circuit did not use every arc")

    labels = hg.labels
    level_of = hg.level_of
    out: list[str] = []
    visit: list[int] = []
    seen: set[int] = set()
    input_index = hg.input_index_of
    for prev, cur in zip(circuit, circuit[1:]):
        if level_of[cur] == level_of[prev] + 1:
            out.append(labels[cur][-1])
        idx = input_index.get(cur)
        if idx is not None and cur not in seen:
            seen.add(cur)
            visit.append(idx)
    return Spelling("".join(out), tuple(visit))
