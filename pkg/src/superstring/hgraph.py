"""The hierarchical graph over all substrings of an input set.

Vertices are the empty string plus every substring of every input. Each
non-empty vertex v carries one up-arc (pref1(v), v) of weight 1 and one
down-arc (v, suff1(v)) of weight 0, so an arc multiset is fully described
by two counters per vertex (see solutions.ArcMultiset).

Vertices are numbered by (level ascending, lexicographic within level);
vertex 0 is the empty string. Vertices of one level therefore occupy a
contiguous id range, and id order within a level is lexicographic order.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .strings import InputSet


class KernelArrays:
    """C-friendly view of a hierarchical graph for the compiled kernels."""

    __slots__ = (
        "pref", "suff", "level_of", "level_start", "is_input", "inputs",
        "child_start", "child_flat", "parent_start", "parent_flat",
    )

    def __init__(self, hg: "HierarchicalGraph") -> None:
        n = len(hg.labels)
        self.pref = np.array(hg.pref, dtype=np.int32)
        self.suff = np.array(hg.suff, dtype=np.int32)
        self.level_of = np.array(hg.level_of, dtype=np.int32)
        self.level_start = np.array(hg.level_start, dtype=np.int32)
        self.is_input = np.zeros(n, dtype=np.uint8)
        self.is_input[hg.input_vids] = 1
        self.inputs = np.array(hg.input_vids, dtype=np.int32)
        child_counts = np.zeros(n + 1, dtype=np.int32)
        parent_counts = np.zeros(n + 1, dtype=np.int32)
        for v in range(1, n):
            child_counts[hg.pref[v] + 1] += 1
            parent_counts[hg.suff[v] + 1] += 1
        self.child_start = np.cumsum(child_counts, dtype=np.int32)
        self.parent_start = np.cumsum(parent_counts, dtype=np.int32)
        self.child_flat = np.empty(n - 1, dtype=np.int32)
        self.parent_flat = np.empty(n - 1, dtype=np.int32)
        cpos = self.child_start[:-1].copy()
        ppos = self.parent_start[:-1].copy()
        for v in range(1, n):  # ascending v keeps each list lex-sorted
            p = hg.pref[v]
            self.child_flat[cpos[p]] = v
            cpos[p] += 1
            s = hg.suff[v]
            self.parent_flat[ppos[s]] = v
            ppos[s] += 1


class HierarchicalGraph:
    """Immutable-by-convention graph; build once per input set."""

    __slots__ = (
        "inputs", "labels", "index", "level_of", "pref", "suff",
        "level_start", "max_level", "input_vids", "input_index_of", "_arrays",
    )

    def __init__(self, inputs: InputSet) -> None:
        self.inputs = inputs
        subs: set[str] = set()
        for s in inputs:
            for i in range(len(s)):
                for j in range(i + 1, len(s) + 1):
                    subs.add(s[i:j])
        self.labels: list[str] = [""] + sorted(subs, key=lambda x: (len(x), x))
        self.index: dict[str, int] = {s: v for v, s in enumerate(self.labels)}
        self.level_of: list[int] = [len(s) for s in self.labels]
        self.pref: list[int] = [-1] * len(self.labels)
        self.suff: list[int] = [-1] * len(self.labels)
        for v in range(1, len(self.labels)):
            s = self.labels[v]
            self.pref[v] = self.index[s[:-1]]
            self.suff[v] = self.index[s[1:]]
        self.max_level = self.level_of[-1] if len(self.labels) > 1 else 0
        self.level_start: list[int] = [0] * (self.max_level + 2)
        for v, lvl in enumerate(self.level_of):
            self.level_start[lvl + 1] = v + 1
        # levels are contiguous (every prefix of a substring is a substring)
        self.input_vids: list[int] = [self.index[s] for s in inputs]
        self.input_index_of: dict[int, int] = {
            v: i for i, v in enumerate(self.input_vids)
        }
        self._arrays: KernelArrays | None = None

    def __len__(self) -> int:
        return len(self.labels)

    def vid(self, s: str) -> int:
        """Vertex id of a substring; KeyError if absent."""
        return self.index[s]

    def vertices_at_level(self, level: int) -> range:
        """Vertex ids of one level, in lexicographic order."""
        if not 0 <= level <= self.max_level:
            raise ValueError(f"level {level} out of range 0..{self.max_level}")
        return range(self.level_start[level], self.level_start[level + 1])

    def is_input_vid(self, v: int) -> bool:
        return v in self.input_index_of

    def children_of(self, v: int) -> list[int]:
        """Vertices one level up whose longest proper prefix is v, lex order."""
        a = self.arrays()
        return a.child_flat[a.child_start[v]:a.child_start[v + 1]].tolist()

    def parents_of(self, v: int) -> list[int]:
        """Vertices one level up whose longest proper suffix is v, lex order."""
        a = self.arrays()
        return a.parent_flat[a.parent_start[v]:a.parent_start[v + 1]].tolist()

    def arrays(self) -> KernelArrays:
        if self._arrays is None:
            self._arrays = KernelArrays(self)
        return self._arrays


def build_graph(inputs: InputSet | Sequence[str]) -> HierarchicalGraph:
    if not isinstance(inputs, InputSet):
        inputs = InputSet(tuple(inputs))
    return HierarchicalGraph(inputs)
