"""Exact references: brute force on small instances, closed special cases."""

from __future__ import annotations

import itertools

from .strings import InputSet, overlap_len, self_overlap_len


class TooLargeError(ValueError):
    """Instance exceeds the configured brute-force limit."""


def brute_optimal(inputs: InputSet, *, limit: int = 9,
                  prune: bool = True) -> tuple[int, tuple[int, ...]]:
    """Exact optimum over permutations; ties go to the lexicographically
    smallest permutation of input indices.

    Branch-and-bound pruning never changes the result (each unplaced string
    can save at most its best incoming overlap); prune=False disables it
    for auditing.
    """
    n = len(inputs)
    if n > limit:
        raise TooLargeError(f"{n} strings exceeds brute-force limit {limit}")
    lens = [len(s) for s in inputs]
    ov = [[overlap_len(s, t) for t in inputs] for s in inputs]
    max_in = [
        max((ov[j][i] for j in range(n) if j != i), default=0)
        for i in range(n)
    ]
    best_len = sum(lens) + 1
    best_perm: tuple[int, ...] = ()
    path = [0] * n

    def rest_bound(used: int) -> int:
        saved = 0
        for i in range(n):
            if not used & (1 << i):
                saved += lens[i] - max_in[i]
        return saved

    def dfs(depth: int, last: int, used: int, cur: int) -> None:
        nonlocal best_len, best_perm
        if depth == n:
            if cur < best_len:
                best_len = cur
                best_perm = tuple(path)
            return
        if prune and cur + max(rest_bound(used), n - depth) >= best_len:
            return
        for i in range(n):
            if used & (1 << i):
                continue
            path[depth] = i
            add = lens[i] if last < 0 else lens[i] - ov[last][i]
            dfs(depth + 1, i, used | (1 << i), cur + add)

    dfs(0, -1, 0, 0)
    return best_len, best_perm


def brute_optimal_cycle_cover(inputs: InputSet, *, limit: int = 8) -> int:
    """Exact optimal cycle cover length over all bijections.

    A fixed point closes a string on itself, overlapping its longest proper
    border; a k-cycle spells a cyclic string over its members.
    """
    n = len(inputs)
    if n > limit:
        raise TooLargeError(f"{n} strings exceeds cycle-cover limit {limit}")
    lens = [len(s) for s in inputs]
    ov = [[overlap_len(s, t) for t in inputs] for s in inputs]
    self_ov = [self_overlap_len(s) for s in inputs]
    best = None
    for sigma in itertools.permutations(range(n)):
        total = 0
        for i, j in enumerate(sigma):
            total += lens[i] - (self_ov[i] if i == j else ov[i][j])
        if best is None or total < best:
            best = total
    return best


def two_scs_formula(inputs: InputSet) -> int:
    """Closed-form optimum for strings of length at most 2.

    Length-1 strings are isolated symbols and add 1 each (through n). The
    length-2 strings form a digraph on symbols (string 'ab' is the arc
    a -> b, 'aa' a self-loop); each weakly connected component adds
    max(1, sum |indeg - outdeg| / 2).
    """
    if any(len(s) > 2 for s in inputs):
        raise ValueError("formula applies to strings of length <= 2 only")
    n = len(inputs)
    indeg: dict[str, int] = {}
    outdeg: dict[str, int] = {}
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in inputs:
        if len(s) != 2:
            continue
        a, b = s[0], s[1]
        for c in (a, b):
            parent.setdefault(c, c)
            indeg.setdefault(c, 0)
            outdeg.setdefault(c, 0)
        outdeg[a] += 1
        indeg[b] += 1
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    imbalance: dict[str, int] = {}
    for c in parent:
        imbalance.setdefault(find(c), 0)
        imbalance[find(c)] += abs(indeg[c] - outdeg[c])
    return n + sum(max(1, t // 2) for t in imbalance.values())


def spectrum(s: str, k: int) -> InputSet:
    """All length-k substrings of s, deduplicated, in first-occurrence order."""
    if not 1 <= k <= len(s):
        raise ValueError(f"k={k} out of range for a string of length {len(s)}")
    kmers = dict.fromkeys(s[i:i + k] for i in range(len(s) - k + 1))
    return InputSet(tuple(kmers))


def tough(n: int) -> InputSet:
    """A 3-string family where both greedy algorithms pay ~2x the optimum:
    cc(ae)^n, (ea)^(n+1), (ae)^n cc."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return InputSet(("cc" + "ae" * n, "ea" * (n + 1), "ae" * n + "cc"))
