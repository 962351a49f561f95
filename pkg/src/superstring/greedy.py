"""The classical greedy superstring algorithm and a greedy-order verifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .rng import SplitMix64
from .strings import InputSet, check_permutation, merge, overlap_len

POLICY_KINDS = ("input-order", "lexicographic-pair", "seeded-random")


@dataclass(frozen=True)
class TieBreakPolicy:
    """How to pick among ordered pairs with maximal overlap.

    input-order: earliest pair position-wise in the working list (a merge
    result keeps the left operand's slot). lexicographic-pair: smallest
    (s, t) by string content. seeded-random: uniform choice from a
    SplitMix64 stream; requires a seed.
    """

    kind: str = "input-order"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"unknown tie-break policy {self.kind!r}")
        if self.kind == "seeded-random" and self.seed is None:
            raise ValueError("seeded-random requires a seed")

    @classmethod
    def parse(cls, text: str) -> "TieBreakPolicy":
        """Parse 'input-order', 'lexicographic-pair' or 'seeded-random:SEED'."""
        kind, _, seed = text.partition(":")
        if kind == "seeded-random":
            if not seed:
                raise ValueError("seeded-random requires a seed, e.g. seeded-random:42")
            return cls(kind, int(seed))
        if seed:
            raise ValueError(f"policy {kind!r} takes no seed")
        return cls(kind)


class GreedyResult(NamedTuple):
    superstring: str
    permutation: tuple[int, ...]


def ga(inputs: InputSet, policy: TieBreakPolicy = TieBreakPolicy()) -> GreedyResult:
    """Repeatedly merge an ordered pair with maximal overlap.

    Returns the final string and the induced permutation of the inputs; the
    string's length always equals permutation_length of that permutation.
    """
    items: list[tuple[str, tuple[int, ...]]] = [
        (s, (i,)) for i, s in enumerate(inputs)
    ]
    rng = SplitMix64(policy.seed) if policy.kind == "seeded-random" else None
    while len(items) > 1:
        best = -1
        tied: list[tuple[int, int]] = []
        for i in range(len(items)):
            for j in range(len(items)):
                if i == j:
                    continue
                ov = overlap_len(items[i][0], items[j][0])
                if ov > best:
                    best = ov
                    tied = [(i, j)]
                elif ov == best:
                    tied.append((i, j))
        if policy.kind == "input-order":
            i, j = tied[0]  # pairs were generated in position order
        elif policy.kind == "lexicographic-pair":
            i, j = min(tied, key=lambda p: (items[p[0]][0], items[p[1]][0]))
        else:
            i, j = rng.choice(tied)
        s, s_idx = items[i]
        t, t_idx = items[j]
        items[i] = (merge(s, t), s_idx + t_idx)
        del items[j]
    superstring, perm = items[0]
    return GreedyResult(superstring, perm)


def verify_greedy_permutation(inputs: InputSet, perm) -> bool:
    """Whether some run of the greedy algorithm produces this permutation.

    Simulates merging neighbouring pairs of the ordered sequence: a merge is
    legal when its overlap matches the maximum over all ordered pairs of
    current strings. Ties among neighbouring pairs are explored by
    backtracking before answering False.
    """
    order = check_permutation(len(inputs), perm)
    failed: set[tuple[str, ...]] = set()

    def feasible(seq: tuple[str, ...]) -> bool:
        if len(seq) == 1:
            return True
        if seq in failed:
            return False
        global_max = max(
            overlap_len(seq[i], seq[j])
            for i in range(len(seq))
            for j in range(len(seq))
            if i != j
        )
        candidates = [
            k for k in range(len(seq) - 1)
            if overlap_len(seq[k], seq[k + 1]) == global_max
        ]
        for k in candidates:
            nxt = seq[:k] + (merge(seq[k], seq[k + 1]),) + seq[k + 2:]
            if feasible(nxt):
                return True
        failed.add(seq)
        return False

    return feasible(tuple(inputs[i] for i in order))
