"""Core string operations: overlaps, merges, and substring-free input sets.

Strings are compared symbol-wise by byte order, so plain ``str`` comparison
gives the lexicographic order used throughout (a proper prefix sorts before
the longer string).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


def _failure(x: str) -> list[int]:
    """Border array: f[i] = length of the longest proper border of x[:i+1]."""
    f = [0] * len(x)
    k = 0
    for i in range(1, len(x)):
        c = x[i]
        while k and x[k] != c:
            k = f[k - 1]
        if x[k] == c:
            k += 1
        f[i] = k
    return f


def _separator(s: str, t: str) -> str:
    seen = set(s) | set(t)
    code = 0
    while chr(code) in seen:
        code += 1
    return chr(code)


def overlap_len(s: str, t: str) -> int:
    """Length of the longest suffix of s that is also a prefix of t.

    Literal definition with no properness cap: overlap_len(s, s) == len(s)
    whenever s is non-empty.
    """
    if not s or not t:
        return 0
    # Border trick: the longest border of t+sep+s cannot cross the separator,
    # so it is exactly the longest suffix of s matching a prefix of t.
    return _failure(t + _separator(s, t) + s)[-1]


def overlap(s: str, t: str) -> str:
    """The longest suffix of s that is also a prefix of t."""
    k = overlap_len(s, t)
    return s[len(s) - k :] if k else ""


def self_overlap_len(s: str) -> int:
    """Length of the longest proper border of s (suffix = prefix, < len(s))."""
    if len(s) < 2:
        return 0
    return _failure(s)[-1]


def pref_pair(s: str, t: str) -> str:
    """s with its overlap with t removed from the right."""
    return s[: len(s) - overlap_len(s, t)]


def suff_pair(s: str, t: str) -> str:
    """t with its overlap with s removed from the left."""
    return t[overlap_len(s, t) :]


def pref1(s: str) -> str:
    """Drop the last symbol."""
    if not s:
        raise ValueError("pref1 of the empty string")
    return s[:-1]


def suff1(s: str) -> str:
    """Drop the first symbol."""
    if not s:
        raise ValueError("suff1 of the empty string")
    return s[1:]


def merge(s: str, t: str) -> str:
    """Shortest string with prefix s and suffix t: pref_pair(s, t) + t."""
    return pref_pair(s, t) + t


def check_permutation(n: int, order: Sequence[int]) -> tuple[int, ...]:
    """Validate that order is a bijection on range(n); return it as a tuple."""
    perm = tuple(order)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of range({n}): {perm!r}")
    return perm


def permutation_length(strings: Sequence[str], order: Sequence[int]) -> int:
    """Length of the superstring obtained by overlapping strings in order."""
    perm = check_permutation(len(strings), order)
    total = sum(len(strings[i]) for i in perm)
    for a, b in zip(perm, perm[1:]):
        total -= overlap_len(strings[a], strings[b])
    return total


@dataclass(frozen=True)
class InputSet:
    """An ordered, substring-free set of non-empty strings.

    The alphabet is inferred from the strings and ordered by byte value.
    Construction validates all invariants; use reduce_substring_free to
    build one from raw, possibly redundant strings.
    """

    strings: tuple[str, ...]
    alphabet: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.strings:
            raise ValueError("input set is empty")
        seen: set[str] = set()
        for s in self.strings:
            if not s:
                raise ValueError("input set contains an empty string")
            if s in seen:
                raise ValueError(f"duplicate input string {s!r}")
            seen.add(s)
        for s in self.strings:
            for t in self.strings:
                if s is not t and s in t:
                    raise ValueError(f"{s!r} is a substring of {t!r}")
        derived = tuple(sorted({c for s in self.strings for c in s}))
        if not self.alphabet:
            object.__setattr__(self, "alphabet", derived)
        elif set(derived) - set(self.alphabet):
            raise ValueError("strings use symbols outside the alphabet")

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self):
        return iter(self.strings)

    def __getitem__(self, i: int) -> str:
        return self.strings[i]


def reduce_substring_free(raw: Iterable[str]) -> InputSet:
    """Drop duplicates and strings contained in another; keep input order.

    Raises ValueError if nothing survives (empty input).
    """
    items = list(raw)
    kept: list[str] = []
    for s in items:
        if not s or s in kept:
            continue
        if any(s != t and s in t for t in items):
            continue
        kept.append(s)
    if not kept:
        raise ValueError("no strings left after substring reduction")
    return InputSet(tuple(kept))
