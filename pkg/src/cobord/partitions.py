"""Partition combinatorics.

Partitions are plain tuples of positive ints, sorted non-increasing; the
empty tuple is the empty partition.  This module provides the refinement
order, multiset unions, the floor-sum weight ``pi_q``, the admissible
classes used by the higher-power Chern-number bound, and a deterministic
enumeration ordered so that the change-of-basis matrix in ``lazard`` is
lower triangular.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

Partition = Tuple[int, ...]


def make(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of positive ints into a partition tuple."""
    t = tuple(sorted(parts, reverse=True))
    if any(not isinstance(x, int) or x < 1 for x in t):
        raise ValueError(f"partition parts must be positive integers: {t!r}")
    return t


def weight(alpha: Partition) -> int:
    return sum(alpha)


def union(alpha: Partition, beta: Partition) -> Partition:
    """Multiset union; the weight is additive."""
    return tuple(sorted(alpha + beta, reverse=True))


def sort_key(alpha: Partition):
    """Total order within a weight: increasing length, then parts descending.

    Any order refining "sort by length" makes c_alpha(l_beta) lower
    triangular, because a strict refinement strictly increases length.
    """
    return (len(alpha), tuple(-x for x in alpha))


def full_key(alpha: Partition):
    """Global order across weights (weight, then the within-weight order)."""
    return (sum(alpha), len(alpha), tuple(-x for x in alpha))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of weight ``n``, sorted by :func:`sort_key`."""
    if n < 0:
        raise ValueError("weight must be nonnegative")

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n), key=sort_key))


def partitions_upto(n: int) -> tuple[Partition, ...]:
    """All partitions of weight at most ``n``, in the global order."""
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return tuple(out)


def _sub_multisets(alpha: Partition):
    """Distinct sub-multisets of ``alpha``, each paired with its complement.

    Parts are grouped by value so a sub-multiset is emitted exactly once.
    """
    distinct = []
    for x in alpha:
        if distinct and distinct[-1][0] == x:
            distinct[-1][1] += 1
        else:
            distinct.append([x, 1])

    def rec(idx, chosen, left):
        if idx == len(distinct):
            yield tuple(chosen), tuple(left)
            return
        val, count = distinct[idx]
        for take in range(count + 1):
            yield from rec(
                idx + 1, chosen + [val] * take, left + [val] * (count - take)
            )

    yield from rec(0, [], [])


@lru_cache(maxsize=None)
def refines(alpha: Partition, beta: Partition) -> bool:
    """True iff ``alpha``'s parts group into blocks summing to ``beta``'s parts.

    Exact multiset-partition search: peel off the largest part of ``beta``,
    try every distinct sub-multiset of ``alpha`` with that sum, recurse.
    """
    if sum(alpha) != sum(beta):
        return False
    if not beta:
        return not alpha
    target, rest = beta[0], beta[1:]
    seen = set()
    for chosen, left in _sub_multisets(alpha):
        if sum(chosen) != target or chosen in seen:
            continue
        seen.add(chosen)
        if refines(left, rest):
            return True
    return False


def pi_q(alpha: Partition, q: int) -> int:
    """Sum of ``floor(part / q)`` over the parts."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    return sum(x // q for x in alpha)


def in_admissible_class(alpha: Partition, p: int, r: int) -> bool:
    """True iff no sub-multiset of parts sums into ``{p-1, ..., p^(r-1)-1}``.

    Dynamic programming over achievable subset sums capped at
    ``p^(r-1) - 1``; always true for ``r <= 1`` (empty forbidden range).
    """
    if r <= 1:
        return True
    cap = p ** (r - 1) - 1
    lo = p - 1
    sums = {0}
    for part in alpha:
        if part > cap:
            continue
        sums |= {s + part for s in sums if s + part <= cap}
    return all(s < lo for s in sums if s)


def to_obj(alpha: Partition) -> list[int]:
    return list(alpha)


def from_obj(obj) -> Partition:
    if not isinstance(obj, list):
        raise ValueError(f"partition must be a JSON array of ints: {obj!r}")
    return make(obj)
