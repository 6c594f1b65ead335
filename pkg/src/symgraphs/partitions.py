"""Integer partitions and compositions, with the bookkeeping the series layer needs.

A partition is a tuple of positive ints in weakly decreasing order; the empty
tuple is the unique partition of 0.  A composition is an ordered tuple.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def is_partition(seq: Iterable[int]) -> bool:
    """True if seq is a weakly decreasing tuple of positive ints."""
    t = tuple(seq)
    return all(isinstance(p, int) and p >= 1 for p in t) and all(
        t[i] >= t[i + 1] for i in range(len(t) - 1)
    )


def canonicalize(seq: Iterable[int]) -> Partition:
    """Sort into weakly decreasing order, validating positivity."""
    t = tuple(sorted(seq, reverse=True))
    if t and t[-1] < 1:
        raise ValueError(f"partition parts must be >= 1, got {t}")
    return t


def weight(part: Partition) -> int:
    return sum(part)


def sort_key(part: Partition) -> tuple[int, tuple[int, ...]]:
    """Canonical term order: weight ascending, then lexicographic descending."""
    return (sum(part), tuple(-p for p in part))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, largest-first-part first (lexicographic descending)."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(remaining: int, cap: int, prefix: Partition) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(n, n, ())


def partitions_with_parts_in(n: int, allowed: Iterable[int]) -> Iterator[Partition]:
    """Partitions of n using only parts from `allowed`, lexicographic descending."""
    if n < 0:
        raise ValueError("n must be >= 0")
    pool = {int(s) for s in allowed}
    if not pool:
        raise ValueError("allowed parts must be non-empty")
    if any(s < 1 for s in pool):
        raise ValueError("allowed parts must be >= 1")
    parts = sorted((s for s in pool if s <= n), reverse=True)

    def rec(remaining: int, start: int, prefix: Partition) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        for idx in range(start, len(parts)):
            p = parts[idx]
            if p <= remaining:
                yield from rec(remaining - p, idx, prefix + (p,))

    yield from rec(n, 0, ())


def compositions_with_parts_in(n: int, allowed: Iterable[int]) -> Iterator[Composition]:
    """Ordered tuples with entries from `allowed` summing to n, lexicographic ascending."""
    if n < 0:
        raise ValueError("n must be >= 0")
    pool = {int(s) for s in allowed}
    if not pool:
        raise ValueError("allowed parts must be non-empty")
    if any(s < 1 for s in pool):
        raise ValueError("allowed parts must be >= 1")
    parts = sorted(s for s in pool if s <= n)

    def rec(remaining: int, prefix: Composition) -> Iterator[Composition]:
        if remaining == 0:
            yield prefix
            return
        for p in parts:
            if p <= remaining:
                yield from rec(remaining - p, prefix + (p,))

    yield from rec(n, ())


def to_power_notation(part: Partition) -> dict[int, int]:
    """Map each part value to its multiplicity."""
    out: dict[int, int] = {}
    for p in part:
        out[p] = out.get(p, 0) + 1
    return out


def from_power_notation(powers: dict[int, int]) -> Partition:
    """Inverse of to_power_notation; drops zero multiplicities."""
    parts: list[int] = []
    for value, mult in powers.items():
        if mult < 0 or value < 1:
            raise ValueError(f"bad power notation entry {value}^{mult}")
        parts.extend([value] * mult)
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def z_of(part: Partition) -> int:
    """Size of the centralizer of a permutation with cycle type `part`.

    z_lambda = prod_i i^{n_i} * n_i! where n_i is the multiplicity of i.
    """
    if not is_partition(part):
        raise ValueError(f"not a partition: {part!r}")
    z = 1
    for value, mult in to_power_notation(part).items():
        z *= value**mult * factorial(mult)
    return z
