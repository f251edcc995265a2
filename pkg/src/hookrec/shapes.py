"""Partitions in the (k, l) hook and exact counts of standard Young tableaux.

A partition is represented as a plain tuple of weakly decreasing positive
integers; ``()`` is the unique partition of 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]

BRUTEFORCE_MAX_N = 10


class SizeLimitError(ValueError):
    """Raised when a brute-force routine is asked for a shape that is too big."""


@dataclass(frozen=True)
class HookConstraint:
    """At most ``k`` rows of arbitrary length, every later row of length <= ``l``."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError(f"hook parameters must be nonnegative, got ({self.k}, {self.l})")

    def admits(self, parts: Sequence[int]) -> bool:
        return len(parts) <= self.k or parts[self.k] <= self.l


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` with parts <= ``max_part``, reverse lexicographic."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def enumerate_hook_partitions(n: int, c: HookConstraint) -> Iterator[Partition]:
    """Yield every partition of ``n`` lying in the hook ``c``, reverse lexicographic.

    The first ``k`` rows are chosen freely (subject to weak decrease); once row
    ``k + 1`` is reached the remaining cells form a partition with parts bounded
    by ``min(l, previous row)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rows(remaining: int, bound: int, index: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if index >= c.k:
            yield from partitions(remaining, min(bound, c.l))
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rows(remaining - first, first, index + 1):
                yield (first,) + rest

    yield from rows(n, n, 0)


def conjugate(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def hook_lengths(parts: Sequence[int]) -> list[list[int]]:
    """Hook length of every cell, row by row: ``arm + leg + 1``."""
    cols = conjugate(parts)
    return [[row - j + cols[j] - i - 1 for j in range(row)] for i, row in enumerate(parts)]


def syt_count(parts: Sequence[int]) -> int:
    """Number of standard Young tableaux of the given shape (hook-length formula)."""
    n = sum(parts)
    denom = prod(h for row in hook_lengths(parts) for h in row)
    count, rem = divmod(factorial(n), denom)
    if rem:
        raise ArithmeticError(f"hook product {denom} does not divide {n}! for shape {tuple(parts)}")
    return count


def syt_count_frobenius(parts: Sequence[int]) -> int:
    """Same count via the Young-Frobenius product over shifted parts."""
    m = len(parts)
    n = sum(parts)
    shifted = [p + m - i - 1 for i, p in enumerate(parts)]
    num = factorial(n) * prod(
        shifted[i] - shifted[j] for i in range(m) for j in range(i + 1, m)
    )
    count, rem = divmod(num, prod(factorial(s) for s in shifted))
    if rem:
        raise ArithmeticError(f"Frobenius formula inexact for shape {tuple(parts)}")
    return count


def syt_count_bruteforce(parts: Sequence[int]) -> int:
    """Count tableaux by placing 1..n one at a time into every admissible cell.

    Entry ``v`` must go at the end of a row whose row above is already longer,
    which is exactly the row- and column-increasing condition.  Every complete
    placement is one tableau, so the count is exhaustive rather than formulaic.
    """
    shape = tuple(parts)
    n = sum(shape)
    if n > BRUTEFORCE_MAX_N:
        raise SizeLimitError(f"brute-force enumeration limited to n <= {BRUTEFORCE_MAX_N}, got {n}")
    filled = [0] * len(shape)

    def place(v: int) -> int:
        if v > n:
            return 1
        total = 0
        for i, length in enumerate(filled):
            if length < shape[i] and (i == 0 or filled[i - 1] > length):
                filled[i] += 1
                total += place(v + 1)
                filled[i] -= 1
        return total

    return place(1)


def in_hook(parts: Sequence[int], k: int, l: int) -> bool:
    return HookConstraint(k, l).admits(parts)
