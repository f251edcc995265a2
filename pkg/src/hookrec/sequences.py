"""Exact values of S_{k,l}^{(z)}(n), the sum of (f^lambda)^z over the (k, l) hook.

Two routes are provided.  :func:`compute_S` enumerates the hook partitions of
a single ``n`` and applies the hook-length formula to each.  :func:`compute_series`
walks Young's lattice level by level, obtaining every f^lambda as the sum of
f over the shapes one cell smaller; this is much faster for long prefixes and
the two routes are cross-checked in the tests.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import polys
from .shapes import HookConstraint, conjugate, enumerate_hook_partitions, syt_count


@dataclass(frozen=True)
class SequenceRecord:
    k: int
    l: int
    z: int
    start: int
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(t) for t in self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def stop(self) -> int:
        """One past the last stored index."""
        return self.start + len(self.terms)

    def __getitem__(self, n: int) -> int:
        if not self.start <= n < self.stop:
            raise IndexError(f"term {n} not stored (have {self.start}..{self.stop - 1})")
        return self.terms[n - self.start]

    def head(self, count: int) -> "SequenceRecord":
        return SequenceRecord(self.k, self.l, self.z, self.start, self.terms[:count])

    def window(self, lo: int, hi: int) -> "SequenceRecord":
        """Terms with ``lo <= n < hi``."""
        lo = max(lo, self.start)
        return SequenceRecord(self.k, self.l, self.z, lo, self.terms[lo - self.start : hi - self.start])


def from_terms(terms: Iterable[int], start: int = 0) -> SequenceRecord:
    """Wrap an arbitrary integer sequence (not tied to a hook) in a record."""
    return SequenceRecord(-1, -1, 1, start, tuple(terms))


def _check(k: int, l: int, z: int) -> None:
    if z <= 0 or int(z) != z:
        raise ValueError(f"z must be a positive integer, got {z!r}")
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")


def compute_S(k: int, l: int, z: int, n: int) -> int:
    """Sum of ``syt_count(shape) ** z`` over the hook partitions of ``n``."""
    _check(k, l, z)
    return sum(syt_count(p) ** z for p in enumerate_hook_partitions(n, HookConstraint(k, l)))


# Young's lattice restricted to the hook.  A shape is keyed by its first k rows
# (zero padded) followed by the column lengths of the part below row k, which
# has at most l columns.  The key therefore has fixed length k + l.

def _key(parts: Sequence[int], k: int, l: int) -> tuple[int, ...]:
    rows = tuple(parts[:k]) + (0,) * max(0, k - len(parts))
    cols = conjugate(parts[k:])
    return rows + cols + (0,) * (l - len(cols))


def _successors(key: tuple[int, ...], k: int, l: int) -> Iterator[tuple[int, ...]]:
    for i in range(k):
        if i == 0 or key[i - 1] > key[i]:
            yield key[:i] + (key[i] + 1,) + key[i + 1 :]
    for j in range(l):
        c = key[k + j]
        if j > 0 and key[k + j - 1] <= c:
            continue
        if c == 0 and k > 0 and key[k - 1] <= j:
            continue
        yield key[: k + j] + (c + 1,) + key[k + j + 1 :]


def hook_levels(k: int, l: int, n_max: int, n_min: int = 0) -> Iterator[dict[tuple[int, ...], int]]:
    """Yield ``{shape key: f^shape}`` for each level ``n_min..n_max``.

    The first level is seeded by direct enumeration with the hook-length
    formula so that a cached prefix can be extended without restarting at 0.
    """
    level = {_key(p, k, l): syt_count(p) for p in enumerate_hook_partitions(n_min, HookConstraint(k, l))}
    for n in range(n_min, n_max + 1):
        yield level
        if n == n_max:
            return
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for key, f in level.items():
            for succ in _successors(key, k, l):
                nxt[succ] += f
        level = nxt


def power_sums(k: int, l: int, zs: Sequence[int], n_max: int, n_min: int = 0) -> dict[int, list[int]]:
    """Values of S for several exponents at once, sharing one lattice walk."""
    for z in zs:
        _check(k, l, z)
    out: dict[int, list[int]] = {z: [] for z in zs}
    for level in hook_levels(k, l, n_max, n_min):
        for z in zs:
            out[z].append(sum(f**z for f in level.values()) if z != 1 else sum(level.values()))
    return out


def compute_series(k: int, l: int, z: int, n_max: int) -> SequenceRecord:
    """Terms for ``n = 0..n_max``."""
    _check(k, l, z)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return SequenceRecord(k, l, z, 0, tuple(power_sums(k, l, [z], n_max)[z]))


def extend_series(seq: SequenceRecord, n_max: int) -> SequenceRecord:
    """Directly compute further terms of a hook sequence, continuing from ``seq``."""
    if n_max < seq.stop:
        return seq
    more = power_sums(seq.k, seq.l, [seq.z], n_max, seq.stop)[seq.z]
    return SequenceRecord(seq.k, seq.l, seq.z, seq.start, seq.terms + tuple(more))


class RecurrenceError(ArithmeticError):
    """A recurrence could not produce the next term."""


def extend_via_recurrence(seq: SequenceRecord, op, n_target: int) -> SequenceRecord:
    """Extend ``seq`` up to index ``n_target`` by solving the recurrence for its top term.

    ``A(n+L) = -(sum_{i<L} p_i(n) A(n+i)) / p_L(n)``; every quotient must be an
    exact integer, otherwise the operator is wrong for this sequence.
    """
    L = op.order
    if len(seq) < L:
        raise ValueError(f"need at least {L} terms to run an order-{L} recurrence")
    terms = list(seq.terms)
    coeffs = op.coeffs
    for n in range(max(seq.start, op.valid_from), seq.stop - L):
        if sum(polys.evaluate(coeffs[i], n) * terms[n - seq.start + i] for i in range(L + 1)):
            raise RecurrenceError(f"operator does not annihilate the given terms at n={n}")
    while seq.start + len(terms) <= n_target:
        n = seq.start + len(terms) - L
        lead = polys.evaluate(coeffs[L], n)
        if lead == 0:
            raise RecurrenceError(f"leading coefficient vanishes at n={n}")
        acc = sum(polys.evaluate(coeffs[i], n) * terms[n - seq.start + i] for i in range(L))
        q, r = divmod(-acc, lead)
        if r:
            raise RecurrenceError(f"non-integral term at n={n + L}: {-acc}/{lead}")
        terms.append(q)
    return SequenceRecord(seq.k, seq.l, seq.z, seq.start, tuple(terms))
