"""Exact kernels and ranks of rational matrices.

Rows are scaled to integers up front and elimination stays fraction free: a
row update is ``a * row - b * pivot_row`` followed by division by the row
content, which keeps entries from growing without bound.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

# A prime just below 2**61; used only to skip exact work on full-rank systems.
_SCREEN_PRIME = 2305843009213693951


class RationalMatrix:
    """Dense matrix of Fractions, always stored in lowest terms."""

    def __init__(self, rows: Sequence[Sequence], cols: int | None = None):
        self.entries = [[Fraction(x) for x in row] for row in rows]
        self.rows = len(self.entries)
        self.cols = cols if cols is not None else (len(self.entries[0]) if self.entries else 0)
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def apply(self, v: Sequence) -> list[Fraction]:
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries]

    def integer_rows(self) -> list[list[int]]:
        out = []
        for row in self.entries:
            den = reduce(lcm, (x.denominator for x in row), 1)
            out.append([int(x * den) for x in row])
        return out

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def _as_matrix(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def _reduce_row(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    return [x // g for x in row] if g > 1 else row


def _rref(rows: list[list[int]], ncols: int, pivot: str = "smallest") -> tuple[list[list[int]], list[int]]:
    """Integer reduced row echelon form (each pivot row scaled, not normalised to 1).

    ``pivot`` selects the pivot row within a column: ``"smallest"`` takes the
    entry of least bit length, ``"first"`` the first nonzero one.
    """
    rows = [_reduce_row(list(r)) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        candidates = [i for i in range(r, len(rows)) if rows[i][col]]
        if not candidates:
            continue
        if pivot == "smallest":
            best = min(candidates, key=lambda i: (abs(rows[i][col]).bit_length(), i))
        elif pivot == "first":
            best = candidates[0]
        else:
            raise ValueError(f"unknown pivot policy {pivot!r}")
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        a = prow[col]
        for i in range(len(rows)):
            if i == r or not rows[i][col]:
                continue
            b = rows[i][col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            rows[i] = _reduce_row([fa * x - fb * y for x, y in zip(rows[i], prow)])
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rank_mod_p(rows: list[list[int]], ncols: int, p: int = _SCREEN_PRIME) -> int:
    rows = [[x % p for x in row] for row in rows]
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        prow = [x * inv % p for x in rows[r]]
        rows[r] = prow
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        r += 1
        if r == len(rows):
            break
    return r


def normalize_vector(v: Sequence) -> tuple[int, ...]:
    """Clear denominators, divide by content, make the first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def nullspace(m, pivot: str = "smallest", screen: bool = True) -> list[tuple[int, ...]]:
    """Basis of the right kernel, as primitive integer vectors.

    With ``screen`` set, a rank computation modulo a large prime runs first; a
    full rank there proves the kernel trivial and the exact elimination is
    skipped.  Every returned vector is checked exactly against ``m``.
    """
    m = _as_matrix(m)
    rows = m.integer_rows()
    if screen and m.rows >= m.cols and _rank_mod_p(rows, m.cols) == m.cols:
        return []
    ech, pivots = _rref(rows, m.cols, pivot)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, pc in zip(ech, pivots):
            v[pc] = Fraction(-row[f], row[pc])
        vec = normalize_vector(v)
        if any(m.apply(vec)):
            raise ArithmeticError("kernel vector failed exact check")
        basis.append(vec)
    return basis


def rank(m, pivot: str = "smallest") -> int:
    m = _as_matrix(m)
    return len(_rref(m.integer_rows(), m.cols, pivot)[1])


def shuffled_rank(m, seed: int = 0) -> int:
    """Rank after a random row permutation, with first-nonzero pivoting."""
    m = _as_matrix(m)
    rows = m.integer_rows()
    random.Random(seed).shuffle(rows)
    return len(_rref(rows, m.cols, "first")[1])
