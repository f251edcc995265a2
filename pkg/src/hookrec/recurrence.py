"""Guessing linear recurrences with polynomial coefficients from initial terms.

An operator ``sum_i p_i(n) N^i`` annihilates ``A`` when
``sum_i p_i(n) A(n+i) = 0``.  Guessing sets up one linear equation per
available ``n`` in the unknown coefficients of the ``p_i`` and reads a
candidate off the exact kernel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

from . import polys
from .linalg import nullspace
from .sequences import SequenceRecord, from_terms

DEFAULT_L_MAX = 8
DEFAULT_D_MAX = 8
DEFAULT_SURPLUS = 10
DEFAULT_HOLDOUT = 20


class InsufficientTermsError(ValueError):
    pass


@dataclass(frozen=True)
class RecurrenceOperator:
    """``coeffs[i]`` holds p_i as integer coefficients, lowest degree first."""

    coeffs: tuple[tuple[int, ...], ...]
    valid_from: int = 0

    def __post_init__(self):
        cs = tuple(polys.trim(int(c) for c in p) for p in self.coeffs)
        if len(cs) < 2 or not cs[-1]:
            raise ValueError("operator needs order >= 1 and a nonzero leading polynomial")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(polys.degree(p) for p in self.coeffs)

    def total_degree(self) -> int:
        return sum(max(polys.degree(p), 0) for p in self.coeffs)

    def max_bits(self) -> int:
        return max(abs(c).bit_length() for p in self.coeffs for c in p)

    def same_as(self, other: "RecurrenceOperator") -> bool:
        """Equality of canonical forms, ignoring ``valid_from``."""
        return canonicalize(self).coeffs == canonicalize(other).coeffs

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[str(c) for c in p] for p in self.coeffs],
            "valid_from": self.valid_from,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "RecurrenceOperator":
        if isinstance(data, str):
            data = json.loads(data)
        op = cls(tuple(tuple(int(c) for c in p) for p in data["coeffs"]), int(data.get("valid_from", 0)))
        if "order" in data and int(data["order"]) != op.order:
            raise ValueError(f"order field {data['order']} disagrees with {op.order} coefficient lists")
        return op


def render(op: RecurrenceOperator, var: str = "n") -> str:
    pieces = []
    for i, p in enumerate(op.coeffs):
        if not p:
            continue
        shift = "" if i == 0 else ("N" if i == 1 else f"N^{i}")
        nonzero = [c for c in p if c]
        if len(nonzero) == 1 and polys.degree(p) == 0:
            c = p[0]
            if shift and abs(c) == 1:
                body, neg = shift, c < 0
            else:
                body, neg = f"{abs(c)}" + (f"*{shift}" if shift else ""), c < 0
        else:
            lead = p[-1]
            neg = lead < 0
            inner = polys.to_str(polys.scale(p, -1) if neg else p, var)
            body = f"({inner})" + (f"*{shift}" if shift else "")
        pieces.append(("-" if neg else "+", body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def canonicalize(op: RecurrenceOperator) -> RecurrenceOperator:
    """Remove the common polynomial factor and integer content; make p_L's leading coefficient positive."""
    common = reduce(polys.gcd_poly, (p for p in op.coeffs if p), ())
    parts = [polys.divmod_poly(p, common)[0] if p else () for p in op.coeffs]
    den = reduce(lcm, (Fraction(c).denominator for p in parts for c in p), 1)
    ints = [[int(Fraction(c) * den) for c in p] for p in parts]
    g = reduce(gcd, (c for p in ints for c in p), 0)
    if ints[-1][-1] < 0:
        g = -g
    return RecurrenceOperator(tuple(tuple(c // g for c in p) for p in ints), op.valid_from)


def apply(op: RecurrenceOperator, seq: SequenceRecord | Sequence[int], n: int) -> int:
    """``sum_i p_i(n) A(n+i)``; raises IndexError if a needed term is missing."""
    if not isinstance(seq, SequenceRecord):
        seq = from_terms(seq)
    return sum(polys.evaluate(p, n) * seq[n + i] for i, p in enumerate(op.coeffs))


def fitting_matrix(seq: SequenceRecord, L: int, D: int) -> list[list[int]]:
    """Rows ``n = start .. stop-L-1``; column ``i*(D+1)+d`` holds ``n^d A(n+i)``."""
    rows = []
    for n in range(seq.start, seq.stop - L):
        powers = [n**d for d in range(D + 1)]
        rows.append([pw * seq[n + i] for i in range(L + 1) for pw in powers])
    return rows


def _operator_from_vector(v: Sequence[int], L: int, D: int) -> RecurrenceOperator | None:
    cs = [tuple(v[i * (D + 1) : (i + 1) * (D + 1)]) for i in range(L + 1)]
    while cs and not any(cs[-1]):
        cs.pop()
    if len(cs) < 2:
        return None
    return RecurrenceOperator(tuple(cs))


def first_valid_index(op: RecurrenceOperator, seq: SequenceRecord) -> int | None:
    """Smallest ``m`` such that the relation holds at every checkable ``n >= m``."""
    last = seq.stop - op.order - 1
    m = last + 1
    for n in range(last, seq.start - 1, -1):
        if apply(op, seq, n):
            break
        m = n
    return m if m <= last else None


def singular_indices(p: Sequence[int], start: int = 0) -> list[int]:
    """Integer roots ``n >= start`` of ``p`` (for a leading coefficient: where the recurrence stalls)."""
    return sorted(int(r) for r in polys.rational_roots(p) if r.denominator == 1 and r >= start)


def is_regular(op: RecurrenceOperator, start: int = 0) -> bool:
    """True if ``p_L(n) != 0`` for every integer ``n >= start``."""
    return not singular_indices(op.coeffs[-1], start)


def _pick(ops: list[RecurrenceOperator]) -> RecurrenceOperator:
    return min(ops, key=lambda o: (o.order, o.total_degree(), o.max_bits(), o.coeffs))


def _fit_window(
    seq: SequenceRecord, L_max: int, D_max: int, surplus: int, require_regular: bool
) -> RecurrenceOperator | None:
    for L in range(1, L_max + 1):
        equations = len(seq) - L
        for D in range(D_max + 1):
            if equations - (L + 1) * (D + 1) < surplus:
                break
            kernel = nullspace(fitting_matrix(seq, L, D))
            ops = [o for o in (_operator_from_vector(v, L, D) for v in kernel) if o is not None]
            ops = [canonicalize(o) for o in ops if o.order == L]
            if not ops:
                continue
            if not require_regular:
                return _pick(ops)
            regular = [o for o in ops if is_regular(o, seq.start)]
            if not regular:
                sums = (canonicalize(RecurrenceOperator(tuple(polys.add(p, q) for p, q in zip(a.coeffs, b.coeffs))))
                        for i, a in enumerate(ops) for b in ops[i + 1 :])
                regular = [o for o in sums if is_regular(o, seq.start)]
            if regular:
                return _pick(regular)
    return None


def fit_recurrence(
    seq: SequenceRecord | Sequence[int],
    L_max: int = DEFAULT_L_MAX,
    D_max: int = DEFAULT_D_MAX,
    surplus: int = DEFAULT_SURPLUS,
    require_regular: bool = True,
) -> RecurrenceOperator | None:
    """Lowest-order (then lowest-degree) operator annihilating every given term.

    With ``require_regular`` (the default) an operator is only accepted if its
    leading coefficient has no integer root at or beyond the first term, so
    that it can regenerate the whole sequence from its initial values.  Minimal
    order annihilators often carry such a root; the search then moves on to
    higher order.

    Tries the terms as given first and, failing that, once more without the
    first term.  The returned operator's ``valid_from`` is the smallest index
    from which it holds on the supplied terms.
    """
    if not isinstance(seq, SequenceRecord):
        seq = from_terms(seq)
    if len(seq) - 1 - 2 < surplus:
        raise InsufficientTermsError(
            f"{len(seq)} terms cannot give {surplus} surplus equations even for order 1, degree 0"
        )
    for lo in (seq.start, seq.start + 1):
        window = seq.window(lo, seq.stop)
        op = _fit_window(window, L_max, D_max, surplus, require_regular)
        if op is not None:
            return replace(op, valid_from=first_valid_index(op, seq))
    return None


@dataclass
class VerificationReport:
    passed: bool
    checked_from: int
    checked_to: int
    holdout_indices: int
    valid_from: int | None
    failures: list[int] = field(default_factory=list)

    @property
    def semi_rigorous(self) -> bool:
        return self.passed and self.holdout_indices > 0

    def summary(self) -> str:
        status = "PASS (semi-rigorously verified)" if self.semi_rigorous else ("PASS" if self.passed else "FAIL")
        text = (
            f"{status}: relation checked for n={self.checked_from}..{self.checked_to}, "
            f"{self.holdout_indices} of them reaching held-out terms; valid from n={self.valid_from}"
        )
        if self.failures:
            text += f"; first failure at n={self.failures[0]}"
        return text

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "semi_rigorous": self.semi_rigorous,
            "checked_from": self.checked_from,
            "checked_to": self.checked_to,
            "holdout_indices": self.holdout_indices,
            "valid_from": self.valid_from,
            "failures": self.failures,
        }


def verify(op: RecurrenceOperator, seq: SequenceRecord | Sequence[int], holdout: int = DEFAULT_HOLDOUT) -> VerificationReport:
    """Check the relation at every index the terms allow.

    The last ``holdout`` terms of ``seq`` are treated as out of sample; relation
    indices whose top term falls among them are counted in ``holdout_indices``.
    Passing means no failure at any ``n >= op.valid_from``.
    """
    if not isinstance(seq, SequenceRecord):
        seq = from_terms(seq)
    L = op.order
    hi = seq.stop - L - 1
    lo = seq.start
    failures = [n for n in range(lo, hi + 1) if apply(op, seq, n)]
    relevant = [n for n in failures if n >= op.valid_from]
    holdout_start = seq.stop - holdout
    held = sum(1 for n in range(max(lo, op.valid_from), hi + 1) if n + L >= holdout_start)
    return VerificationReport(
        passed=not relevant and hi >= lo,
        checked_from=lo,
        checked_to=hi,
        holdout_indices=held,
        valid_from=first_valid_index(op, seq),
        failures=failures,
    )


def characteristic_polynomial(op: RecurrenceOperator) -> tuple[int, ...]:
    """Coefficients (lowest power first) of ``sum_i [n^d] p_i * mu^i`` with ``d`` the top degree."""
    d = op.degree
    return polys.trim(p[d] if len(p) > d else 0 for p in op.coeffs)
