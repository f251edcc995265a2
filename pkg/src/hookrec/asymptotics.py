"""Power-law asymptotic expansions of P-recursive sequences.

For a simple dominant root ``mu`` of the characteristic polynomial the
recurrence has a formal solution

    mu^n * n^theta * (1 + a_1/n + a_2/n^2 + ...)

whose exponent and coefficients are found exactly, one power of ``n`` at a
time.  The overall constant is not determined by the recurrence; it is
estimated numerically from a far-out term and then matched against simple
closed forms built from rationals, square roots and powers of pi.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

import mpmath

from . import polys
from .recurrence import RecurrenceOperator, characteristic_polynomial
from .sequences import SequenceRecord

log = logging.getLogger(__name__)

DEFAULT_ORDER = 10
DEFAULT_PRECISION_BITS = 256
DEFAULT_SEARCH_BOUND = 1000
MATCH_TOLERANCE = 1e-8
SQRT_PARTS = (1, 2, 3, 5, 6)
PI_EXPONENTS = tuple(Fraction(e, 2) for e in (-4, -3, -2, -1, 0, 1, 2))


class UnsupportedAsymptotics(ValueError):
    """The sequence falls outside the simple-rational-root power-law ansatz."""


@dataclass(frozen=True)
class AsymptoticExpansion:
    """``C mu^n n^theta (1 + sum_j a_j n^-j)``.

    ``companions`` holds the formal solutions for other roots of the same
    modulus (necessarily with smaller ``theta``).  They do not change the
    leading behaviour but oscillate at a relative size ``n^(theta' - theta)``,
    far above the truncation error, so constant estimation has to model them.
    """

    mu: Fraction
    theta: Fraction
    a: tuple[Fraction, ...]
    companions: tuple["AsymptoticExpansion", ...] = ()

    @property
    def J(self) -> int:
        return len(self.a)

    def scale(self, n: int):
        """``mu^n n^theta (1 + sum_j a_j n^-j)`` as an mpf at the current precision."""
        return _mpf(self.mu) ** n * mpmath.mpf(n) ** _mpf(self.theta) * self.correction(n)

    def correction(self, n):
        """``1 + sum_j a_j n^-j`` evaluated in whatever number type ``n`` has."""
        total = 1
        for j, c in enumerate(self.a, start=1):
            total += mpmath.mpf(c.numerator) / c.denominator / mpmath.mpf(n) ** j
        return total

    def __str__(self) -> str:
        series = " ".join(
            f"{'+' if c >= 0 else '-'} {abs(c)}/n^{j}" if j > 1 else f"{'+' if c >= 0 else '-'} {abs(c)}/n"
            for j, c in enumerate(self.a, start=1)
        )
        return f"C * {self.mu}^n * n^({self.theta}) * (1 {series})".replace("(1 )", "(1)")

    def to_json(self) -> dict:
        out = {"mu": str(self.mu), "theta": str(self.theta), "coeffs": [str(c) for c in self.a]}
        if self.companions:
            out["companions"] = [c.to_json() for c in self.companions]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AsymptoticExpansion":
        return cls(
            Fraction(data["mu"]),
            Fraction(data["theta"]),
            tuple(Fraction(c) for c in data["coeffs"]),
            tuple(cls.from_json(c) for c in data.get("companions", ())),
        )


@dataclass(frozen=True)
class ConstantCandidate:
    """``(p/q) * sqrt(m) * pi^pi_exp``."""

    p: int
    q: int
    m: int
    pi_exp: Fraction

    def value(self, prec: int = DEFAULT_PRECISION_BITS):
        with mpmath.workprec(prec):
            e = self.pi_exp
            return +(mpmath.mpf(self.p) / self.q * mpmath.sqrt(self.m) * mpmath.pi ** (mpmath.mpf(e.numerator) / e.denominator))

    def __str__(self) -> str:
        text = f"({self.p}/{self.q})"
        if self.m != 1:
            text += f"*sqrt({self.m})"
        if self.pi_exp:
            text += f"*pi^({self.pi_exp})"
        return text

    def to_json(self) -> dict:
        return {"p": str(self.p), "q": str(self.q), "m": self.m, "pi_exp": str(self.pi_exp)}

    @classmethod
    def from_json(cls, data: dict) -> "ConstantCandidate":
        return cls(int(data["p"]), int(data["q"]), int(data["m"]), Fraction(data["pi_exp"]))


@dataclass(frozen=True)
class ConstantEstimate:
    value: mpmath.mpf
    precision_bits: int
    at_n: int
    half_value: mpmath.mpf | None = None
    matched: ConstantCandidate | None = None
    companion_values: tuple = ()

    @property
    def drift(self):
        """Relative change between the estimates at ``at_n/2`` and ``at_n``."""
        if self.half_value is None:
            return None
        with mpmath.workprec(self.precision_bits):
            return abs(self.value / self.half_value - 1)

    def to_json(self) -> dict:
        digits = max(15, int(self.precision_bits * 0.30103) - 5)
        return {
            "value_decimal": mpmath.nstr(self.value, digits),
            "matched": self.matched.to_json() if self.matched else None,
        }


# --- dominant root -----------------------------------------------------------


def _roots_inside_disc(p: Sequence, radius: Fraction) -> bool:
    """Exact Schur-Cohn test: every root of ``p`` has modulus strictly below ``radius``."""
    q = [Fraction(c) * radius**i for i, c in enumerate(polys.trim(p))]
    while len(q) > 1:
        a0, ad = q[0], q[-1]
        if abs(a0) >= abs(ad):
            return False
        rev = q[::-1]
        q = list(polys.trim(ad * x - a0 * y for x, y in zip(q, rev)))[1:]
        if not q:
            return False
    return True


def _describe(p: Sequence) -> str:
    return polys.to_str(p, "mu")


def dominant_roots(cp: Sequence[int]) -> list[Fraction]:
    """Rational roots of largest modulus, after checking nothing else reaches that modulus.

    Returns one root, or the pair ``-r, r`` when two simple rational roots tie.
    Raises :class:`UnsupportedAsymptotics` when the largest modulus belongs to
    an irrational or complex root, or the dominant root is repeated.
    """
    cp = polys.trim(cp)
    if not cp:
        raise ValueError("characteristic polynomial is zero")
    if polys.degree(cp) < 1:
        # top-degree coefficients live only in p_0: growth like a power of n!
        raise UnsupportedAsymptotics("constant characteristic polynomial; growth is faster than exponential")
    roots = polys.rational_roots(cp)
    rest = polys.deflate(cp, roots)
    if not roots or max(abs(r) for r in roots) == 0:
        raise UnsupportedAsymptotics(f"no nonzero rational root; deflated factor {_describe(rest)}")
    R = max(abs(r) for r in roots)
    top = sorted(r for r in roots if abs(r) == R)
    for r in top:
        if roots[r] > 1:
            raise UnsupportedAsymptotics(f"dominant root {r} has multiplicity {roots[r]}")
    if polys.degree(rest) >= 1 and not _roots_inside_disc(rest, R):
        raise UnsupportedAsymptotics(
            f"deflated factor {_describe(rest)} has a root of modulus >= {R}; "
            "dominant root is not rational"
        )
    return top


def dominant_root(cp: Sequence[int]) -> Fraction:
    """The unique simple rational root of strictly largest modulus."""
    top = dominant_roots(cp)
    if len(top) > 1:
        raise UnsupportedAsymptotics(f"roots {top[0]} and {top[1]} tie in modulus")
    return top[0]


# --- formal expansion ----------------------------------------------------------


def _binom(x: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for r in range(m):
        out *= x - r
    return out / factorial(m)


class _Ansatz:
    """Coefficients of the operator applied to the ansatz, by descending power of n.

    ``order_coefficient(t)`` is the coefficient of ``n^(d-t)`` in
    ``sum_i p_i(n) phi(n+i) / (mu^n n^theta)`` with ``d`` the top degree.
    """

    def __init__(self, op: RecurrenceOperator, mu: Fraction):
        self.d = op.degree
        self.mu = mu
        self.c = op.coeffs
        self.mu_pow = [mu**i for i in range(op.order + 1)]

    def coeff(self, i: int, deg: int) -> int:
        p = self.c[i]
        return p[deg] if 0 <= deg < len(p) else 0

    def weight(self, deg: int, power: int) -> Fraction:
        """``sum_i [n^deg] p_i * mu^i * i^power``."""
        return sum((self.coeff(i, deg) * self.mu_pow[i] * i**power for i in range(len(self.c))), Fraction(0))

    def order_coefficient(self, t: int, theta: Fraction, a: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for s in range(t + 1):
            deg = self.d - t + s
            for j in range(min(s, len(a) - 1) + 1):
                m = s - j
                if a[j]:
                    total += self.weight(deg, m) * a[j] * _binom(theta - j, m)
        return total


def _theta_for(ans: _Ansatz) -> Fraction:
    slope = ans.weight(ans.d, 1)
    if slope == 0:
        raise UnsupportedAsymptotics("degenerate exponent equation (root not simple)")
    return -ans.weight(ans.d - 1, 0) / slope


def expansion(op: RecurrenceOperator, J: int = DEFAULT_ORDER) -> AsymptoticExpansion:
    """Exact ``mu``, ``theta`` and ``a_1..a_J`` for the dominant formal solution.

    When a positive and a negative root share the largest modulus, the one
    whose formal solution has the larger power ``theta`` dominates and is used.
    """
    cp = characteristic_polynomial(op)
    candidates = []
    for mu in dominant_roots(cp):
        ans = _Ansatz(op, mu)
        if ans.order_coefficient(0, Fraction(0), [Fraction(1)]) != 0:
            raise ArithmeticError("top order does not cancel")
        candidates.append((_theta_for(ans), mu, ans))
    candidates.sort(key=lambda c: (c[0], c[1]))
    if len(candidates) > 1 and candidates[-1][0] == candidates[-2][0]:
        raise UnsupportedAsymptotics(
            f"roots {candidates[-2][1]} and {candidates[-1][1]} tie in modulus and in power n^{candidates[-1][0]}"
        )
    expansions = [_solve_coefficients(ans, mu, theta, J) for theta, mu, ans in candidates]
    main = expansions[-1]
    return AsymptoticExpansion(main.mu, main.theta, main.a, tuple(reversed(expansions[:-1])))


def _solve_coefficients(ans: _Ansatz, mu: Fraction, theta: Fraction, J: int) -> AsymptoticExpansion:
    # Order n^(d-t) is affine in a_{t-1} once a_0..a_{t-2} are known.
    a = [Fraction(1)]
    for t in range(2, J + 2):
        a.append(Fraction(0))
        rest = ans.order_coefficient(t, theta, a)
        a[t - 1] = Fraction(1)
        pivot = ans.order_coefficient(t, theta, a) - rest
        if pivot == 0:
            raise UnsupportedAsymptotics(f"degenerate pivot at order n^-{t - 1}; the power-law ansatz does not apply")
        a[t - 1] = -rest / pivot
    return AsymptoticExpansion(mu, theta, tuple(a[1:]))


def residuals(op: RecurrenceOperator, exp: AsymptoticExpansion, orders: int | None = None) -> list[Fraction]:
    """Exact coefficients of ``n^(d-t)`` for ``t = 0..orders`` after substituting the expansion.

    All of ``t = 0..J+1`` vanish for a correctly computed expansion of order ``J``.
    """
    ans = _Ansatz(op, exp.mu)
    a = [Fraction(1), *exp.a]
    orders = exp.J + 1 if orders is None else orders
    return [ans.order_coefficient(t, exp.theta, a) for t in range(orders + 1)]


# --- constant factor -------------------------------------------------------------


def _mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _constants_at(seq: SequenceRecord, exp: AsymptoticExpansion, n: int) -> list:
    """Solve ``A(n+r) = sum_c C_c * scale_c(n+r)`` for one ``r`` per component."""
    parts = [exp, *exp.companions]
    rows = [[p.scale(n + r) for p in parts] for r in range(len(parts))]
    if any(not mpmath.isfinite(x) or x == 0 for row in rows for x in row):
        raise OverflowError(f"mu^{n} not representable at this precision")
    rhs = [mpmath.mpf(seq[n + r]) for r in range(len(parts))]
    if len(parts) == 1:
        return [rhs[0] / rows[0][0]]
    return list(mpmath.lu_solve(mpmath.matrix(rows), mpmath.matrix(rhs)))


def estimate_constant(
    seq: SequenceRecord,
    exp: AsymptoticExpansion,
    at_n: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> ConstantEstimate:
    """Constant factor of the leading term, estimated at ``at_n`` and at ``at_n // 2``.

    Without companions this is ``A(at_n) / (mu^n n^theta (1 + sum a_j n^-j))``.
    With ``c`` companion roots it uses ``A(at_n .. at_n + c)`` and solves for
    all constants together, returning the leading one.
    """
    if at_n < 10 * exp.J:
        raise ValueError(f"at_n={at_n} is too small for an order-{exp.J} expansion (need >= {10 * exp.J})")
    with mpmath.workprec(precision_bits):
        consts = _constants_at(seq, exp, at_n)
        half = at_n // 2
        half_value = _constants_at(seq, exp, half)[0] if half >= max(seq.start, 1) else None
    return ConstantEstimate(consts[0], precision_bits, at_n, half_value, companion_values=tuple(consts[1:]))


def _simplest_fraction(lo: Fraction, hi: Fraction) -> Fraction:
    """Fraction with the smallest denominator in ``[lo, hi]`` (``0 < lo <= hi``), via continued fractions."""
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    inner = _simplest_fraction(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def candidates_for(value, search_bound: int = DEFAULT_SEARCH_BOUND, tol: float = MATCH_TOLERANCE) -> list[ConstantCandidate]:
    """Every ``(p/q) sqrt(m) pi^e`` with ``p, q <= search_bound`` within relative ``tol`` of ``value``."""
    found = []
    with mpmath.workprec(max(mpmath.mp.prec, 128)):
        value = mpmath.mpf(value)
        for m in SQRT_PARTS:
            for e in PI_EXPONENTS:
                r = value / (mpmath.sqrt(m) * mpmath.pi ** _mpf(e))
                rf = Fraction(mpmath.nstr(r, 40, min_fixed=-mpmath.inf, max_fixed=mpmath.inf))
                width = rf * Fraction(tol)
                frac = _simplest_fraction(rf - width, rf + width)
                if 0 < frac.numerator <= search_bound and frac.denominator <= search_bound:
                    found.append(ConstantCandidate(frac.numerator, frac.denominator, m, e))
    return found


def match_constant(
    c: ConstantEstimate | float, search_bound: int = DEFAULT_SEARCH_BOUND, tol: float = MATCH_TOLERANCE
) -> ConstantCandidate | None:
    """The unique simple closed form within ``tol`` of the estimate, or None."""
    value = c.value if isinstance(c, ConstantEstimate) else c
    if value <= 0:
        raise ValueError("constant must be positive")
    found = candidates_for(value, search_bound, tol)
    if len(found) > 1:
        log.warning("ambiguous constant %s: %s", mpmath.nstr(value, 15), ", ".join(map(str, found)))
        return None
    return found[0] if found else None
