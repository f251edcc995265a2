"""Dense univariate polynomials as coefficient tuples, lowest degree first.

Coefficients may be ``int`` or ``Fraction``; the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

Poly = tuple


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Sequence) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(trim(p)) - 1


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def scale(p: Sequence, c) -> Poly:
    return trim(c * a for a in p)


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def product(*factors: Sequence) -> Poly:
    return reduce(mul, factors, (1,))


def power(p: Sequence, e: int) -> Poly:
    return product(*([p] * e))


def divmod_poly(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    """Division over the rationals."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in trim(p)]
    quot = [Fraction(0)] * max(0, len(rem) - len(q) + 1)
    lead = Fraction(q[-1])
    while len(rem) >= len(q):
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return trim(quot), tuple(rem)


def content(p: Sequence[int]) -> int:
    return reduce(gcd, (int(c) for c in p), 0)


def primitive(p: Sequence) -> Poly:
    """Scale a rational polynomial to coprime integer coefficients, positive leading term."""
    p = trim(Fraction(c) for c in p)
    if not p:
        return ()
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in p), 1)
    ints = [int(c * den) for c in p]
    g = content(ints)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def gcd_poly(p: Sequence, q: Sequence) -> Poly:
    """Greatest common divisor over Q, returned primitive (see :func:`primitive`)."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return primitive(a)


def shift(p: Sequence, s) -> Poly:
    """``p(x + s)``."""
    out: Poly = ()
    for c in reversed(trim(p)):
        out = add(mul(out, (s, 1)), (c,))
    return out


def to_str(p: Sequence, var: str = "n") -> str:
    p = trim(p)
    if not p:
        return "0"
    pieces = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if d == 0:
            body = str(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` (trial division; ``n`` must be nonzero)."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Sequence) -> dict[Fraction, int]:
    """Rational roots with multiplicities, via the rational root theorem.

    Each candidate ``a/b`` (``a | p(0)``, ``b | lead``) is confirmed by exact
    evaluation and divided out, so multiplicities are exact.
    """
    q = primitive(p)
    roots: dict[Fraction, int] = {}
    while q and q[0] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        q = q[1:]
    if len(q) <= 1:
        return roots
    candidates = sorted(
        {Fraction(s * a, b) for a in divisors(q[0]) for b in divisors(q[-1]) for s in (1, -1)},
        key=lambda r: (abs(r), r),
    )
    for r in candidates:
        while len(q) > 1 and evaluate(q, r) == 0:
            roots[r] = roots.get(r, 0) + 1
            q = primitive(divmod_poly(q, (-r, 1))[0])
    return roots


def deflate(p: Sequence, roots: dict[Fraction, int]) -> Poly:
    """``p`` with the given roots (and multiplicities) divided out, made primitive."""
    q = trim(p)
    for r, m in roots.items():
        for _ in range(m):
            q, rem = divmod_poly(q, (-r, 1))
            if rem:
                raise ArithmeticError(f"{r} is not a root")
    return primitive(q)
