"""Published reference values for (k, l) in {(2, 1), (2, 2)} and z in {1, 2}.

Term lists start at n = 1.  Operators are stored in factored form, exactly as
printed (monic in N with rational-function coefficients), and converted to the
canonical cleared-denominator form on demand.  Expansions are to order 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .asymptotics import ConstantCandidate
from .recurrence import RecurrenceOperator, canonicalize

n = (0, 1)


def lin(c: int) -> tuple[int, int]:
    """``n + c``."""
    return (c, 1)


@dataclass(frozen=True)
class CaseStudy:
    k: int
    l: int
    z: int
    terms: tuple[int, ...]  # n = 1, 2, ...
    numerators: tuple[tuple[int, ...], ...]  # coefficient of N^i times the common denominator
    mu: Fraction
    theta: Fraction
    a: tuple[Fraction, ...]  # empty when only the leading term was printed
    constant: ConstantCandidate

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.k, self.l, self.z)

    @property
    def label(self) -> str:
        return f"(k,l)=({self.k},{self.l}), z={self.z}"

    def operator(self) -> RecurrenceOperator:
        return canonicalize(RecurrenceOperator(self.numerators))


def _op(denominator, *numerators) -> tuple[tuple[int, ...], ...]:
    """Numerators over a shared denominator; the last entry is the monic N^L term."""
    return tuple(numerators) + (denominator,)


P = polys.product
F = Fraction

CASES: tuple[CaseStudy, ...] = (
    CaseStudy(
        2, 1, 1,
        (1, 2, 4, 10, 26, 71, 197, 554, 1570, 4477, 12827, 36895, 106471, 308114, 893804,
         2598314, 7567466, 22076405, 64498427, 188689685),
        _op(
            P(lin(3), lin(1)),
            P((3,), lin(2), lin(1)),
            P((-1,), n, lin(2)),
            P((-1,), (9, 11, 3)),
        ),
        F(3), F(-1, 2), (F(-3, 16), F(1, 512), F(135, 8192)),
        ConstantCandidate(1, 4, 3, F(-1, 2)),
    ),
    CaseStudy(
        2, 1, 2,
        (1, 2, 6, 24, 120, 695, 4403, 29540, 206244, 1483371, 10919271, 81896661, 623810421,
         4813777566, 37561178658, 295907998908, 2350767037116),
        _op(
            P(lin(3), lin(3), lin(1), lin(1)),
            P((-9,), lin(2), lin(2), lin(1), lin(1)),
            P((18, 40, 19), lin(2), lin(2)),
            P((-1,), (45, 148, 159, 70, 11)),
        ),
        F(9), F(-2), (F(3, 4), F(53, 32), F(261, 64)),
        ConstantCandidate(9, 128, 3, F(-1)),
    ),
    CaseStudy(
        2, 2, 1,
        (1, 2, 4, 10, 26, 76, 232, 764, 2578, 9076, 32264, 117448, 428936, 1589680, 5897504,
         22101304, 82851218, 312935236, 1182083272, 4491680504, 17067914056, 65167445872),
        _op(
            P(lin(5), lin(4)),
            P((128,), n, lin(-1)),
            P((-32,), (-1, 4, 6)),
            P((8,), (4, 21, 11)),
            P((-4,), (-24, -7, 1)),
            P((-2,), (10, 3), lin(5)),
        ),
        F(4), F(-1), (),
        ConstantCandidate(1, 4, 1, F(-1)),
    ),
    CaseStudy(
        2, 2, 2,
        (1, 2, 6, 24, 120, 720, 5040, 40320, 361116, 3540600, 37207368, 411988896, 4747167568,
         56428884512, 687793860000, 8559142303296, 108400653865572),
        _op(
            P(lin(5), lin(1), lin(4), lin(4)),
            P((-512,), (-1, 2), lin(-1), n, lin(1)),
            P((16,), (-2, 231, 711, 588, 164)),
            P((-16,), (296, 1003, 1146, 545, 94)),
            P((4,), (996, 2501, 2030, 688, 85)),
            P((-4,), (250, 525, 336, 87, 8)),
        ),
        F(16), F(-7, 2), (F(33, 8), F(2145, 128), F(81723, 1024)),
        ConstantCandidate(1, 32, 1, F(-3, 2)),
    ),
)

BY_KEY = {c.key: c for c in CASES}
