"""Exact sums over standard Young tableaux in a (k, l) hook, their recurrences and asymptotics.

>>> from hookrec import compute_series, fit_recurrence, expansion
>>> seq = compute_series(2, 1, 1, 59)
>>> op = fit_recurrence(seq)
>>> expansion(op, 3).theta
Fraction(-1, 2)
"""

__version__ = "0.1.0"

from .shapes import (  # noqa: E402
    HookConstraint,
    conjugate,
    enumerate_hook_partitions,
    hook_lengths,
    syt_count,
    syt_count_bruteforce,
    syt_count_frobenius,
)
from .sequences import SequenceRecord, compute_S, compute_series, extend_via_recurrence  # noqa: E402
from .linalg import RationalMatrix, nullspace, rank  # noqa: E402
from .recurrence import (  # noqa: E402
    RecurrenceOperator,
    apply,
    canonicalize,
    characteristic_polynomial,
    fit_recurrence,
    verify,
)
from .asymptotics import (  # noqa: E402
    AsymptoticExpansion,
    ConstantCandidate,
    ConstantEstimate,
    UnsupportedAsymptotics,
    dominant_root,
    estimate_constant,
    expansion,
    match_constant,
)
