"""End-to-end runs: compute, fit, verify, expand, estimate the constant.

:func:`reproduce` checks all four published case studies against the
reference values in :mod:`hookrec.casestudies`.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

import mpmath

from .asymptotics import (
    DEFAULT_ORDER,
    DEFAULT_PRECISION_BITS,
    AsymptoticExpansion,
    ConstantEstimate,
    estimate_constant,
    expansion,
    match_constant,
)
from .cache import SeriesCache, get_series
from .casestudies import CASES, CaseStudy
from .recurrence import (
    DEFAULT_D_MAX,
    DEFAULT_HOLDOUT,
    DEFAULT_L_MAX,
    DEFAULT_SURPLUS,
    RecurrenceOperator,
    VerificationReport,
    fit_recurrence,
    verify,
)
from .sequences import SequenceRecord, extend_via_recurrence

DEFAULT_TERMS = 60
DEFAULT_AT_N = 300
CONSTANT_RTOL = 1e-6


@dataclass
class FitResult:
    series: SequenceRecord
    operator: RecurrenceOperator | None
    report: VerificationReport | None


def fit_and_verify(
    seq: SequenceRecord,
    terms: int,
    holdout: int = DEFAULT_HOLDOUT,
    L_max: int = DEFAULT_L_MAX,
    D_max: int = DEFAULT_D_MAX,
    surplus: int = DEFAULT_SURPLUS,
) -> FitResult:
    """Fit on the first ``terms`` entries of ``seq``, verify on everything (last ``holdout`` held out)."""
    op = fit_recurrence(seq.head(terms), L_max, D_max, surplus)
    if op is None:
        return FitResult(seq, None, None)
    return FitResult(seq, op, verify(op, seq, holdout))


def fit_hook_sequence(
    k: int,
    l: int,
    z: int,
    terms: int = DEFAULT_TERMS,
    holdout: int = DEFAULT_HOLDOUT,
    cache: SeriesCache | None = None,
    **bounds,
) -> FitResult:
    seq = get_series(k, l, z, terms + holdout - 1, cache)
    result = fit_and_verify(seq, terms, holdout, **bounds)
    if cache is not None and result.report is not None and result.report.passed:
        cache.store_results(k, l, z, operator=result.operator)
    return result


def constant_for(
    seq: SequenceRecord,
    op: RecurrenceOperator,
    exp: AsymptoticExpansion,
    at_n: int = DEFAULT_AT_N,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> ConstantEstimate:
    """Extend ``seq`` with ``op`` as far as needed, estimate the constant and try to name it."""
    need = at_n + len(exp.companions)
    if seq.stop <= need:
        seq = extend_via_recurrence(seq, op, need)
    est = estimate_constant(seq, exp, at_n, precision_bits)
    return replace(est, matched=match_constant(est))


# --- reproduction of the published cases ----------------------------------------


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CaseResult:
    case: CaseStudy
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)


def check_case(
    case: CaseStudy,
    terms: int = DEFAULT_TERMS,
    holdout: int = DEFAULT_HOLDOUT,
    at_n: int = DEFAULT_AT_N,
    cache_dir: str | None = None,
) -> CaseResult:
    cache = SeriesCache(cache_dir) if cache_dir is not None else None
    result = CaseResult(case)
    n_needed = max(terms + holdout - 1, len(case.terms))
    seq = get_series(case.k, case.l, case.z, n_needed, cache)

    bad = next((n for n, want in enumerate(case.terms, start=1) if seq[n] != want), None)
    result.checks.append(
        Check("terms", bad is None, "" if bad is None else f"term n={bad}: expected {case.terms[bad - 1]}, computed {seq[bad]}")
    )

    fit = fit_and_verify(seq.head(terms + holdout), terms, holdout)
    if fit.operator is None:
        result.checks.append(Check("operator", False, "no operator found"))
        return result
    want = case.operator()
    same = fit.operator.same_as(want)
    verified = fit.report.semi_rigorous
    detail = []
    if not same:
        detail.append(f"fitted {fit.operator} differs from reference {want}")
    if not verified:
        detail.append(fit.report.summary())
    result.checks.append(Check("operator", same and verified, "; ".join(detail)))

    exp3 = expansion(fit.operator, 3)
    mismatches = []
    if exp3.mu != case.mu:
        mismatches.append(f"mu={exp3.mu} (expected {case.mu})")
    if exp3.theta != case.theta:
        mismatches.append(f"theta={exp3.theta} (expected {case.theta})")
    for j, (got, exp_) in enumerate(zip(exp3.a, case.a), start=1):
        if got != exp_:
            mismatches.append(f"a_{j}={got} (expected {exp_})")
    result.checks.append(Check("expansion", not mismatches, "; ".join(mismatches)))

    est = constant_for(seq, fit.operator, expansion(fit.operator, DEFAULT_ORDER), at_n)
    with mpmath.workprec(est.precision_bits):
        rel = abs(est.value / case.constant.value(est.precision_bits) - 1)
    ok = est.matched == case.constant and rel < CONSTANT_RTOL
    result.checks.append(
        Check("constant", ok, "" if ok else f"estimate {mpmath.nstr(est.value, 15)} matched {est.matched}, expected {case.constant}")
    )
    return result


def reproduce(
    cases: Sequence[CaseStudy] = CASES,
    terms: int = DEFAULT_TERMS,
    holdout: int = DEFAULT_HOLDOUT,
    at_n: int = DEFAULT_AT_N,
    cache_dir: str | None = None,
    jobs: int = 1,
) -> list[CaseResult]:
    args = [(c, terms, holdout, at_n, cache_dir) for c in cases]
    if jobs <= 1:
        return [check_case(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_case, *zip(*args)))


def perturbed(cases: Sequence[CaseStudy], key: tuple[int, int, int], n: int) -> list[CaseStudy]:
    """Copy of ``cases`` with the reference term ``S(n)`` of case ``key`` increased by one."""
    out = []
    for c in cases:
        if c.key == key:
            terms = list(c.terms)
            terms[n - 1] += 1
            c = replace(c, terms=tuple(terms))
        out.append(c)
    return out
