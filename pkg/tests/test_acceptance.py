"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary ends with one
PASS/FAIL line per criterion.
"""

import os
import subprocess
import sys
import time
from fractions import Fraction as F
from math import factorial

import mpmath
import pytest

from hookrec.asymptotics import estimate_constant, expansion, match_constant
from hookrec.casestudies import BY_KEY, CASES
from hookrec.recurrence import RecurrenceOperator, fit_recurrence, verify
from hookrec.sequences import compute_series, extend_via_recurrence
from hookrec.shapes import syt_count, syt_count_bruteforce, syt_count_frobenius

from conftest import PAPER_KEYS, ascending_partitions

LAST_TERMS = {
    (2, 1, 1): (20, 188689685),
    (2, 1, 2): (17, 2350767037116),
    (2, 2, 1): (22, 65167445872),
    (2, 2, 2): (17, 108400653865572),
}


@pytest.mark.criterion(1, "compute_series reproduces the four printed term lists")
def test_criterion_1_sequences():
    t0 = time.perf_counter()
    for case in CASES:
        count, last = LAST_TERMS[case.key]
        seq = compute_series(case.k, case.l, case.z, count)
        assert len(case.terms) == count and case.terms[-1] == last
        assert seq.terms[1:] == case.terms, case.label
    assert time.perf_counter() - t0 < 10


@pytest.mark.criterion(2, "fit on 60 terms gives the published operators, verified on 20 held-out terms")
def test_criterion_2_operators():
    t0 = time.perf_counter()
    for case in CASES:
        seq = compute_series(case.k, case.l, case.z, 79)
        op = fit_recurrence(seq.head(60))
        assert op is not None, case.label
        assert op.coeffs == case.operator().coeffs, case.label
        assert op.order == (3 if case.l == 1 else 5)
        report = verify(op, seq, holdout=20)
        assert report.passed and report.semi_rigorous and report.holdout_indices == 20
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion(3, "order-3 expansions equal the published rationals")
def test_criterion_3_expansions():
    want = {
        (2, 1, 1): (3, F(-1, 2), (F(-3, 16), F(1, 512), F(135, 8192))),
        (2, 1, 2): (9, F(-2), (F(3, 4), F(53, 32), F(261, 64))),
        (2, 2, 1): (4, F(-1), None),
        (2, 2, 2): (16, F(-7, 2), (F(33, 8), F(2145, 128), F(81723, 1024))),
    }
    for key in PAPER_KEYS:
        exp = expansion(BY_KEY[key].operator(), 3)
        mu, theta, a = want[key]
        assert (exp.mu, exp.theta) == (mu, theta), key
        if a is not None:
            assert exp.a == a, key


@pytest.mark.criterion(4, "constants recovered at n=300, J=10, to relative 1e-6")
def test_criterion_4_constants():
    t0 = time.perf_counter()
    for case in CASES:
        seq = compute_series(case.k, case.l, case.z, 79)
        op = fit_recurrence(seq.head(60))
        exp = expansion(op, 10)
        long = extend_via_recurrence(seq, op, 300 + len(exp.companions))
        est = estimate_constant(long, exp, 300)
        assert match_constant(est) == case.constant, case.label
        with mpmath.workprec(est.precision_bits):
            assert abs(est.value / case.constant.value() - 1) < 1e-6
    assert time.perf_counter() - t0 < 30


@pytest.mark.criterion(5, "oracle suite: SYT formulas, unrestricted range, transpose symmetry")
def test_criterion_5_oracles():
    for n in range(11):
        for p in ascending_partitions(n):
            assert syt_count(p) == syt_count_frobenius(p) == syt_count_bruteforce(p)
    for k in range(4):
        for l in range(4):
            bound = (k + 1) * (l + 1)
            seq = compute_series(k, l, 2, bound - 1)
            for n in range(bound):
                assert seq[n] == sum(syt_count(p) ** 2 for p in ascending_partitions(n)) == factorial(n)
    assert compute_series(2, 2, 2, 8)[8] == 40320 == BY_KEY[(2, 2, 2)].terms[7]
    for z in (1, 2):
        for k in range(4):
            for l in range(k + 1, 4):
                assert compute_series(k, l, z, 25).terms == compute_series(l, k, z, 25).terms


@pytest.mark.criterion(6, "Fibonacci gives N^2 - N - 1 and n! gives N - n - 1")
def test_criterion_6_self_illustrations():
    fib = [0, 1]
    while len(fib) < 40:
        fib.append(fib[-1] + fib[-2])
    assert fit_recurrence(fib) == RecurrenceOperator(((-1,), (-1,), (1,)))
    assert fit_recurrence([factorial(n) for n in range(40)]) == RecurrenceOperator(((-1, -1), (1,)))


@pytest.mark.criterion(7, "`hookrec paper` exits 0 from a fresh cache within 2 minutes")
def test_criterion_7_end_to_end(tmp_path):
    env = dict(os.environ, HOOKREC_CACHE_DIR=str(tmp_path / "fresh"))
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "hookrec", "paper"], env=env, capture_output=True, text=True, timeout=120)
    elapsed = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "FAIL" not in proc.stdout
    assert elapsed < 120


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
