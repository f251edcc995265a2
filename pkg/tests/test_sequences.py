from math import factorial

import pytest

from hookrec.recurrence import RecurrenceOperator
from hookrec.sequences import (
    RecurrenceError,
    SequenceRecord,
    compute_S,
    compute_series,
    extend_series,
    extend_via_recurrence,
    from_terms,
    power_sums,
)
from hookrec.shapes import syt_count_bruteforce
from hookrec.casestudies import BY_KEY

from conftest import PAPER_KEYS, ascending_partitions, brute_in_hook, paper_operator, paper_series


def brute_S(k, l, z, n):
    return sum(syt_count_bruteforce(p) ** z for p in ascending_partitions(n) if brute_in_hook(p, k, l))


@pytest.mark.parametrize("args, value", [((2, 1, 1, 4), 10), ((2, 2, 2, 9), 361116), ((1, 1, 1, 5), 16)])
def test_compute_S_examples(args, value):
    assert compute_S(*args) == value


def test_hook_11_is_powers_of_two():
    for n in range(1, 11):
        assert compute_S(1, 1, 1, n) == brute_S(1, 1, 1, n) == 2 ** (n - 1)


def test_compute_S_rejects_nonpositive_z():
    with pytest.raises(ValueError):
        compute_S(2, 1, 0, 3)
    with pytest.raises(ValueError):
        compute_series(2, 1, -1, 3)


def test_series_examples():
    assert compute_series(2, 1, 1, 9).terms == (1, 1, 2, 4, 10, 26, 71, 197, 554, 1570)
    assert compute_series(2, 1, 2, 6).terms == (1, 1, 2, 6, 24, 120, 695)
    assert compute_series(0, 0, 1, 3).terms == (1, 0, 0, 0)


def test_series_matches_brute_force_small_n():
    for k in range(4):
        for l in range(4):
            for z in (1, 2):
                got = compute_series(k, l, z, 10).terms
                assert got == tuple(brute_S(k, l, z, n) for n in range(11)), (k, l, z)


def test_lattice_walk_matches_enumeration():
    for k, l in [(2, 1), (2, 2), (3, 1), (1, 3), (3, 2)]:
        walk = power_sums(k, l, [1, 2], 30)
        for n in range(0, 31, 3):
            assert walk[1][n] == compute_S(k, l, 1, n)
            assert walk[2][n] == compute_S(k, l, 2, n)


def test_transpose_symmetry():
    for k in range(4):
        for l in range(k + 1, 4):
            a = power_sums(k, l, [1, 2], 25)
            b = power_sums(l, k, [1, 2], 25)
            assert a == b, (k, l)


def test_stability_below_excluded_rectangle():
    for k in range(4):
        for l in range(4):
            series = power_sums(k, l, [2], (k + 1) * (l + 1) - 1)[2]
            for n, value in enumerate(series):
                assert value == factorial(n)
    assert compute_series(2, 2, 2, 8).terms[1:] == (1, 2, 6, 24, 120, 720, 5040, 40320)


def test_positive_whenever_hook_nonempty():
    for k, l in [(1, 0), (0, 1), (2, 1), (0, 3)]:
        assert all(t >= 1 for t in compute_series(k, l, 1, 30).terms)


def test_series_idempotent_and_extendable():
    a = compute_series(2, 2, 1, 30)
    assert a == compute_series(2, 2, 1, 30)
    assert extend_series(a.head(12), 30) == a


def test_record_indexing():
    rec = from_terms([5, 6, 7], start=2)
    assert rec[2] == 5 and rec[4] == 7 and rec.stop == 5
    with pytest.raises(IndexError):
        rec[5]


@pytest.mark.parametrize("key, n_target, value", [((2, 1, 1), 20, 188689685), ((2, 2, 1), 22, 65167445872)])
def test_extend_with_reference_operator(key, n_target, value):
    case = BY_KEY[key]
    ext = extend_via_recurrence(compute_series(*key[:2], key[2], 10), case.operator(), n_target)
    assert ext[n_target] == value
    assert ext.terms[1:] == case.terms


def test_extend_constant_sequence():
    op = RecurrenceOperator(((-1,), (1,)))
    assert extend_via_recurrence(from_terms([1, 1, 1]), op, 10).terms == (1,) * 11


def test_extend_detects_wrong_operator():
    op = RecurrenceOperator(((-1,), (2,)))  # A(n+1) = A(n)/2
    with pytest.raises(RecurrenceError):
        extend_via_recurrence(from_terms([1]), op, 3)
    with pytest.raises(RecurrenceError):
        extend_via_recurrence(from_terms([1, 1, 2]), RecurrenceOperator(((-1,), (1,))), 5)


def test_extend_detects_vanishing_leading_coefficient():
    op = RecurrenceOperator(((0,), (-2, 1)))  # (n - 2) A(n+1) = 0
    with pytest.raises(RecurrenceError, match="leading coefficient"):
        extend_via_recurrence(from_terms([0, 0]), op, 5)


@pytest.mark.parametrize("key", PAPER_KEYS)
def test_extension_from_15_terms_reproduces_direct_values(key):
    direct = paper_series(key, 60)
    ext = extend_via_recurrence(direct.head(15), paper_operator(key), 60)
    assert ext == direct
