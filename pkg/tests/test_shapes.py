from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hookrec.shapes import (
    HookConstraint,
    SizeLimitError,
    conjugate,
    enumerate_hook_partitions,
    hook_lengths,
    is_partition,
    partitions,
    syt_count,
    syt_count_bruteforce,
    syt_count_frobenius,
)

from conftest import ascending_partitions, brute_in_hook


def direct_hooks(parts):
    """Count arm and leg cells one at a time."""
    out = []
    for i, row in enumerate(parts):
        line = []
        for j in range(row):
            arm = sum(1 for jj in range(j + 1, row))
            leg = sum(1 for ii in range(i + 1, len(parts)) if parts[ii] > j)
            line.append(arm + leg + 1)
        out.append(line)
    return out


@st.composite
def partition_st(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(list(ascending_partitions(n))))


def test_empty_partition_only_for_zero():
    for k in range(3):
        for l in range(3):
            assert list(enumerate_hook_partitions(0, HookConstraint(k, l))) == [()]


def test_n6_hook21_excludes_only_222():
    got = list(enumerate_hook_partitions(6, HookConstraint(2, 1)))
    assert len(got) == 10
    assert set(got) == set(ascending_partitions(6)) - {(2, 2, 2)}


def test_n8_hook22_is_everything():
    got = list(enumerate_hook_partitions(8, HookConstraint(2, 2)))
    assert len(got) == 22 and set(got) == set(ascending_partitions(8))


def test_reverse_lexicographic_order():
    got = list(enumerate_hook_partitions(7, HookConstraint(3, 3)))
    assert got == sorted(got, reverse=True)
    assert got == list(partitions(7))


def test_negative_hook_rejected():
    with pytest.raises(ValueError):
        HookConstraint(-1, 0)


def test_hook_00_empty_for_positive_n():
    assert list(enumerate_hook_partitions(3, HookConstraint(0, 0))) == []


@pytest.mark.parametrize("n", range(26))
def test_enumeration_counts_match_filter(n):
    everything = list(ascending_partitions(n))
    for k in range(5):
        for l in range(5):
            got = list(enumerate_hook_partitions(n, HookConstraint(k, l)))
            assert len(got) == len(set(got))
            assert len(got) == sum(1 for p in everything if brute_in_hook(p, k, l))
            assert all(is_partition(p) and sum(p) == n for p in got)


def test_conjugation_swaps_hooks():
    for n in range(21):
        for p in ascending_partitions(n):
            for k in range(4):
                for l in range(4):
                    assert brute_in_hook(p, k, l) == brute_in_hook(conjugate(p), l, k)


@pytest.mark.parametrize(
    "shape, hooks",
    [((1,), [[1]]), ((2, 1), [[3, 1], [1]]), ((3, 3, 3), [[5, 4, 3], [4, 3, 2], [3, 2, 1]]), ((), [])],
)
def test_hook_lengths_examples(shape, hooks):
    assert hook_lengths(shape) == hooks == direct_hooks(shape)


@pytest.mark.parametrize(
    "shape, count", [((), 1), ((1,), 1), ((2, 1), 2), ((3, 3, 3), 42), ((1, 1, 1), 1), ((4, 2), 9), ((2, 2), 2), ((3, 2, 1), 16)]
)
def test_syt_counts(shape, count):
    assert syt_count(shape) == count
    assert syt_count_frobenius(shape) == count
    assert syt_count_bruteforce(shape) == count


def test_single_row_bruteforce():
    for n in range(11):
        assert syt_count_bruteforce((n,) if n else ()) == 1


def test_bruteforce_size_limit():
    with pytest.raises(SizeLimitError):
        syt_count_bruteforce((11,))


def test_three_formulas_agree_for_all_shapes_up_to_10():
    for n in range(11):
        total_sq = 0
        for p in ascending_partitions(n):
            f = syt_count(p)
            assert f == syt_count_frobenius(p) == syt_count_bruteforce(p)
            total_sq += f * f
        # RSK: sum of squares over all shapes is n!
        assert total_sq == factorial(n)


@given(partition_st(max_n=30))
def test_conjugate_involution_preserves_count(p):
    c = conjugate(p)
    assert conjugate(c) == p
    assert syt_count(c) == syt_count(p)


@pytest.mark.parametrize("p, c", [((), ()), ((3, 1), (2, 1, 1)), ((4, 4, 2), (3, 3, 2, 2))])
def test_conjugate_examples(p, c):
    assert conjugate(p) == c


@settings(max_examples=50)
@given(st.integers(0, 30), st.integers(0, 3), st.integers(0, 3))
def test_hook_product_divides_factorial(n, k, l):
    for p in enumerate_hook_partitions(n, HookConstraint(k, l)):
        assert syt_count(p) > 0
