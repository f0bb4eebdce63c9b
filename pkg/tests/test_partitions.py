from collections import Counter
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from painleve4.partitions import (
    MayaDiagram,
    Partition,
    conjugate,
    hook_product,
    hooks,
    is_3_reduced,
    lambda_mn,
    maya_mn,
    maya_of_partition,
    maya_to_partition,
    partitions_of,
)

partitions = st.lists(st.integers(1, 7), max_size=6).map(lambda l: Partition(sorted(l, reverse=True)))


def brute_hooks(lam):
    """h(s) = lam_i + lam'_j - i - j + 1 straight from the definition."""
    conj = [sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])] if lam.parts else []
    return [lam.parts[i] + conj[j] - i - j - 1 for i in range(len(lam.parts)) for j in range(lam.parts[i])]


def test_partition_normalizes_and_parses():
    assert Partition((2, 1, 1, 0)).parts == (2, 1, 1)
    assert Partition.parse("(2,1,1)") == Partition((2, 1, 1))
    assert Partition.parse("()") == Partition()
    assert str(Partition((2, 1, 1))) == "(2,1,1)"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition.parse("(2,a)")


def test_maya_examples():
    M = maya_mn(3, 2)
    assert [k for k in range(-3, 8) if k in M] == [-3, -2, -1, 0, 1, 3, 4, 6]
    assert maya_to_partition(M) == Partition((2, 1, 1))
    assert maya_to_partition(MayaDiagram(0)) == Partition()
    assert maya_to_partition(MayaDiagram(-5, [-5, -4, -3, -2, -1, 0, 2])) == Partition((1,))


def test_lambda_examples():
    assert lambda_mn(3, 2) == Partition((2, 1, 1))
    assert lambda_mn(0, 0) == Partition()
    assert lambda_mn(3, 0) == Partition((4, 2))
    assert lambda_mn(4, 0) == Partition((6, 4, 2))


def test_hook_examples():
    lam = Partition((2, 1, 1))
    assert Counter(hooks(lam)) == Counter([4, 1, 2, 1])
    assert hook_product(lam) == 8
    assert hook_product(Partition()) == 1
    assert Counter(hooks(Partition((5,)))) == Counter([5, 4, 3, 2, 1])
    assert hook_product(Partition((5,))) == factorial(5)


def test_three_reduced_examples():
    assert is_3_reduced(Partition((2, 1, 1)))
    assert not is_3_reduced(Partition((3,)))
    assert not is_3_reduced(Partition((2, 1)))


def test_conjugate_examples():
    assert conjugate(Partition((2, 1, 1))) == Partition((3, 1))
    assert conjugate(Partition()) == Partition()
    assert conjugate(Partition.rectangle(4, 3)) == Partition.rectangle(3, 4)


@pytest.mark.parametrize("m", range(-6, 7))
def test_lambda_weight_and_reduced(m):
    for n in range(-6, 7):
        lam = lambda_mn(m, n)
        assert lam.weight == m * m + n * n - m * n - m
        assert is_3_reduced(lam)


@given(partitions)
def test_conjugate_involution_and_hooks(lam):
    assert conjugate(conjugate(lam)) == lam
    assert Counter(hooks(lam)) == Counter(hooks(conjugate(lam)))
    assert Counter(hooks(lam)) == Counter(brute_hooks(lam))


@given(partitions, st.integers(0, 4), st.integers(-10, 10))
def test_maya_round_trip_and_shift(lam, extra, k):
    M = maya_of_partition(lam, lam.length + extra)
    assert M.to_partition() == lam
    assert M.shift(k).to_partition() == lam


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
