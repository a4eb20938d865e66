import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from copart.arith import divisors
from copart.errors import DomainError, ResourceLimitError
from copart.partition import (
    ENUM_CAP_ENV,
    asymptotic_ratio,
    composition_polynomial,
    compositions_count,
    coprime_compositions,
    coprime_compositions_enumerated,
    coprime_compositions_mobius,
    coprime_partitions,
    enumerate_coprime_partitions,
    enumerate_partitions,
    partitions_count,
)
from copart.totient import jordan_totient


# p_5 and p_6 frozen from power-series division of the generating function
@pytest.mark.parametrize(
    "k, n, value",
    [(5, 10, 7), (5, 25, 192), (5, 40, 1115), (5, 60, 5260),
     (6, 10, 5), (6, 25, 235), (6, 40, 1945), (6, 60, 12692)],
)
def test_partitions_oracle(k, n, value):
    assert partitions_count(k, n) == value


def test_count_examples():
    assert compositions_count(3, 4) == 3
    assert compositions_count(5, 5) == 1
    assert compositions_count(4, 10) == 84
    assert compositions_count(4, 3) == 0
    assert partitions_count(2, 7) == 3
    assert partitions_count(4, 10) == 9
    assert partitions_count(3, 3) == 1
    assert partitions_count(3, 0) == 0


def test_composition_polynomial_examples():
    assert composition_polynomial(2).coeffs == (-1, 1)
    assert composition_polynomial(4).coeffs == tuple(Fraction(c, 6) for c in (-6, 11, -6, 1))
    assert composition_polynomial(1).coeffs == (1,)


@pytest.mark.parametrize("k", range(1, 13))
def test_composition_polynomial_roots(k):
    poly = composition_polynomial(k)
    assert all(poly(n) == 0 for n in range(1, k))
    assert poly(k) == 1
    assert poly.coeffs[-1] == Fraction(1, math.factorial(k - 1))
    assert all(poly(n) == compositions_count(k, n) for n in range(1, 40))


def test_coprime_examples():
    assert coprime_compositions(3, 4) == 3
    # every composition of 6 into 4 parts contains a 1, and c_4(3) = 0
    assert coprime_compositions(4, 6) == compositions_count(4, 6) == 10
    assert all(coprime_compositions(2, n) == jordan_totient(1, n) for n in range(2, 300))
    assert coprime_partitions(3, 6) == 2
    assert coprime_partitions(3, 3) == 1
    assert Fraction(jordan_totient(2, 3), 12) != 1
    assert all(Fraction(coprime_partitions(2, n)) == Fraction(jordan_totient(1, n), 2) for n in range(3, 300))


def test_enumeration_examples():
    assert enumerate_partitions(3, 5) == [(3, 1, 1), (2, 2, 1)]
    assert enumerate_partitions(4, 4) == [(1, 1, 1, 1)]
    assert enumerate_coprime_partitions(2, 4) == [(3, 1)]


def test_enumeration_cap(monkeypatch):
    with pytest.raises(ResourceLimitError):
        enumerate_partitions(2, 151)
    monkeypatch.setenv(ENUM_CAP_ENV, "200")
    assert len(enumerate_partitions(2, 151)) == 75
    assert len(enumerate_partitions(2, 10, cap=10)) == 5
    monkeypatch.setenv(ENUM_CAP_ENV, "lots")
    with pytest.raises(DomainError):
        enumerate_partitions(2, 10)


def test_enumeration_is_lexicographically_decreasing():
    parts = enumerate_partitions(4, 20)
    assert parts == sorted(parts, reverse=True)
    assert all(list(p) == sorted(p, reverse=True) for p in parts)


def test_brute_force_compositions():
    for k in range(1, 5):
        for n in range(1, 13):
            tuples = [t for t in product(range(1, n + 1), repeat=k) if sum(t) == n]
            coprime = [t for t in tuples if math.gcd(*t) == 1]
            assert len(tuples) == compositions_count(k, n)
            assert len(coprime) == coprime_compositions(k, n)


def test_domain_errors():
    with pytest.raises(DomainError):
        partitions_count(0, 5)
    with pytest.raises(DomainError):
        coprime_partitions(2, 0)
    with pytest.raises(DomainError):
        asymptotic_ratio(1, 10)


def test_asymptotic_ratio():
    assert all(asymptotic_ratio(3, n) == 1 for n in range(4, 300))
    assert all(asymptotic_ratio(2, n) == 1 for n in range(3, 300))
    assert 0.9 <= asymptotic_ratio(4, 1000) <= 1.1


def test_mobius_round_trips():
    for k in range(1, 7):
        for n in range(1, 2001):
            ds = divisors(n)
            assert sum(coprime_partitions(k, d) for d in ds) == partitions_count(k, n)
            assert sum(coprime_compositions(k, d) for d in ds) == compositions_count(k, n)


def test_two_part_closed_form():
    for n in range(1, 10001):
        assert partitions_count(2, n) == n // 2 == Fraction(2 * n - 1, 4) + Fraction((-1) ** n, 4)


def test_three_routes_for_coprime_compositions():
    for k in range(1, 6):
        for n in range(1, 121):
            a = coprime_compositions(k, n)
            assert a == coprime_compositions_mobius(k, n) == coprime_compositions_enumerated(k, n)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(1, 3000))
def test_partition_recurrence(k, n):
    if k >= 2:
        tail = partitions_count(k, n - k) if n >= k else 0
        assert partitions_count(k, n) == partitions_count(k - 1, n - 1) + tail
    assert partitions_count(1, n) == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10), st.integers(1, 3000))
def test_coprime_counts_are_bounded(k, n):
    assert 0 <= coprime_partitions(k, n) <= partitions_count(k, n)
    assert 0 <= coprime_compositions(k, n) <= compositions_count(k, n)
