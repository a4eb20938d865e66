from fractions import Fraction

import pytest

from copart import explicit
from copart.errors import DomainError
from copart.partition import coprime_partitions, partitions_count
from copart.quasipoly import polynomial_part
from copart.totient import closed_form_J013


def test_small_values():
    assert [explicit.p2_formula(n) for n in range(1, 7)] == [0, 1, 1, 2, 2, 3]
    assert [explicit.p3_formula(n) for n in range(1, 8)] == [0, 0, 1, 1, 2, 3, 4]
    assert explicit.p4_formula(10) == 9
    assert explicit.coprime_p3_formula(6) == 2
    assert explicit.coprime_p2_formula(2) == 1  # (1, 1)


def test_p4_polynomial_part_matches_engine():
    assert explicit.P4_POLYNOMIAL_PART == polynomial_part(4)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_formulas_match_counts(k):
    formula = explicit.PARTITION_FORMULAS[k]
    coprime = explicit.COPRIME_FORMULAS[k]
    for n in range(1, 3001):
        assert formula(n) == partitions_count(k, n)
        assert coprime(n) == coprime_partitions(k, n)


def test_quasi_grouping_agrees():
    assert all(explicit.p4_quasi_formula(n) == explicit.p4_formula(n) for n in range(1, 3001))


def test_case_table_examples():
    assert explicit.k4_minus_one_table(1) == Fraction(-2, 32)
    assert explicit.k4_minus_one_table(2) == Fraction(5, 32)
    assert explicit.k2_minus_one_table(1) == Fraction(-1, 4)
    assert explicit.k3_cube_root_table(3) == Fraction(1, 3)
    assert explicit.k4_fourth_root_table(4) == Fraction(1, 4)


def test_cube_root_table_kept_as_printed():
    # the printed k = 4 table has -2/9 at n = 3, which is not J^{1,3}_0(3)/9
    assert explicit.k4_cube_root_table(3) == Fraction(-2, 9)
    assert Fraction(closed_form_J013(3), 9) == Fraction(-1, 9)
    assert explicit.k4_cube_root_table(3) == explicit.k4_cube_root_direct(3)


@pytest.mark.parametrize("name, table, direct", explicit.CASE_TABLES, ids=[c[0] for c in explicit.CASE_TABLES])
def test_case_tables(name, table, direct):
    for n in range(1, 5001):
        assert table(n) == direct(n), (name, n)


def test_bad_argument():
    with pytest.raises(DomainError):
        explicit.p3_formula(0)
    with pytest.raises(DomainError):
        explicit.k4_cube_root_table(-1)
