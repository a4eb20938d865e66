from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from copart.cyclo import (
    CycloNum,
    CycloPolynomial,
    ONE,
    RootOfUnity,
    cyclotomic_polynomial,
    embed,
    poly_gcd,
    primitive_roots,
    restrict,
)
from copart.errors import DomainError, LevelError

CYCLO_105 = [
    1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, -1, 0, -1, 0, -1,
    0, -1, 0, -1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, -1, -1, -2, -1, -1, 0, 0, 1, 1, 1,
]


def test_cyclotomic_polynomials():
    assert list(cyclotomic_polynomial(12).coeffs) == [1, 0, -1, 0, 1]
    assert list(cyclotomic_polynomial(1).coeffs) == [-1, 1]
    assert list(cyclotomic_polynomial(105).coeffs) == CYCLO_105


def test_root_canonical_form():
    assert RootOfUnity(4, 2) == RootOfUnity(2, 1)
    assert RootOfUnity(5, 5) == ONE
    assert RootOfUnity(6, -1) == RootOfUnity(6, 5)
    assert str(RootOfUnity(3, 4)) == "3/1"
    assert RootOfUnity(4, 1) * RootOfUnity(4, 1) == RootOfUnity(2, 1)
    with pytest.raises(DomainError):
        RootOfUnity(0, 1)


def test_basic_field_identities():
    i = CycloNum.zeta(4)
    assert i * i == -1
    w = CycloNum.zeta(3)
    assert w + w * w == -1
    assert w.inverse() == w * w
    assert str(embed(RootOfUnity(3, 1), 12)) == "[-1, 0, 1, 0]@12"


def test_embed_needs_divisible_level():
    with pytest.raises(LevelError):
        embed(RootOfUnity(4, 1), 6)


def test_cross_level_equality_and_hash():
    a = CycloNum.rational(Fraction(3, 7), 1)
    b = a.lift(15)
    assert a == b and hash(a) == hash(b)
    w = CycloNum.zeta(3)
    assert w.lift(12) == w and hash(w.lift(12)) == hash(w)


def test_restrict():
    w12 = embed(RootOfUnity(3, 1), 12)
    assert restrict(w12, 3) == CycloNum.zeta(3)
    assert restrict(CycloNum.zeta(12), 3) is None
    assert restrict(CycloNum.zeta(4).lift(12), 4).level == 4


def test_inverse_of_zero():
    with pytest.raises(DomainError):
        CycloNum.zero(5).inverse()


def test_primitive_root_counts():
    assert [len(primitive_roots(m)) for m in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


levels = st.sampled_from([1, 3, 4, 5, 8, 12])


@st.composite
def elements(draw, level=None):
    L = level if level is not None else draw(levels)
    phi = len(CycloNum.zero(L).coeffs)
    small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
    coeffs = draw(st.lists(small, min_size=phi, max_size=phi))
    return CycloNum(L, coeffs)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_field_axioms(data):
    L = data.draw(levels)
    a, b, c = (data.draw(elements(L)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(elements())
def test_conjugation_is_an_involution(a):
    assert a.conjugate().conjugate() == a
    # a * conj(a) is totally real; for rationals it is the square
    q = a.is_rational()
    if q is not None:
        assert (a * a.conjugate()).is_rational() == q * q


@settings(max_examples=40, deadline=None)
@given(elements(), st.sampled_from([2, 3, 5]))
def test_lift_then_restrict_round_trip(a, factor):
    up = a.lift(a.level * factor)
    assert restrict(up, a.level) == a


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=30), st.integers(min_value=0, max_value=60))
def test_zeta_powers(L, e):
    z = CycloNum.zeta(L)
    assert z**e == CycloNum.zeta(L, e)
    assert CycloNum.one(L).times_zeta(e) == CycloNum.zeta(L, e)


def test_polynomial_division_and_gcd():
    x_minus_1 = CycloPolynomial([-1, 1])
    p = CycloPolynomial([1, 0, -1])  # 1 - x^2
    q, r = divmod(p, x_minus_1)
    assert r.is_zero() and q == CycloPolynomial([-1, -1])
    g = poly_gcd(p, CycloPolynomial([-1, 0, 0, 1]))
    assert g == x_minus_1
    i = CycloNum.zeta(4)
    assert poly_gcd(CycloPolynomial([1, 0, 1]), CycloPolynomial([-i, 1])).degree == 1


def test_taylor_shift():
    p = CycloPolynomial([0, 0, 1])  # x^2
    shifted = p.taylor_shift(2)  # (2 + t)^2
    assert shifted == CycloPolynomial([4, 4, 1])
