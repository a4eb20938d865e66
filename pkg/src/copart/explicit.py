"""Hand-derived formulas for p_k and p'_k with k = 2, 3, 4.

These are written out directly, independent of the Binet engine, so the
engine can be checked against them.  Cyclotomic values live in Q(zeta_12),
which holds -1, i and the cube roots of unity at once.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import big_omega, euler_phi, factorize, small_omega
from .cyclo import CycloNum, RootOfUnity
from .errors import ConsistencyError, DomainError
from .totient import jordan_root_totient, jordan_totient

_LEVEL = 12
_I = CycloNum.zeta(_LEVEL, 3)
_W = CycloNum.zeta(_LEVEL, 4)  # exp(2 pi i / 3)
_WBAR = _W.conjugate()
_I_SQRT3 = _W - _WBAR  # i * sqrt(3)

MINUS_ONE = RootOfUnity(2, 1)
ROOT_I = RootOfUnity(4, 1)
ROOT_MINUS_I = RootOfUnity(4, 3)
ROOT_W = RootOfUnity(3, 1)
ROOT_WBAR = RootOfUnity(3, 2)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n!r}")


def _rational(x: CycloNum) -> Fraction:
    q = x.is_rational()
    if q is None:
        raise ConsistencyError(f"expected a rational value, got {x}")
    return q


def _J(k: int, root: RootOfUnity, n: int) -> CycloNum:
    return jordan_root_totient(k, root, n).lift(_LEVEL)


def _split_three(n: int):
    b = 0
    while n % 3 == 0:
        n //= 3
        b += 1
    return b, n


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


# -- p_k(n) ------------------------------------------------------------------


def p2_formula(n: int) -> Fraction:
    _check_n(n)
    return Fraction(2 * n - 1, 4) + Fraction(_sign(n), 4)


def p3_formula(n: int) -> Fraction:
    _check_n(n)
    periodic = (_W**n + _WBAR**n) / 9
    return Fraction(n * n, 12) - Fraction(7, 72) - Fraction(_sign(n), 8) + _rational(periodic)


def _p4_periodic(n: int) -> CycloNum:
    quarter = (_I**n + (-_I) ** n) / 16
    third = (_W ** (n + 1) - _WBAR ** (n + 1)) / (_I_SQRT3 * 9)
    return quarter - third


def p4_formula(n: int) -> Fraction:
    """Polynomial part, the (n+1)(-1)**n/32 term, then the periodic rest."""
    _check_n(n)
    poly = Fraction(n**3, 144) + Fraction(n**2, 48) - Fraction(n, 32) - Fraction(13, 288)
    return poly + Fraction(_sign(n) * (n + 1), 32) + _rational(_p4_periodic(n))


def p4_quasi_formula(n: int) -> Fraction:
    """Same value grouped as a quasi-polynomial: periodic coefficient of n split out."""
    _check_n(n)
    linear = Fraction(-1 + _sign(n), 32) * n
    head = Fraction(n**3, 144) + Fraction(n**2, 48) + linear - Fraction(13, 288)
    return head + Fraction(_sign(n), 32) + _rational(_p4_periodic(n))


P4_POLYNOMIAL_PART = (Fraction(-13, 288), Fraction(-1, 32), Fraction(1, 48), Fraction(1, 144))


# -- p'_k(n) as Jordan root totient combinations -------------------------------


def coprime_p2_formula(n: int) -> Fraction:
    _check_n(n)
    total = (
        Fraction(1, 2) * jordan_totient(1, n)
        - Fraction(1, 4) * jordan_totient(0, n)
        + _J(0, MINUS_ONE, n) / 4
    )
    return _rational(total)


def coprime_p3_formula(n: int) -> Fraction:
    _check_n(n)
    total = (
        Fraction(1, 12) * jordan_totient(2, n)
        - Fraction(7, 72) * jordan_totient(0, n)
        - _J(0, MINUS_ONE, n) / 8
        + (_J(0, ROOT_W, n) + _J(0, ROOT_WBAR, n)) / 9
    )
    return _rational(total)


def coprime_p4_formula(n: int) -> Fraction:
    _check_n(n)
    polynomial = (
        Fraction(1, 144) * jordan_totient(3, n)
        + Fraction(1, 48) * jordan_totient(2, n)
        - Fraction(1, 32) * jordan_totient(1, n)
        - Fraction(13, 288) * jordan_totient(0, n)
    )
    total = (
        polynomial
        + (_J(1, MINUS_ONE, n) + _J(0, MINUS_ONE, n)) / 32
        + (_J(0, ROOT_I, n) + _J(0, ROOT_MINUS_I, n)) / 16
        - (_I_SQRT3 + 3) / 54 * _J(0, ROOT_W, n)
        + (_I_SQRT3 - 3) / 54 * _J(0, ROOT_WBAR, n)
    )
    return _rational(total)


# -- rational case tables for the root terms ---------------------------------


def k2_minus_one_table(n: int) -> Fraction:
    """(1/4) J_(0,-1)(n)."""
    _check_n(n)
    return {1: Fraction(-1, 4), 2: Fraction(1, 2)}.get(n, Fraction(0))


def k3_minus_one_table(n: int) -> Fraction:
    """-(1/8) J_(0,-1)(n)."""
    _check_n(n)
    return {1: Fraction(1, 8), 2: Fraction(-1, 4)}.get(n, Fraction(0))


def k3_cube_root_table(n: int) -> Fraction:
    """(1/9) (J_(0,w) + J_(0,w bar))(n)."""
    _check_n(n)
    return {1: Fraction(-1, 9), 3: Fraction(1, 3)}.get(n, Fraction(0))


def k4_minus_one_table(n: int) -> Fraction:
    """(1/32) (J_(1,-1) + J_(0,-1))(n)."""
    _check_n(n)
    if n == 1:
        return Fraction(-2, 32)
    if n == 2:
        return Fraction(5, 32)
    if n % 2:
        return Fraction(-euler_phi(n), 32)
    if n % 4 == 2:
        return Fraction(3 * euler_phi(n), 32)
    return Fraction(euler_phi(n), 32)


def k4_fourth_root_table(n: int) -> Fraction:
    """(1/16) (J_(0,i) + J_(0,-i))(n)."""
    _check_n(n)
    return Fraction({2: -2, 4: 4}.get(n, 0), 16)


def k4_cube_root_table(n: int) -> Fraction:
    """The two cube-root terms of p'_4 together, with n = 3**b * m1."""
    _check_n(n)
    b, m1 = _split_three(n)
    if n == 1:
        return Fraction(1, 9)
    if n == 3:
        return Fraction(-2, 9)
    if any(p % 3 == 1 for p, _ in factorize(m1)):
        return Fraction(0)
    if b >= 2:
        return Fraction(0)
    return Fraction((-1) ** big_omega(n) * 2 ** (small_omega(m1) - 1), 9)


def k4_cube_root_direct(n: int) -> Fraction:
    _check_n(n)
    total = -(_I_SQRT3 + 3) / 54 * _J(0, ROOT_W, n) + (_I_SQRT3 - 3) / 54 * _J(0, ROOT_WBAR, n)
    return _rational(total)


def k4_minus_one_direct(n: int) -> Fraction:
    _check_n(n)
    return _rational((_J(1, MINUS_ONE, n) + _J(0, MINUS_ONE, n)) / 32)


def k4_fourth_root_direct(n: int) -> Fraction:
    _check_n(n)
    return _rational((_J(0, ROOT_I, n) + _J(0, ROOT_MINUS_I, n)) / 16)


def k2_minus_one_direct(n: int) -> Fraction:
    _check_n(n)
    return _rational(_J(0, MINUS_ONE, n) / 4)


def k3_minus_one_direct(n: int) -> Fraction:
    _check_n(n)
    return _rational(-_J(0, MINUS_ONE, n) / 8)


def k3_cube_root_direct(n: int) -> Fraction:
    _check_n(n)
    return _rational((_J(0, ROOT_W, n) + _J(0, ROOT_WBAR, n)) / 9)


# (name, printed table, divisor-sum evaluation)
CASE_TABLES = (
    ("k2 J(0,-1)/4", k2_minus_one_table, k2_minus_one_direct),
    ("k3 -J(0,-1)/8", k3_minus_one_table, k3_minus_one_direct),
    ("k3 (J(0,w)+J(0,w^2))/9", k3_cube_root_table, k3_cube_root_direct),
    ("k4 (J(1,-1)+J(0,-1))/32", k4_minus_one_table, k4_minus_one_direct),
    ("k4 (J(0,i)+J(0,-i))/16", k4_fourth_root_table, k4_fourth_root_direct),
    ("k4 cube-root terms", k4_cube_root_table, k4_cube_root_direct),
)

PARTITION_FORMULAS = {2: p2_formula, 3: p3_formula, 4: p4_formula}
COPRIME_FORMULAS = {2: coprime_p2_formula, 3: coprime_p3_formula, 4: coprime_p4_formula}
