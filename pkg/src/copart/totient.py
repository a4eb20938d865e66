"""Jordan totient functions and their root, modulo and Dirichlet variants.

Every family has a divisor-sum evaluation (the reference) and a second,
closed-form route; tests and ``copart verify`` check that they agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Optional, Tuple

from .arith import (
    big_omega,
    divisors,
    euler_phi,
    factorize,
    lcm,
    mobius,
    small_omega,
)
from .cyclo import CycloNum, RootOfUnity, _level, embed
from .errors import ConsistencyError, DomainError, PreconditionError


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"degree k must be a non-negative integer, got {k!r}")


# ---------------------------------------------------------------------------
# classic Jordan totient


def jordan_totient(k: int, n: int) -> int:
    """J_k(n) from the prime factorization; J_0 is the indicator of n = 1."""
    _check_k(k)
    _check_n(n)
    if k == 0:
        return int(n == 1)
    result = 1
    for p, e in factorize(n):
        pk = p**k
        result *= pk ** (e - 1) * (pk - 1)
    return result


def jordan_totient_divisor_sum(k: int, n: int) -> int:
    _check_k(k)
    _check_n(n)
    return sum(d**k * mobius(n // d) for d in divisors(n))


# ---------------------------------------------------------------------------
# modulo and root variants


def jordan_mod_totient(k: int, j: int, m: int, n: int) -> int:
    """Divisor sum of d**k * mu(n/d) restricted to d = j (mod m)."""
    _check_k(k)
    _check_n(n)
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"modulus must be >= 1, got {m!r}")
    if not 0 <= j < m:
        raise DomainError(f"residue j must satisfy 0 <= j < m, got j={j}, m={m}")
    return sum(d**k * mobius(n // d) for d in divisors(n) if d % m == j)


def jordan_root_totient(k: int, omega: RootOfUnity, n: int) -> CycloNum:
    """sum over d | n of omega**d * d**k * mu(n/d), at level order(omega)."""
    _check_k(k)
    _check_n(n)
    m, j = omega.m, omega.j
    acc = [0] * m
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            acc[(d * j) % m] += mu * d**k
    return CycloNum._raw(m, _level(m).reduce(acc))


def split_root_into_modulo(k: int, omega: RootOfUnity, n: int) -> CycloNum:
    """J_(k,omega)(n) rebuilt as sum_j omega**j * J_k^{j,m}(n)."""
    m = omega.m
    total = CycloNum.zero(m)
    for j in range(m):
        val = jordan_mod_totient(k, j, m, n)
        if val:
            total = total + embed(omega**j, m) * val
    return total


# ---------------------------------------------------------------------------
# Dirichlet characters


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod ``modulus`` as a value table over residues 0..m-1.

    ``values[r]`` is a :class:`RootOfUnity`, or ``None`` when gcd(r, m) > 1;
    ``None`` is the zero value and never stands for 1.  ``index`` is the
    position in :func:`enumerate_characters` order and ``exponents`` the
    log vector on the chosen generators.
    """

    modulus: int
    values: Tuple[Optional[RootOfUnity], ...]
    index: int = 0
    exponents: Tuple[int, ...] = ()

    def __call__(self, a: int) -> Optional[RootOfUnity]:
        return self.values[a % self.modulus]

    @cached_property
    def order(self) -> int:
        return lcm(*(v.m for v in self.values if v is not None))

    def is_principal(self) -> bool:
        return all(v is None or v.is_one() for v in self.values)

    def value_at(self, a: int, level: int) -> CycloNum:
        v = self(a)
        if v is None:
            return CycloNum.zero(level)
        return embed(v, level)

    def conjugate(self) -> "DirichletCharacter":
        vals = tuple(None if v is None else v.conjugate() for v in self.values)
        return DirichletCharacter(self.modulus, vals)


def _primitive_root_prime_power(p: int, a: int) -> int:
    """Smallest primitive root modulo p**a for an odd prime p."""
    factors = [q for q, _ in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            break
    if a >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@lru_cache(maxsize=None)
def unit_group_generators(m: int) -> tuple:
    """Generators of (Z/mZ)* as (generator, order) pairs.

    One cyclic factor per odd prime power; 4 contributes -1, and 2**a with
    a >= 3 contributes -1 and 5.  Generators are lifted to modulus m by CRT.
    """
    gens = []
    fac = factorize(m)
    for p, a in fac:
        q = p**a
        rest = m // q
        local = []
        if p == 2:
            if a == 2:
                local = [(q - 1, 2)]
            elif a >= 3:
                local = [(q - 1, 2), (5, 2 ** (a - 2))]
        else:
            local = [(_primitive_root_prime_power(p, a), (p - 1) * p ** (a - 1))]
        for g, order in local:
            if rest == 1:
                lifted = g % q
            else:
                # x = g (mod q), x = 1 (mod rest)
                lifted = (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % m
            gens.append((lifted, order))
    return tuple(gens)


@lru_cache(maxsize=None)
def _discrete_logs(m: int) -> dict:
    gens = unit_group_generators(m)
    logs = {1 % m: (0,) * len(gens)}
    for exps in product(*(range(o) for _, o in gens)):
        x = 1 % m
        for (g, _), e in zip(gens, exps):
            x = x * pow(g, e, m) % m
        logs[x] = exps
    if len(logs) != euler_phi(m):
        raise ConsistencyError(f"generator decomposition of (Z/{m}Z)* is wrong")
    return logs


@lru_cache(maxsize=None)
def _characters(m: int) -> tuple:
    gens = unit_group_generators(m)
    orders = [o for _, o in gens]
    E = lcm(*orders)
    logs = _discrete_logs(m)
    chars = []
    for idx, c in enumerate(product(*(range(o) for o in orders))):
        vals = []
        for r in range(m):
            lg = logs.get(r) if math.gcd(r, m) == 1 else None
            if lg is None:
                vals.append(None)
            else:
                e = sum(ci * ei * (E // oi) for ci, ei, oi in zip(c, lg, orders))
                vals.append(RootOfUnity(E, e))
        chars.append(DirichletCharacter(m, tuple(vals), idx, tuple(c)))
    return tuple(chars)


def enumerate_characters(m: int) -> list:
    """All phi(m) Dirichlet characters mod m, principal first."""
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"modulus must be >= 1, got {m!r}")
    return list(_characters(m))


def _dirichlet_weights(k: int, chi: DirichletCharacter, n: int, level: int) -> Optional[list]:
    """J_k(chi; n) as integer weights on the powers of zeta_level; None for zero.

    Each local factor has at most two terms, so the product is kept in the
    group ring Z[x]/(x**level - 1) and reduced only once by the caller.
    """
    acc = [0] * level
    acc[0] = 1
    for p, c in factorize(n):
        v = chi(p)
        if v is None:
            # chi(p) = 0 leaves -1 when p || n and kills the term otherwise
            if c > 1:
                return None
            acc = [-x for x in acc]
            continue
        e = v.j * (level // v.m)
        # p**(k c) * chi(p)**c - p**(k (c-1)) * chi(p)**(c-1)
        high, low = p ** (k * c), p ** (k * (c - 1))
        lo_shift = e * (c - 1)
        hi_shift = lo_shift + e
        out = [0] * level
        for i, x in enumerate(acc):
            if x:
                out[(i + hi_shift) % level] += x * high
                out[(i + lo_shift) % level] -= x * low
        acc = out
    return acc


def jordan_dirichlet(k: int, chi: DirichletCharacter, n: int) -> CycloNum:
    """J_k(chi; n) through the product over prime powers exactly dividing n."""
    _check_k(k)
    _check_n(n)
    L = chi.order
    weights = _dirichlet_weights(k, chi, n, L)
    if weights is None:
        return CycloNum.zero(L)
    return CycloNum.from_powers(L, weights)


def jordan_dirichlet_divisor_sum(k: int, chi: DirichletCharacter, n: int) -> CycloNum:
    _check_k(k)
    _check_n(n)
    L = chi.order
    acc = [0] * L
    for d in divisors(n):
        mu = mobius(n // d)
        v = chi(d)
        if mu and v is not None:
            acc[v.j * (L // v.m) % L] += mu * d**k
    return CycloNum._raw(L, _level(L).reduce(acc))


def jordan_dirichlet_coprime(k: int, chi: DirichletCharacter, n: int) -> CycloNum:
    """n**k chi(n) prod (1 - 1/(chi(p) p**k)); needs gcd(n, modulus) = 1."""
    _check_k(k)
    _check_n(n)
    if math.gcd(n, chi.modulus) != 1:
        raise PreconditionError("n must be coprime to the character modulus")
    L = chi.order
    total = chi.value_at(n, L) * n**k
    for p, _ in factorize(n):
        total = total * (1 - chi.value_at(p, L).inverse() / p**k)
    return total


def dirichlet_from_modulo(k: int, chi: DirichletCharacter, n: int) -> CycloNum:
    """sum over residues j of chi(j) * J_k^{j,m}(n)."""
    m = chi.modulus
    L = chi.order
    total = CycloNum.zero(L)
    for j in range(m):
        if chi(j) is None:
            continue
        val = jordan_mod_totient(k, j, m, n)
        if val:
            total = total + chi.value_at(j, L) * val
    return total


def modulo_from_characters(k: int, j: int, m: int, n: int) -> CycloNum:
    """J_k^{j,m}(n) from the characters mod m by orthogonality, gcd(j, m) = 1."""
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"modulus must be >= 1, got {m!r}")
    if not 0 <= j < m:
        raise DomainError(f"residue j must satisfy 0 <= j < m, got j={j}, m={m}")
    if math.gcd(j, m) != 1:
        raise PreconditionError(f"gcd({j}, {m}) > 1; use reduce_gcd_case")
    _check_k(k)
    _check_n(n)
    chars = _characters(m)
    E = lcm(*(c.order for c in chars))
    total = [0] * E
    for chi in chars:
        weights = _dirichlet_weights(k, chi, n, E)
        if weights is None:
            continue
        v = chi(j)
        # multiply by conj(chi(j)) = zeta_E**(-e)
        back = -v.j * (E // v.m)
        for i, x in enumerate(weights):
            if x:
                total[(i + back) % E] += x
    return CycloNum.from_powers(E, total, euler_phi(m))


def reduce_gcd_case(k: int, j: int, m: int, n: int) -> int:
    """J_k^{j,m}(n) when s = gcd(j, m) > 1, via J_k^{j/s, m/s}(n/s)."""
    _check_k(k)
    _check_n(n)
    if not 0 <= j < m:
        raise DomainError(f"residue j must satisfy 0 <= j < m, got j={j}, m={m}")
    s = math.gcd(j, m)
    if s == 1:
        raise PreconditionError(f"gcd({j}, {m}) = 1; use modulo_from_characters")
    if n % s:
        return 0
    inner = modulo_from_characters(k, j // s, m // s, n // s).is_rational()
    if inner is None or inner.denominator != 1:
        raise ConsistencyError("character reconstruction is not an integer")
    return s**k * inner.numerator


# ---------------------------------------------------------------------------
# closed forms for small special cases


def _split_prime(n: int, p: int) -> Tuple[int, int]:
    b = 0
    while n % p == 0:
        n //= p
        b += 1
    return b, n


def closed_form_J013(n: int) -> int:
    """J_0^{1,3}(n) by the five-branch table."""
    _check_n(n)
    b, m1 = _split_prime(n, 3)
    if n == 1:
        return 1
    if n == 3:
        return -1
    if any(p % 3 == 1 for p, _ in factorize(m1)):
        return 0
    if b >= 2:
        return 0
    return (-1) ** big_omega(n) * 2 ** (small_omega(m1) - 1)


ROOT_TOTIENT_VARIANTS = ("i", "ii", "iii", "iv")


def root_totient_parameters(variant: str, k: Optional[int] = None) -> Tuple[int, RootOfUnity]:
    """(degree, root) of the Jordan root totient a closed form describes."""
    if variant == "i":
        return 0, RootOfUnity(2, 1)
    if variant == "ii":
        return 1, RootOfUnity(2, 1)
    if variant == "iii":
        if k not in (1, 3):
            raise DomainError("variant iii needs k in {1, 3}")
        return 0, RootOfUnity(4, k)
    if variant == "iv":
        if k not in (1, 2):
            raise DomainError("variant iv needs k in {1, 2}")
        return 0, RootOfUnity(3, k)
    raise DomainError(f"unknown variant {variant!r}")


def closed_form_root_totient(variant: str, n: int, k: Optional[int] = None) -> CycloNum:
    """Closed forms of J_(0,-1), J_(1,-1), J_(0,i**k) and J_(0,w**k)."""
    _check_n(n)
    _, omega = root_totient_parameters(variant, k)
    L = omega.m
    if variant == "i":
        value = -1 if n == 1 else 2 if n == 2 else 0
        return CycloNum.rational(value, L)
    if variant == "ii":
        a, _ = _split_prime(n, 2)
        mult = -1 if a == 0 else 3 if a == 1 else 1
        return CycloNum.rational(mult * euler_phi(n), L)
    root = embed(omega, L)
    if variant == "iii":
        a, m = _split_prime(n, 2)
        if n == 1:
            return root
        if n == 2:
            return -1 - root
        if any(p % 4 == 1 for p, _ in factorize(m)):
            return CycloNum.zero(L)
        if n == 4:
            return CycloNum.rational(2, L)
        if a >= 3 or (a == 2 and m > 1):
            return CycloNum.zero(L)
        return root * ((-1) ** big_omega(n) * 2 ** small_omega(m))
    # variant iv
    b, m1 = _split_prime(n, 3)
    if n == 1:
        return root
    if n == 3:
        return 1 - root
    if any(p % 3 == 1 for p, _ in factorize(m1)):
        return CycloNum.zero(L)
    if b >= 2:
        return CycloNum.zero(L)
    sign = (-1) ** big_omega(n)
    return (root - root * root) * (sign * Fraction(2) ** (small_omega(m1) - 1))
