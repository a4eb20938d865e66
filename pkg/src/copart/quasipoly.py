"""Binet decomposition of the k-partition generating function.

z**k / prod_{m<=k} (1 - z**m) is split into partial fractions over the
cyclotomic field of level lcm(1..k).  From the pieces we get p_k(n) as a sum
of polynomial-times-root-power terms, its quasi-polynomial form, and p'_k(n)
as a combination of Jordan root totients.

Pole data for a root of order m is worked out in Q(zeta_m) and only lifted
to the big level for storage; evaluation restricts back down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence, Tuple

from .arith import binomial, lcm, lcm_delta
from .cyclo import (
    CycloNum,
    CycloPolynomial,
    RootOfUnity,
    embed,
    poly_gcd,
    primitive_roots,
    restrict,
)
from .errors import ConsistencyError, DomainError, PreconditionError
from .partition import composition_polynomial, partitions_count
from .totient import jordan_root_totient


@dataclass(frozen=True)
class RootSpec:
    """A root omega of unity with the multiplicity of the factor (1 - omega z)."""

    root: RootOfUnity
    multiplicity: int

    def __post_init__(self):
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise DomainError(f"multiplicity must be >= 1, got {self.multiplicity!r}")


@dataclass(frozen=True)
class BinetTerm:
    spec: RootSpec
    coeffs: Tuple[CycloNum, ...]  # P(n) = sum coeffs[t] * n**t

    @property
    def root(self) -> RootOfUnity:
        return self.spec.root

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _horner(coeffs: Sequence[CycloNum], n: int) -> CycloNum:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * n + c
    return acc


def _natural(coeffs: Sequence[CycloNum], order: int) -> tuple:
    """coefficients written at level `order` when all of them fit, else unchanged."""
    low = tuple(c if c.level == order else restrict(c, order) for c in coeffs)
    if any(c is None for c in low):
        return tuple(coeffs)
    return low


@dataclass(frozen=True)
class BinetDecomposition:
    """a_n = sum_j P_j(n) * omega_j**n, coefficients stored at one level."""

    k: Optional[int]
    level: int
    terms: Tuple[BinetTerm, ...]

    @cached_property
    def _groups(self) -> list:
        # terms bucketed by root order; each coefficient at the lowest level
        # we can manage so evaluation stays in small fields
        groups: dict = {}
        for term in self.terms:
            m = term.root.m
            coeffs = _natural(term.coeffs, m)
            groups.setdefault(m, []).append((term.root, coeffs))
        return sorted(groups.items())

    def evaluate(self, n: int) -> CycloNum:
        """sum_j P_j(n) omega_j**n as an element of Q(zeta_level)."""
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"n must be a non-negative integer, got {n!r}")
        rational = Fraction(0)
        rest = None
        for _, members in self._groups:
            acc = None
            for root, coeffs in members:
                lv = coeffs[0].level
                val = _horner(coeffs, n).times_zeta(root.j * (lv // root.m) * n)
                acc = val if acc is None else acc + val
            q = acc.is_rational()
            if q is None:
                rest = acc if rest is None else rest + acc
            else:
                rational += q
        out = CycloNum.rational(rational, self.level)
        if rest is not None:
            out = out + rest.lift(self.level)
        return out


@dataclass(frozen=True)
class CombinationTerm:
    degree: int
    root: RootOfUnity
    coeff: CycloNum


@dataclass(frozen=True)
class CoprimeCombination:
    """p'_k(n) = sum coeff * J_(degree, root)(n)."""

    k: int
    entries: Tuple[CombinationTerm, ...]

    @cached_property
    def _groups(self) -> list:
        groups: dict = {}
        for e in self.entries:
            groups.setdefault(e.root.m, []).append(
                (e.degree, e.root, _natural((e.coeff,), e.root.m)[0])
            )
        return sorted(groups.items())


@dataclass(frozen=True)
class QuasiPolynomial:
    """f(n) = sum_t coeffs[t][n mod period] * n**t with rational tables."""

    period: int
    coeffs: Tuple[Tuple[Fraction, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, n: int) -> Fraction:
        r = n % self.period
        acc = Fraction(0)
        for row in reversed(self.coeffs):
            acc = acc * n + row[r]
        return acc


# ---------------------------------------------------------------------------
# truncated power series over one cyclotomic level


def _series_mul(a: list, b: list, size: int) -> list:
    level = lcm(*(x.level for x in a + b if isinstance(x, CycloNum)))
    out = []
    for i in range(size):
        acc = None
        for x in range(max(0, i - len(b) + 1), min(i + 1, len(a))):
            term = a[x] * b[i - x]
            acc = term if acc is None else acc + term
        out.append(CycloNum.zero(level) if acc is None else acc)
    return out


def _series_inv(a: list, size: int) -> list:
    inv0 = a[0].inverse()
    out = [inv0]
    for i in range(1, size):
        acc = None
        for x in range(1, min(i, len(a) - 1) + 1):
            term = a[x] * out[i - x]
            acc = term if acc is None else acc + term
        out.append(-(acc * inv0) if acc is not None else inv0 * 0)
    return out


def _pad(series: list, size: int, level: int) -> list:
    series = list(series[:size])
    return series + [CycloNum.zero(level)] * (size - len(series))


def _pole_parts(numer: list, denom: list, b: int) -> list:
    """[s_1, ..., s_b] from Q(z0 + t) and P(z0 + t) / t**b as series in t."""
    level = numer[0].level if numer else denom[0].level
    quotient = _series_mul(_pad(numer, b, level), _series_inv(_pad(denom, b, level), b), b)
    return [quotient[b - i] for i in range(1, b + 1)]


def _binet_coefficients(alpha: CycloNum, s: list) -> list:
    """Coefficients u_0..u_{b-1} of P(n) from the pole parts s_i at 1/alpha.

    s_i / (z - 1/alpha)**i = (-alpha)**i s_i / (1 - alpha z)**i, and the
    n-th coefficient of 1/(1 - alpha z)**i is C_i(n + i) alpha**n.
    """
    b = len(s)
    weights = []
    power = alpha * 0 + 1
    for i in range(1, b + 1):
        power = power * (-alpha)
        weights.append(power * s[i - 1])
    out = []
    for t in range(b):
        acc = alpha * 0
        for i in range(t + 1, b + 1):
            poly = composition_polynomial(i).coeffs
            scale = sum(
                (poly[l] * binomial(l, t) * i ** (l - t) for l in range(t, i)), Fraction(0)
            )
            if scale:
                acc = acc + weights[i - 1] * scale
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# the k-partition engine


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise DomainError(f"k must be an integer >= 2, got {k!r}")


def denominator_roots(k: int) -> List[RootSpec]:
    """Roots of prod_{m<=k}(1 - z**m) as factors (1 - omega z)**b, b = k // m."""
    _check_k(k)
    return [RootSpec(w, k // m) for m in range(1, k + 1) for w in primitive_roots(m)]


def _local_data(k: int, spec: RootSpec) -> list:
    """Pole parts s_1..s_b at 1/omega, computed in Q(zeta_order)."""
    m = spec.root.m
    b = spec.multiplicity
    z0 = embed(spec.root.conjugate(), m)
    step = spec.root.conjugate().j  # z0 = zeta_m**step
    one = CycloNum.one(m)
    zeros = 0
    denom = None
    for e in range(1, k + 1):
        # 1 - (z0 + t)**e = (1 - z0**e) - sum_{r>=1} C(e, r) z0**(e-r) t**r
        series = [one - one.times_zeta(step * e)]
        for r in range(1, min(b + 1, e) + 1):
            series.append(one.times_zeta(step * (e - r)) * (-binomial(e, r)))
        if series[0].is_zero():
            zeros += 1
            series = series[1:]
            if not series or series[0].is_zero():
                raise ConsistencyError(f"1 - z**{e} has a repeated root at 1/{spec.root}")
        denom = series if denom is None else _series_mul(denom, series, b)
    if zeros != b:
        raise ConsistencyError(
            f"root {spec.root} of order {m}: expected multiplicity {b}, found {zeros}"
        )
    numer = [one.times_zeta(step * (k - r)) * binomial(k, r) for r in range(min(b, k + 1))]
    return _pole_parts(numer, denom, b)


@lru_cache(maxsize=None)
def _natural_decomposition(k: int) -> tuple:
    """(spec, s-values, u-values) per root, each at the root's own level."""
    out = []
    for spec in denominator_roots(k):
        s = _local_data(k, spec)
        if s[-1].is_zero():
            raise ConsistencyError(f"top pole coefficient vanishes at {spec.root}")
        u = _binet_coefficients(embed(spec.root, spec.root.m), s)
        if u[-1].is_zero():
            raise ConsistencyError(f"P at {spec.root} drops below degree {spec.multiplicity - 1}")
        out.append((spec, tuple(s), tuple(u)))
    return tuple(out)


def partial_fraction(k: int) -> list:
    """[(RootSpec, (s_1..s_b))] with z**k/P(z) = sum s_i/(z - 1/omega)**i."""
    _check_k(k)
    L = lcm_delta(k)
    return [(spec, tuple(x.lift(L) for x in s)) for spec, s, _ in _natural_decomposition(k)]


@lru_cache(maxsize=None)
def quasi_polynomial(k: int) -> QuasiPolynomial:
    """p_k as a quasi-polynomial with period lcm(1..k)."""
    _check_k(k)
    period = lcm_delta(k)
    tables = [[Fraction(0)] * period for _ in range(k)]
    by_order: dict = {}
    for spec, _, u in _natural_decomposition(k):
        by_order.setdefault(spec.root.m, []).append((spec.root.j, u))
    for m, members in by_order.items():
        for t in range(k // m):
            # sum over the primitive m-th roots is Galois-stable, hence rational
            cycle = []
            for r in range(m):
                acc = CycloNum.zero(m)
                for j, u in members:
                    acc = acc + u[t].times_zeta(j * r)
                q = acc.is_rational()
                if q is None:
                    raise ConsistencyError(f"order-{m} constituent of degree {t} is not rational")
                cycle.append(q)
            row = tables[t]
            for r in range(period):
                row[r] += cycle[r % m]
    return QuasiPolynomial(period, tuple(tuple(row) for row in tables))


def _self_check(k: int) -> None:
    qp = quasi_polynomial(k)
    horizon = 3 * qp.period * k
    for n in range(1, horizon + 1):
        got = qp(n)
        want = partitions_count(k, n)
        if got != want:
            raise ConsistencyError(f"Binet form gives p_{k}({n}) = {got}, expected {want}")


@lru_cache(maxsize=None)
def binet_decompose(k: int) -> BinetDecomposition:
    """p_k(n) = sum_j P_j(n) omega_j**n with coefficients in Q(zeta_lcm(1..k))."""
    _check_k(k)
    L = lcm_delta(k)
    terms = tuple(
        BinetTerm(spec, tuple(c.lift(L) for c in u)) for spec, _, u in _natural_decomposition(k)
    )
    _self_check(k)
    return BinetDecomposition(k, L, terms)


def evaluate_binet(decomp: BinetDecomposition, n: int) -> CycloNum:
    return decomp.evaluate(n)


def evaluate_partitions(decomp: BinetDecomposition, n: int) -> int:
    """The Binet form at n, checked to be a non-negative integer."""
    q = decomp.evaluate(n).is_rational()
    if q is None or q.denominator != 1 or q < 0:
        raise ConsistencyError(f"Binet form at n={n} is not a count: {decomp.evaluate(n)}")
    return q.numerator


def polynomial_part(k: int) -> Tuple[Fraction, ...]:
    """Rational coefficients (low to high) of the term at omega = 1."""
    _check_k(k)
    _, _, u = _natural_decomposition(k)[0]
    return tuple(c.is_rational() for c in u)


def quasi_period(k: int) -> int:
    _check_k(k)
    orders = lcm(*(spec.root.m for spec, _, _ in _natural_decomposition(k)))
    if orders != lcm_delta(k):
        raise ConsistencyError(f"roots for k={k} generate period {orders}")
    return orders


def quasi_degree_remainder(k: int) -> int:
    """Largest degree among the P_j with omega_j != 1; always k // 2 - 1."""
    _check_k(k)
    degrees = [len(u) - 1 for spec, _, u in _natural_decomposition(k) if not spec.root.is_one()]
    minus_one = next(len(u) - 1 for spec, _, u in _natural_decomposition(k) if spec.root.m == 2)
    if max(degrees) != k // 2 - 1 or minus_one != k // 2 - 1:
        raise ConsistencyError(f"remainder degree for k={k} is {max(degrees)}")
    return max(degrees)


# ---------------------------------------------------------------------------
# coprime partitions


@lru_cache(maxsize=None)
def coprime_combination(k: int) -> CoprimeCombination:
    """p'_k as sum of u_{j,t} J_(t, omega_j), in the order of the Binet terms."""
    decomp = binet_decompose(k)
    entries = tuple(
        CombinationTerm(t, term.root, c)
        for term in decomp.terms
        for t, c in enumerate(term.coeffs)
    )
    return CoprimeCombination(k, entries)


def evaluate_combination(comb: CoprimeCombination, n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n!r}")
    total = Fraction(0)
    rest = None
    for _, members in comb._groups:
        acc = None
        for degree, root, coeff in members:
            val = coeff * jordan_root_totient(degree, root, n)
            acc = val if acc is None else acc + val
        q = acc.is_rational()
        if q is None:
            rest = acc if rest is None else rest + acc
        else:
            total += q
    if rest is not None:
        q = rest.is_rational()
        if q is None:
            raise ConsistencyError(f"combination for k={comb.k} is irrational at n={n}")
        total += q
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"combination for k={comb.k} gives {total} at n={n}")
    return total.numerator


# ---------------------------------------------------------------------------
# general rational generating functions


def series_coefficients(numer: CycloPolynomial, denom: CycloPolynomial, count: int) -> list:
    """First `count` Taylor coefficients of numer/denom at z = 0."""
    L = lcm(numer.level, denom.level)
    if denom[0].is_zero():
        raise DomainError("denominator vanishes at z = 0")
    n = [c.lift(L) for c in numer.coeffs]
    d = [c.lift(L) for c in denom.coeffs]
    return _series_mul(_pad(n, count, L), _series_inv(_pad(d, count, L), count), count)


def factored_denominator(factors: Sequence[RootSpec], level: int = 1) -> CycloPolynomial:
    """prod (1 - omega z)**b as a polynomial."""
    L = lcm(level, *(f.root.m for f in factors))
    out = CycloPolynomial([1], L)
    for f in factors:
        out = out * CycloPolynomial([1, -embed(f.root, L)], L) ** f.multiplicity
    return out


def generic_binet(numer, factors: Sequence[RootSpec]) -> BinetDecomposition:
    """Binet form of numer(z) / prod (1 - omega_j z)**b_j.

    The numerator must have smaller degree than the denominator and share no
    root with it.
    """
    if not isinstance(numer, CycloPolynomial):
        numer = CycloPolynomial(numer)
    factors = list(factors)
    if not factors:
        raise DomainError("need at least one denominator factor")
    roots = [f.root for f in factors]
    if len(set(roots)) != len(roots):
        raise DomainError("denominator roots must be distinct; merge multiplicities")
    total = sum(f.multiplicity for f in factors)
    if numer.degree >= total:
        raise DomainError(f"numerator degree {numer.degree} is not below {total}")
    L = lcm(numer.level, *(w.m for w in roots))
    denom = factored_denominator(factors, L)
    if numer.is_zero() or poly_gcd(denom, numer).degree != 0:
        raise PreconditionError("numerator and denominator are not coprime")

    terms = []
    for f in factors:
        b = f.multiplicity
        alpha = embed(f.root, L)
        z0 = embed(f.root.conjugate(), L)
        shifted = list(numer.taylor_shift(z0).coeffs)
        # (1 - alpha z)**b = (-alpha t)**b; the other factors are units at t = 0
        cofactor = [(-alpha) ** b]
        for g in factors:
            if g.root == f.root:
                continue
            beta = embed(g.root, L)
            lin = [1 - beta * z0, -beta]
            for _ in range(g.multiplicity):
                cofactor = _series_mul(cofactor, lin, b)
        s = _pole_parts(shifted or [CycloNum.zero(L)], cofactor, b)
        if s[-1].is_zero():
            raise ConsistencyError(f"top pole coefficient vanishes at {f.root}")
        terms.append(BinetTerm(f, tuple(_binet_coefficients(alpha, s))))
    return BinetDecomposition(None, L, tuple(terms))
