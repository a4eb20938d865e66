"""Integers, rationals and the classical arithmetic functions.

Rationals are :class:`fractions.Fraction` throughout the package.  Factoring
uses a smallest-prime-factor sieve below a configurable bound and Pollard's
rho above it.
"""

from __future__ import annotations

import math
import random
import threading
from fractions import Fraction
from functools import lru_cache, reduce
from typing import List, Tuple

from .errors import DomainError

Rational = Fraction
Factorization = List[Tuple[int, int]]

DEFAULT_SIEVE_BOUND = 10**6


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


class _SpfSieve:
    """Smallest-prime-factor table, built once on first use."""

    def __init__(self, bound: int = DEFAULT_SIEVE_BOUND):
        self.bound = bound
        self._spf = None
        self._lock = threading.Lock()

    def table(self):
        spf = self._spf
        if spf is None:
            with self._lock:
                if self._spf is None:
                    self._spf = _build_spf(self.bound)
                spf = self._spf
        return spf


def _build_spf(bound: int) -> list:
    spf = [0] * bound
    r = math.isqrt(bound - 1) if bound > 1 else 0
    small = _primes_upto(r)
    # descending order: the smallest prime factor is written last
    for p in reversed(small):
        spf[p * p :: p] = [p] * len(range(p * p, bound, p))
    for i in range(2, bound):
        if spf[i] == 0:
            spf[i] = i
    return spf


def _primes_upto(n: int) -> list:
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, f in enumerate(flags) if f]


_sieve = _SpfSieve()


def configure_sieve(bound: int) -> None:
    """Replace the sieve with one of a different bound (rebuilt lazily)."""
    global _sieve
    if bound < 2:
        raise DomainError("sieve bound must be >= 2")
    _sieve = _SpfSieve(bound)
    _factorize_tuple.cache_clear()
    divisors.cache_clear()
    mobius.cache_clear()


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _split_large(d, out)
    _split_large(n // d, out)


@lru_cache(maxsize=1 << 16)
def _factorize_tuple(n: int) -> tuple:
    spf = _sieve.table()
    bound = len(spf)
    counts: dict = {}
    if n >= bound:
        for p in _primes_upto(min(1000, bound - 1)):
            while n % p == 0:
                counts[p] = counts.get(p, 0) + 1
                n //= p
        if n >= bound:
            _split_large(n, counts)
            n = 1
    while n > 1:
        p = spf[n]
        counts[p] = counts.get(p, 0) + 1
        n //= p
    return tuple(sorted(counts.items()))


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n >= 1`` as ``[(p, e), ...]`` with p increasing."""
    _check_positive(n)
    return list(_factorize_tuple(n))


@lru_cache(maxsize=1 << 16)
def divisors(n: int) -> tuple:
    """All positive divisors of n in increasing order."""
    _check_positive(n)
    divs = [1]
    for p, e in _factorize_tuple(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


@lru_cache(maxsize=1 << 16)
def mobius(n: int) -> int:
    _check_positive(n)
    fac = _factorize_tuple(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    _check_positive(n)
    result = 1
    for p, e in _factorize_tuple(n):
        result *= (p - 1) * p ** (e - 1)
    return result


def big_omega(n: int) -> int:
    """Number of prime factors counted with multiplicity."""
    _check_positive(n)
    return sum(e for _, e in _factorize_tuple(n))


def small_omega(n: int) -> int:
    """Number of distinct prime factors."""
    _check_positive(n)
    return len(_factorize_tuple(n))


@lru_cache(maxsize=None)
def lcm_delta(n: int) -> int:
    """lcm(1, 2, ..., n)."""
    _check_positive(n)
    acc = 1
    for m in range(2, n + 1):
        acc = acc * m // math.gcd(acc, m)
    return acc


def binomial(n: int, r: int) -> int:
    if n < 0 or r < 0:
        raise DomainError("binomial needs non-negative arguments")
    return math.comb(n, r)


@lru_cache(maxsize=None)
def falling_factorial_coeffs(k: int) -> tuple:
    """Integer coefficients (low to high) of X(X-1)...(X-k+1)."""
    if k < 0:
        raise DomainError("k must be >= 0")
    poly = [1]
    for r in range(k):
        # multiply by (X - r)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= r * c
        poly = nxt
    return tuple(poly)


def stirling_first(k: int, i: int) -> int:
    """Signed Stirling number of the first kind s(k, i), 1 <= i <= k."""
    if k < 1 or i < 1 or i > k:
        raise DomainError(f"stirling_first needs 1 <= i <= k, got k={k}, i={i}")
    return falling_factorial_coeffs(k)[i]


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def as_integer(q: Fraction) -> int:
    """Return q as an int, raising if it has a denominator."""
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return q.numerator
