"""Compositions and partitions into exactly k parts, plain and coprime."""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterator, List, Tuple

from .arith import binomial, divisors, falling_factorial_coeffs, mobius
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .totient import jordan_totient

DEFAULT_ENUM_CAP = 150
ENUM_CAP_ENV = "COPART_ENUM_CAP"


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"number of parts k must be >= 1, got {k!r}")


def _check_n(n: int, low: int = 1) -> None:
    if not isinstance(n, int) or n < low:
        raise DomainError(f"n must be an integer >= {low}, got {n!r}")


def enumeration_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None
    return cap


# ---------------------------------------------------------------------------
# compositions


def compositions_count(k: int, n: int) -> int:
    _check_k(k)
    _check_n(n)
    return binomial(n - 1, k - 1)


@dataclass(frozen=True)
class CompositionPolynomial:
    """C_k(X) = (X-1)(X-2)...(X-k+1)/(k-1)!, coefficients low to high."""

    k: int
    coeffs: Tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@lru_cache(maxsize=None)
def composition_polynomial(k: int) -> CompositionPolynomial:
    _check_k(k)
    # coefficient of X**i is s(k, i+1) / (k-1)!
    stirling = falling_factorial_coeffs(k)
    fact = math.factorial(k - 1)
    return CompositionPolynomial(k, tuple(Fraction(stirling[i + 1], fact) for i in range(k)))


def coprime_compositions(k: int, n: int) -> int:
    """c'_k(n) as the rational combination sum_i a_{k,i} J_i(n)."""
    _check_k(k)
    _check_n(n)
    poly = composition_polynomial(k)
    total = sum((c * jordan_totient(i, n) for i, c in enumerate(poly.coeffs)), Fraction(0))
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"c'_{k}({n}) came out as {total}")
    return total.numerator


def coprime_compositions_mobius(k: int, n: int) -> int:
    _check_k(k)
    _check_n(n)
    return sum(mobius(n // d) * compositions_count(k, d) for d in divisors(n))


# ---------------------------------------------------------------------------
# partitions


class _PartitionTable:
    """Rows p_k(0..n) grown on demand from p_k(n) = p_{k-1}(n-1) + p_k(n-k)."""

    def __init__(self):
        self._rows: List[List[int]] = [[1]]  # p_0
        self._width = 1
        self._lock = threading.Lock()

    def get(self, k: int, n: int) -> int:
        rows = self._rows
        if k < len(rows) and n < self._width:
            return rows[k][n]
        with self._lock:
            self._grow(max(k + 1, len(self._rows)), max(n + 1, self._width))
        return self._rows[k][n]

    def _grow(self, nrows: int, width: int) -> None:
        if nrows <= len(self._rows) and width <= self._width:
            return
        # grow geometrically so sequential queries stay linear overall
        if width > self._width:
            width = max(width, 2 * self._width, 64)
        width = max(width, self._width)
        new = [[1] + [0] * (width - 1)]
        for k in range(1, max(nrows, len(self._rows))):
            prev = new[k - 1]
            row = [0] * width
            for n in range(k, width):
                row[n] = prev[n - 1] + row[n - k]
            new.append(row)
        self._rows = new
        self._width = width


_table = _PartitionTable()


def partitions_count(k: int, n: int) -> int:
    """p_k(n), the number of partitions of n into exactly k positive parts."""
    _check_k(k)
    _check_n(n, 0)
    if n < k:
        return 0
    return _table.get(k, n)


def coprime_partitions(k: int, n: int) -> int:
    """p'_k(n) by Mobius inversion of p_k over the divisors of n."""
    _check_k(k)
    _check_n(n)
    total = sum(mobius(n // d) * partitions_count(k, d) for d in divisors(n))
    if total < 0:
        raise ConsistencyError(f"p'_{k}({n}) came out negative")
    return total


# ---------------------------------------------------------------------------
# enumeration oracles


def _check_enumeration(k: int, n: int, cap) -> None:
    _check_k(k)
    _check_n(n)
    if cap is None:
        cap = enumeration_cap()
    if n > cap:
        raise ResourceLimitError(
            f"n = {n} exceeds the enumeration cap {cap} (set {ENUM_CAP_ENV} to raise it)"
        )


def iter_partitions(k: int, n: int, largest: int = None) -> Iterator[Tuple[int, ...]]:
    """Non-increasing k-tuples summing to n, lexicographically decreasing."""
    if largest is None:
        largest = n
    if k == 0:
        if n == 0:
            yield ()
        return
    # first part x with x <= largest and k*x >= n, x >= 1, n - x >= k - 1
    hi = min(largest, n - (k - 1))
    lo = -(-n // k)
    for x in range(hi, lo - 1, -1):
        for rest in iter_partitions(k - 1, n - x, x):
            yield (x,) + rest


def enumerate_partitions(k: int, n: int, cap: int = None) -> list:
    _check_enumeration(k, n, cap)
    return list(iter_partitions(k, n))


def enumerate_coprime_partitions(k: int, n: int, cap: int = None) -> list:
    _check_enumeration(k, n, cap)
    return [p for p in iter_partitions(k, n) if reduce(math.gcd, p) == 1]


def arrangements(parts: Tuple[int, ...]) -> int:
    """Number of distinct orderings of a multiset of parts."""
    total = math.factorial(len(parts))
    for x in set(parts):
        total //= math.factorial(parts.count(x))
    return total


def _orbit_sum(k: int, n: int, largest: int, g: int, weight: int) -> int:
    # walk partitions by distinct part value x (decreasing) and its count c;
    # weight carries prod(1/c!) scaled by the caller's k!
    if k == 0:
        return weight if n == 0 and g == 1 else 0
    if k == 1:
        # the last part is forced to be n
        return weight if 1 <= n <= largest and math.gcd(g, n) == 1 else 0
    total = 0
    for x in range(min(largest, n - k + 1), 0, -1):
        if x * k < n:
            break
        gx = math.gcd(g, x)
        for c in range(1, k + 1):
            rest = n - c * x
            if rest < k - c:
                break
            total += _orbit_sum(k - c, rest, x - 1, gx, weight // math.factorial(c))
    return total


def coprime_compositions_enumerated(k: int, n: int, cap: int = None) -> int:
    """c'_k(n) by visiting every coprime partition and counting its orderings."""
    _check_enumeration(k, n, cap)
    return _orbit_sum(k, n, n, 0, math.factorial(k))


def asymptotic_ratio(k: int, n: int) -> Fraction:
    """p'_k(n) * k! * (k-1)! / J_{k-1}(n); tends to 1 as n grows."""
    if not isinstance(k, int) or k < 2:
        raise DomainError("asymptotic_ratio needs k >= 2")
    if not isinstance(n, int) or n < k:
        raise DomainError("asymptotic_ratio needs n >= k")
    scale = math.factorial(k) * math.factorial(k - 1)
    return Fraction(coprime_partitions(k, n) * scale, jordan_totient(k - 1, n))
