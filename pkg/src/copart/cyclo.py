"""Exact arithmetic in cyclotomic fields Q(zeta_L).

An element is stored in the power basis ``zeta_L**i`` for ``0 <= i < phi(L)``,
reduced modulo the cyclotomic polynomial, so equal values always have equal
coefficient lists.  Internally a :class:`CycloNum` keeps integer numerators
over one positive common denominator.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .arith import divisors, euler_phi, lcm
from .errors import DomainError, LevelError

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# roots of unity


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """The complex number exp(2*pi*i*j/m), stored with gcd(j, m) = 1.

    Construction canonicalizes: ``RootOfUnity(4, 2) == RootOfUnity(2, 1)``
    and the value 1 is always ``RootOfUnity(1, 0)``.
    """

    m: int
    j: int = 1

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise DomainError(f"root of unity order must be >= 1, got {self.m!r}")
        j = self.j % self.m
        g = math.gcd(j, self.m)
        object.__setattr__(self, "m", self.m // g)
        object.__setattr__(self, "j", j // g)

    @property
    def order(self) -> int:
        return self.m

    def is_one(self) -> bool:
        return self.m == 1

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        L = lcm(self.m, other.m)
        return RootOfUnity(L, self.j * (L // self.m) + other.j * (L // other.m))

    def __pow__(self, e: int) -> "RootOfUnity":
        return RootOfUnity(self.m, self.j * e)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.m, -self.j)

    inverse = conjugate

    def __str__(self) -> str:
        return f"{self.m}/{self.j}"


ONE = RootOfUnity(1, 0)


def primitive_roots(m: int) -> list:
    """All primitive m-th roots of unity ordered by exponent."""
    return [RootOfUnity(m, j) for j in range(m) if math.gcd(j, m) == 1]


# ---------------------------------------------------------------------------
# cyclotomic polynomials over Z


class CyclotomicPoly(NamedTuple):
    level: int
    coeffs: tuple  # integer coefficients, low to high

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _int_poly_mul(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_poly_exact_div(num: Sequence[int], den: Sequence[int]) -> list:
    """Quotient of num by the monic polynomial den; the remainder must vanish."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dq = len(num) - len(den)
    quot = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(den) - 1]
        quot[i] = c
        if c:
            for t, d in enumerate(den):
                rem[i + t] -= c * d
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def _phi_coeffs(d: int) -> tuple:
    num = [-1] + [0] * (d - 1) + [1]
    den = [1]
    for e in divisors(d):
        if e < d:
            den = _int_poly_mul(den, _phi_coeffs(e))
    return tuple(_int_poly_exact_div(num, den))


def cyclotomic_polynomial(d: int) -> CyclotomicPoly:
    """Phi_d with integer coefficients, low degree first."""
    if not isinstance(d, int) or d < 1:
        raise DomainError(f"cyclotomic level must be >= 1, got {d!r}")
    return CyclotomicPoly(d, _phi_coeffs(d))


# ---------------------------------------------------------------------------
# per-level reduction tables


class _Level:
    """Reduction data for Q(zeta_L): the rows express zeta_L**e, 0 <= e < L."""

    __slots__ = ("L", "phi", "rows", "sparse")

    def __init__(self, L: int):
        self.L = L
        phi_poly = _phi_coeffs(L)
        deg = len(phi_poly) - 1
        self.phi = deg
        rows = []
        cur = [0] * deg
        cur[0] = 1
        for e in range(L):
            rows.append(tuple(cur))
            # multiply by X and fold the X**deg term back using Phi_L (monic)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg):
                    cur[i] -= top * phi_poly[i]
        self.rows = rows
        self.sparse = [tuple((i, c) for i, c in enumerate(r) if c) for r in rows]

    def reduce(self, poly: Sequence[int]) -> list:
        """Reduce an integer polynomial in zeta_L (any degree) to the basis."""
        L, phi = self.L, self.phi
        if len(poly) > L:
            folded = [0] * L
            for e, c in enumerate(poly):
                folded[e % L] += c
            poly = folded
        out = list(poly[:phi]) + [0] * (phi - min(len(poly), phi))
        sparse = self.sparse
        for e in range(phi, len(poly)):
            c = poly[e]
            if c:
                for i, v in sparse[e]:
                    out[i] += c * v
        return out


_levels: dict = {}
_levels_lock = threading.Lock()


def _level(L: int) -> _Level:
    lev = _levels.get(L)
    if lev is None:
        if not isinstance(L, int) or L < 1:
            raise DomainError(f"cyclotomic level must be >= 1, got {L!r}")
        with _levels_lock:
            lev = _levels.get(L)
            if lev is None:
                lev = _Level(L)
                _levels[L] = lev
    return lev


# ---------------------------------------------------------------------------
# field elements


def _normalize(nums: list, den: int):
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


class CycloNum:
    """An element of Q(zeta_L) in canonical power-basis form."""

    __slots__ = ("level", "_num", "_den")

    def __init__(self, level: int, coeffs: Iterable[Scalar]):
        lev = _level(level)
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != lev.phi:
            raise DomainError(
                f"level {level} needs {lev.phi} coefficients, got {len(fracs)}"
            )
        den = lcm(*(f.denominator for f in fracs)) if fracs else 1
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        self.level = level
        self._num, self._den = _normalize(nums, den)

    @classmethod
    def _raw(cls, level: int, nums: list, den: int = 1) -> "CycloNum":
        obj = object.__new__(cls)
        obj.level = level
        obj._num, obj._den = _normalize(nums, den)
        return obj

    @classmethod
    def rational(cls, value: Scalar, level: int = 1) -> "CycloNum":
        q = Fraction(value)
        nums = [0] * _level(level).phi
        nums[0] = q.numerator
        return cls._raw(level, nums, q.denominator)

    @classmethod
    def zero(cls, level: int = 1) -> "CycloNum":
        return cls.rational(0, level)

    @classmethod
    def one(cls, level: int = 1) -> "CycloNum":
        return cls.rational(1, level)

    @classmethod
    def zeta(cls, level: int, power: int = 1) -> "CycloNum":
        """zeta_L**power."""
        lev = _level(level)
        return cls._raw(level, list(lev.rows[power % level]))

    @classmethod
    def from_powers(cls, level: int, weights: Sequence[int], den: int = 1) -> "CycloNum":
        """sum_e weights[e] * zeta_L**e / den for integer weights."""
        return cls._raw(level, _level(level).reduce(weights), den)

    # -- views -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        d = self._den
        return tuple(Fraction(x, d) for x in self._num)

    @property
    def numerators(self) -> tuple:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> Optional[Fraction]:
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycloNum({self.level}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return f"[{', '.join(str(c) for c in self.coeffs)}]@{self.level}"

    # -- level changes ---------------------------------------------------

    def lift(self, level: int) -> "CycloNum":
        """The same value written at a level that is a multiple of ours."""
        if level == self.level:
            return self
        if level % self.level:
            raise LevelError(f"cannot lift level {self.level} to {level}")
        step = level // self.level
        lev = _level(level)
        poly = [0] * (step * (len(self._num) - 1) + 1)
        for i, c in enumerate(self._num):
            poly[i * step] = c
        return CycloNum._raw(level, lev.reduce(poly), self._den)

    def _coerce(self, other) -> Optional["CycloNum"]:
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(other, self.level)
        return None

    def _align(self, other: "CycloNum"):
        if other.level == self.level:
            return self, other
        L = lcm(self.level, other.level)
        return self.lift(L), other.lift(L)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        da, db = a._den, b._den
        if da == db:
            nums = [x + y for x, y in zip(a._num, b._num)]
            return CycloNum._raw(a.level, nums, da)
        nums = [x * db + y * da for x, y in zip(a._num, b._num)]
        return CycloNum._raw(a.level, nums, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.level, [-x for x in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNum._raw(
                self.level, [x * q.numerator for x in self._num], self._den * q.denominator
            )
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._align(other)
        an, bn = a._num, b._num
        prod = [0] * (len(an) + len(bn) - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        prod[i + j] += x * y
        return CycloNum._raw(a.level, _level(a.level).reduce(prod), a._den * b._den)

    __rmul__ = __mul__

    def times_zeta(self, power: int) -> "CycloNum":
        """Multiply by zeta_L**power without a full product."""
        L = self.level
        lev = _level(L)
        folded = [0] * L
        for i, c in enumerate(self._num):
            if c:
                folded[(i + power) % L] += c
        return CycloNum._raw(L, lev.reduce(folded), self._den)

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise DomainError("inverse of zero in a cyclotomic field")
        q = self.is_rational()
        if q is not None:
            return CycloNum.rational(1 / q, self.level)
        phi_poly = [Fraction(c) for c in _phi_coeffs(self.level)]
        inv = _poly_inverse_mod([Fraction(c, self._den) for c in self._num], phi_poly)
        inv += [Fraction(0)] * (_level(self.level).phi - len(inv))
        return CycloNum(self.level, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DomainError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int) -> "CycloNum":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum.one(self.level)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- automorphisms ---------------------------------------------------

    def galois(self, t: int) -> "CycloNum":
        """Apply zeta_L -> zeta_L**t (t coprime to L)."""
        L = self.level
        if math.gcd(t, L) != 1:
            raise DomainError(f"{t} is not a unit modulo {L}")
        folded = [0] * L
        for i, c in enumerate(self._num):
            if c:
                folded[(i * t) % L] += c
        return CycloNum._raw(L, _level(L).reduce(folded), self._den)

    def conjugate(self) -> "CycloNum":
        return self.galois(-1)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._align(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        # equal values at different levels must collide, so hash an
        # invariant of the value: the trace divided by the field degree
        return hash(_normalized_trace(self))


@lru_cache(maxsize=None)
def _trace_weights(L: int) -> tuple:
    """Tr(zeta_L**i) / phi(L) for 0 <= i < phi(L)."""
    from .arith import mobius

    out = []
    for i in range(_level(L).phi):
        q = L // math.gcd(i, L)
        out.append(Fraction(mobius(q), euler_phi(q)))
    return tuple(out)


def _normalized_trace(a: "CycloNum") -> Fraction:
    w = _trace_weights(a.level)
    return sum((w[i] * c for i, c in enumerate(a._num) if c), Fraction(0)) / a._den


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_frac(a: list, b: list):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for t, d in enumerate(b):
                a[i + t] -= c * d
    return q, _poly_trim(a[: len(b) - 1])


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _poly_trim(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    )


def _poly_mul_frac(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_inverse_mod(a: list, modulus: list) -> list:
    """Inverse of a modulo an irreducible polynomial via extended Euclid."""
    r0, r1 = _poly_trim(list(modulus)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod_frac(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul_frac(q, s1))
    if not r1:
        raise DomainError("element is not invertible")
    c = r1[0]
    _, s = _poly_divmod_frac([x / c for x in s1], modulus)
    return s


# ---------------------------------------------------------------------------
# functional interface


def embed(root: RootOfUnity, level: int) -> CycloNum:
    """The root of unity as an element of Q(zeta_level)."""
    if level % root.m:
        raise LevelError(f"root of order {root.m} does not lie in Q(zeta_{level})")
    return CycloNum.zeta(level, root.j * (level // root.m))


def cyclo_add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def cyclo_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def cyclo_neg(a: CycloNum) -> CycloNum:
    return -a


def cyclo_inv(a: CycloNum) -> CycloNum:
    return a.inverse()


def conjugate(a: CycloNum) -> CycloNum:
    return a.conjugate()


def is_rational(a: CycloNum) -> Optional[Fraction]:
    return a.is_rational()


@lru_cache(maxsize=None)
def _restriction_data(m: int, L: int):
    """Pivot columns and inverse block for solving lift_{m->L}(x) = v."""
    rows = [CycloNum.zeta(m, i).lift(L).coeffs for i in range(_level(m).phi)]
    n, width = len(rows), len(rows[0])
    # row-reduce a copy; its pivot columns are independent columns of rows
    work = [list(r) for r in rows]
    pivots = []
    row = 0
    for col in range(width):
        piv = next((r for r in range(row, n) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        for r in range(row + 1, n):
            if work[r][col] != 0:
                f = work[r][col] / work[row][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    sub = [[rows[k][c] for c in pivots] for k in range(n)]
    return tuple(pivots), _matrix_inverse(sub)


def _matrix_inverse(mat: list) -> list:
    n = len(mat)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == k)) for k in range(n)] for i, r in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [r[n:] for r in aug]


@lru_cache(maxsize=1 << 14)
def restrict(a: CycloNum, level: int) -> Optional[CycloNum]:
    """Rewrite a at a smaller level if its value lies in Q(zeta_level).

    Returns None when it does not.
    """
    L = lcm(a.level, level)
    v = a.lift(L).coeffs
    pivots, inv_sub = _restriction_data(level, L)
    n = len(pivots)
    # x . sub = v[pivots]  =>  x = v[pivots] . inv_sub
    rhs = [v[c] for c in pivots]
    x = [sum((rhs[i] * inv_sub[i][k] for i in range(n)), Fraction(0)) for k in range(n)]
    cand = CycloNum(level, x)
    if cand.lift(L) != a.lift(L):
        return None
    return cand


# ---------------------------------------------------------------------------
# polynomials with cyclotomic coefficients


class CycloPolynomial:
    """Dense univariate polynomial over Q(zeta_L), low degree first."""

    __slots__ = ("coeffs", "level")

    def __init__(self, coeffs: Iterable, level: Optional[int] = None):
        cs = list(coeffs)
        lv = level or 1
        for c in cs:
            if isinstance(c, CycloNum):
                lv = lcm(lv, c.level)
        out = []
        for c in cs:
            if isinstance(c, CycloNum):
                out.append(c.lift(lv))
            else:
                out.append(CycloNum.rational(c, lv))
        while out and out[-1].is_zero():
            out.pop()
        self.coeffs = tuple(out)
        self.level = lv

    @classmethod
    def monomial(cls, degree: int, level: int = 1, coeff=1) -> "CycloPolynomial":
        return cls([0] * degree + [coeff], level)

    @property
    def degree(self):
        """Degree; the zero polynomial has degree -inf."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> CycloNum:
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> CycloNum:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return CycloNum.zero(self.level)

    def __eq__(self, other):
        if isinstance(other, CycloPolynomial):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        return NotImplemented

    def __hash__(self):
        return hash(tuple(hash(c) for c in self.coeffs))

    def __repr__(self):
        return f"CycloPolynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __add__(self, other):
        other = _as_poly(other, self.level)
        n = max(len(self.coeffs), len(other.coeffs))
        return CycloPolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return CycloPolynomial([-c for c in self.coeffs], self.level)

    def __sub__(self, other):
        return self + (-_as_poly(other, self.level))

    def __rsub__(self, other):
        return _as_poly(other, self.level) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return CycloPolynomial([c * other for c in self.coeffs], self.level)
        other = _as_poly(other, self.level)
        if self.is_zero() or other.is_zero():
            return CycloPolynomial([], lcm(self.level, other.level))
        out = [CycloNum.zero(lcm(self.level, other.level))] * (
            len(self.coeffs) + len(other.coeffs) - 1
        )
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return CycloPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = CycloPolynomial([1], self.level)
        for _ in range(e):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _as_poly(other, self.level)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        L = lcm(self.level, other.level)
        rem = [c.lift(L) for c in self.coeffs]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return CycloPolynomial([], L), CycloPolynomial(rem, L)
        inv_lead = other.lead().inverse()
        quot = [CycloNum.zero(L)] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] * inv_lead
            quot[i] = c
            if c:
                for t, d in enumerate(other.coeffs):
                    rem[i + t] = rem[i + t] - c * d
        return CycloPolynomial(quot, L), CycloPolynomial(rem[: len(other.coeffs) - 1], L)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "CycloPolynomial":
        return self * self.lead().inverse()

    def __call__(self, x):
        acc = CycloNum.zero(self.level)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_shift(self, a) -> "CycloPolynomial":
        """Coefficients of self(a + t) as a polynomial in t."""
        coeffs = list(self.coeffs)
        n = len(coeffs)
        # repeated synthetic division by (X - a)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                coeffs[j] = coeffs[j] + a * coeffs[j + 1]
        return CycloPolynomial(coeffs, self.level)


def _as_poly(x, level: int) -> CycloPolynomial:
    if isinstance(x, CycloPolynomial):
        return x
    return CycloPolynomial([x], level)


def poly_gcd(a: CycloPolynomial, b: CycloPolynomial) -> CycloPolynomial:
    """Monic gcd over Q(zeta_L); gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()
