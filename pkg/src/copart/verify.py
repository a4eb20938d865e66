"""Invariant suites behind ``copart verify``.

Each suite walks a bounded range and stops at the first counterexample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Tuple

from . import explicit
from .arith import divisors
from .cyclo import primitive_roots
from .errors import CopartError
from .partition import (
    compositions_count,
    coprime_compositions,
    coprime_compositions_enumerated,
    coprime_compositions_mobius,
    coprime_partitions,
    enumerate_coprime_partitions,
    enumerate_partitions,
    partitions_count,
)
from .quasipoly import binet_decompose, coprime_combination, evaluate_combination, evaluate_partitions
from .totient import (
    ROOT_TOTIENT_VARIANTS,
    closed_form_J013,
    closed_form_root_totient,
    dirichlet_from_modulo,
    enumerate_characters,
    jordan_dirichlet,
    jordan_dirichlet_divisor_sum,
    jordan_mod_totient,
    jordan_root_totient,
    jordan_totient,
    jordan_totient_divisor_sum,
    root_totient_parameters,
    modulo_from_characters,
    reduce_gcd_case,
    split_root_into_modulo,
)

SUITES = ("totient", "partition", "binet", "golden")

# ranges that are expensive per point are clipped independently of --n-max
_ENUM_LIMIT = 40
_CHARACTER_MODULI = 8


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure is None


Check = Tuple[str, Callable[[], object], Callable[[], object]]


def _run(name: str, cases: Iterator[Check]) -> SuiteResult:
    # the case generators yield closures over their loop variables; each one
    # is called before the generator resumes, so late binding is harmless
    result = SuiteResult(name)
    for label, got, want in cases:
        try:
            a, b = got(), want()
        except CopartError as exc:
            result.failure = f"{label}: {type(exc).__name__}: {exc}"
            return result
        result.checks += 1
        if a != b:
            result.failure = f"{label}: got {a}, expected {b}"
            return result
    return result


def _totient_cases(k_max: int, n_max: int) -> Iterator[Check]:
    kk = min(k_max, 3)
    for k in range(kk + 1):
        for n in range(1, n_max + 1):
            yield (f"J_{k}({n})", lambda: jordan_totient(k, n), lambda: jordan_totient_divisor_sum(k, n))
    for m in range(1, 7):
        for w in primitive_roots(m):
            for n in range(1, n_max + 1):
                yield (
                    f"J_({kk},{w})({n}) via residues",
                    lambda: split_root_into_modulo(kk, w, n),
                    lambda: jordan_root_totient(kk, w, n),
                )
    top = min(n_max, 200)
    for m in range(1, _CHARACTER_MODULI + 1):
        for chi in enumerate_characters(m):
            for n in range(1, top + 1):
                yield (
                    f"J_1(chi_{chi.index} mod {m};{n})",
                    lambda: jordan_dirichlet(1, chi, n),
                    lambda: jordan_dirichlet_divisor_sum(1, chi, n),
                )
                yield (
                    f"J_1(chi_{chi.index} mod {m};{n}) from residues",
                    lambda: dirichlet_from_modulo(1, chi, n),
                    lambda: jordan_dirichlet_divisor_sum(1, chi, n),
                )
        for j in range(m):
            for n in range(1, top + 1):
                if math.gcd(j, m) == 1:
                    yield (
                        f"J_1^{{{j},{m}}}({n}) from characters",
                        lambda: modulo_from_characters(1, j, m, n),
                        lambda: jordan_mod_totient(1, j, m, n),
                    )
                else:
                    yield (
                        f"J_1^{{{j},{m}}}({n}) reduced",
                        lambda: reduce_gcd_case(1, j, m, n),
                        lambda: jordan_mod_totient(1, j, m, n),
                    )
    for n in range(1, n_max + 1):
        yield (f"J_0^{{1,3}}({n}) closed form", lambda: closed_form_J013(n), lambda: jordan_mod_totient(0, 1, 3, n))
        for variant in ROOT_TOTIENT_VARIANTS:
            ks = {"iii": (1, 3), "iv": (1, 2)}.get(variant, (None,))
            for k in ks:
                degree, w = root_totient_parameters(variant, k)
                yield (
                    f"closed form {variant} (k={k}) at {n}",
                    lambda: closed_form_root_totient(variant, n, k),
                    lambda: jordan_root_totient(degree, w, n),
                )


def _partition_cases(k_max: int, n_max: int) -> Iterator[Check]:
    for k in range(1, k_max + 1):
        for n in range(1, n_max + 1):
            yield (
                f"sum of p'_{k} over divisors of {n}",
                lambda: sum(coprime_partitions(k, d) for d in divisors(n)),
                lambda: partitions_count(k, n),
            )
            yield (
                f"sum of c'_{k} over divisors of {n}",
                lambda: sum(coprime_compositions(k, d) for d in divisors(n)),
                lambda: compositions_count(k, n),
            )
            yield (f"c'_{k}({n}) two routes", lambda: coprime_compositions(k, n), lambda: coprime_compositions_mobius(k, n))
        for n in range(1, min(n_max, _ENUM_LIMIT) + 1):
            yield (f"p_{k}({n}) by listing", lambda: len(enumerate_partitions(k, n)), lambda: partitions_count(k, n))
            yield (
                f"p'_{k}({n}) by listing",
                lambda: len(enumerate_coprime_partitions(k, n)),
                lambda: coprime_partitions(k, n),
            )
            yield (
                f"c'_{k}({n}) by listing",
                lambda: coprime_compositions_enumerated(k, n),
                lambda: coprime_compositions(k, n),
            )


def _binet_cases(k_max: int, n_max: int) -> Iterator[Check]:
    for k in range(2, k_max + 1):
        decomp = binet_decompose(k)
        comb = coprime_combination(k)
        for n in range(1, n_max + 1):
            yield (f"Binet p_{k}({n})", lambda: evaluate_partitions(decomp, n), lambda: partitions_count(k, n))
            yield (f"combination p'_{k}({n})", lambda: evaluate_combination(comb, n), lambda: coprime_partitions(k, n))


def _golden_cases(k_max: int, n_max: int) -> Iterator[Check]:
    for k in (2, 3, 4):
        if k > k_max:
            break
        formula = explicit.PARTITION_FORMULAS[k]
        coprime = explicit.COPRIME_FORMULAS[k]
        for n in range(1, n_max + 1):
            yield (f"explicit p_{k}({n})", lambda: formula(n), lambda: partitions_count(k, n))
            yield (f"explicit p'_{k}({n})", lambda: coprime(n), lambda: coprime_partitions(k, n))
        if k == 4:
            for n in range(1, n_max + 1):
                yield (f"quasi-polynomial p_4({n})", lambda: explicit.p4_quasi_formula(n), lambda: partitions_count(4, n))
    for name, table, direct in explicit.CASE_TABLES:
        if int(name[1]) > k_max:
            continue
        for n in range(1, n_max + 1):
            yield (f"{name} at {n}", lambda: table(n), lambda: direct(n))
    # p'_k(n) = J_{k-1}(n) / (k!(k-1)!) from n = k + 1 on, and not at n = k
    for k, scale in ((2, 2), (3, 12)):
        if k > k_max:
            break
        for n in range(k + 1, n_max + 1):
            yield (
                f"p'_{k}({n}) = J_{k - 1}/{scale}",
                lambda: Fraction(coprime_partitions(k, n)),
                lambda: Fraction(jordan_totient(k - 1, n), scale),
            )
        if n_max >= k:
            yield (
                f"p'_{k}({k}) differs from J_{k - 1}/{scale}",
                lambda: Fraction(coprime_partitions(k, k)) != Fraction(jordan_totient(k - 1, k), scale),
                lambda: True,
            )


_CASES = {
    "totient": _totient_cases,
    "partition": _partition_cases,
    "binet": _binet_cases,
    "golden": _golden_cases,
}


def run_suites(suite: str, k_max: int, n_max: int) -> List[SuiteResult]:
    """Run one suite or all of them; bounds must be positive."""
    if suite != "all" and suite not in _CASES:
        raise ValueError(f"unknown suite {suite!r}")
    if k_max < 1 or n_max < 1:
        raise ValueError("k_max and n_max must be positive")
    names = SUITES if suite == "all" else (suite,)
    return [_run(name, _CASES[name](k_max, n_max)) for name in names]
