"""Exact computation of coprime partitions into k parts.

Counts of (coprime) compositions and partitions, the Jordan totient family,
cyclotomic-field arithmetic, and the Binet decomposition that writes p'_k
as a combination of Jordan root totients.
"""

from .arith import Rational, divisors, euler_phi, factorize, lcm_delta, mobius
from .cyclo import (
    CycloNum,
    CycloPolynomial,
    RootOfUnity,
    conjugate,
    cyclotomic_polynomial,
    embed,
    is_rational,
    restrict,
)
from .errors import (
    ConsistencyError,
    CopartError,
    DomainError,
    LevelError,
    PreconditionError,
    ResourceLimitError,
)
from .partition import (
    composition_polynomial,
    compositions_count,
    coprime_compositions,
    coprime_partitions,
    enumerate_coprime_partitions,
    enumerate_partitions,
    partitions_count,
)
from .quasipoly import (
    BinetDecomposition,
    CoprimeCombination,
    RootSpec,
    binet_decompose,
    coprime_combination,
    evaluate_combination,
    generic_binet,
    partial_fraction,
    polynomial_part,
)
from .totient import (
    DirichletCharacter,
    enumerate_characters,
    jordan_dirichlet,
    jordan_mod_totient,
    jordan_root_totient,
    jordan_totient,
)

__version__ = "0.1.0"
