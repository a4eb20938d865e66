"""Exact text and JSON forms for values, decompositions and CLI records."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple, Union

from .cyclo import CycloNum, RootOfUnity
from .errors import DomainError
from .quasipoly import (
    BinetDecomposition,
    BinetTerm,
    CombinationTerm,
    CoprimeCombination,
    RootSpec,
)

Value = Union[int, Fraction, CycloNum]


def format_value(value: Value) -> str:
    """Integers as-is, rationals as a/b, anything else as [c0, ...]@level."""
    if isinstance(value, CycloNum):
        q = value.is_rational()
        if q is None:
            return str(value)
        value = q
    return str(Fraction(value))


def parse_value(text: str) -> Value:
    text = text.strip()
    if text.startswith("["):
        body, _, level = text.rpartition("]@")
        coeffs = [c for c in body[1:].split(",") if c.strip()]
        return CycloNum(int(level), [Fraction(c.strip()) for c in coeffs])
    q = Fraction(text)
    return q.numerator if q.denominator == 1 else q


def parse_root(text: str) -> RootOfUnity:
    """'m/j' -> exp(2 pi i j / m)."""
    try:
        m, j = text.split("/")
        return RootOfUnity(int(m), int(j))
    except (ValueError, DomainError):
        raise DomainError(f"root of unity must look like m/j with m >= 1, got {text!r}") from None


# -- JSON pieces -------------------------------------------------------------


def cyclo_to_json(c: CycloNum) -> dict:
    return {"level": c.level, "coeffs": [str(x) for x in c.coeffs]}


def cyclo_from_json(obj: dict) -> CycloNum:
    return CycloNum(obj["level"], [Fraction(x) for x in obj["coeffs"]])


def root_to_json(w: RootOfUnity) -> dict:
    return {"m": w.m, "j": w.j}


def root_from_json(obj: dict) -> RootOfUnity:
    return RootOfUnity(obj["m"], obj["j"])


def decomposition_to_json(decomp: BinetDecomposition, comb: CoprimeCombination) -> dict:
    L = decomp.level
    return {
        "k": decomp.k,
        "level": L,
        "binet": [
            {
                "omega": root_to_json(t.root),
                "multiplicity": t.spec.multiplicity,
                "coeffs": [cyclo_to_json(c.lift(L)) for c in t.coeffs],
            }
            for t in decomp.terms
        ],
        "coprime_combination": [
            {"degree": e.degree, "omega": root_to_json(e.root), "coeff": cyclo_to_json(e.coeff.lift(L))}
            for e in comb.entries
        ],
    }


def decomposition_from_json(obj: dict) -> Tuple[BinetDecomposition, CoprimeCombination]:
    terms = tuple(
        BinetTerm(
            RootSpec(root_from_json(t["omega"]), t["multiplicity"]),
            tuple(cyclo_from_json(c) for c in t["coeffs"]),
        )
        for t in obj["binet"]
    )
    entries = tuple(
        CombinationTerm(e["degree"], root_from_json(e["omega"]), cyclo_from_json(e["coeff"]))
        for e in obj["coprime_combination"]
    )
    return BinetDecomposition(obj["k"], obj["level"], terms), CoprimeCombination(obj["k"], entries)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


# -- CLI records ---------------------------------------------------------------


@dataclass(frozen=True)
class OutputRecord:
    """One computed value plus the query that produced it."""

    variant: str
    query: Tuple[Tuple[str, Union[int, str]], ...] = field(default=())
    value: str = ""

    @classmethod
    def of(cls, variant: str, value: Value, **query) -> "OutputRecord":
        items = tuple((k, v) for k, v in query.items() if v is not None)
        return cls(variant, items, format_value(value))

    def to_json(self) -> dict:
        out = {"variant": self.variant}
        out.update(self.query)
        out["value"] = self.value
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "OutputRecord":
        obj = dict(obj)
        variant = obj.pop("variant")
        value = obj.pop("value")
        return cls(variant, tuple(obj.items()), value)

    def parsed(self) -> Value:
        return parse_value(self.value)
