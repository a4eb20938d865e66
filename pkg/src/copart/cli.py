"""Command-line front end.

Exit status is 0 on success, 1 when the library rejects the input or an
internal cross-check fails, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, List, Optional

from .cyclo import CycloNum, RootOfUnity, restrict
from .errors import CopartError, DomainError
from .partition import (
    compositions_count,
    coprime_compositions,
    coprime_partitions,
    partitions_count,
)
from .quasipoly import BinetDecomposition, CoprimeCombination, binet_decompose, coprime_combination
from .serialize import OutputRecord, decomposition_to_json, dumps, format_value, parse_root
from .totient import (
    enumerate_characters,
    jordan_dirichlet,
    jordan_mod_totient,
    jordan_root_totient,
    jordan_totient,
)
from .verify import SUITES, run_suites

DEFAULT_MAX_K = 10

# variant name -> (extra flags it needs, evaluator(args, n))
_VARIANTS: Dict[str, tuple] = {}


def _variant(name: str, *needs: str):
    def register(fn: Callable):
        _VARIANTS[name] = (needs, fn)
        return fn

    return register


@_variant("jordan")
def _jordan(a, n):
    return jordan_totient(a.k, n)


@_variant("jordan-mod", "j", "m")
def _jordan_mod(a, n):
    return jordan_mod_totient(a.k, a.j, a.m, n)


@_variant("jordan-root", "omega")
def _jordan_root(a, n):
    return jordan_root_totient(a.k, a.omega, n)


@_variant("jordan-dirichlet", "m", "chi_index")
def _jordan_dirichlet(a, n):
    chars = enumerate_characters(a.m)
    if not 0 <= a.chi_index < len(chars):
        raise DomainError(f"there are {len(chars)} characters mod {a.m}; index {a.chi_index} is out of range")
    return jordan_dirichlet(a.k, chars[a.chi_index], n)


@_variant("compositions")
def _compositions(a, n):
    return compositions_count(a.k, n)


@_variant("coprime-compositions")
def _coprime_compositions(a, n):
    return coprime_compositions(a.k, n)


@_variant("partitions")
def _partitions(a, n):
    return partitions_count(a.k, n)


@_variant("coprime-partitions")
def _coprime_partitions(a, n):
    return coprime_partitions(a.k, n)


def _query(a, variant: str, n: int) -> dict:
    needs = _VARIANTS[variant][0]
    q = {"k": a.k, "n": n}
    for flag in needs:
        val = getattr(a, flag)
        q[flag] = str(val) if isinstance(val, RootOfUnity) else val
    return q


def _root_arg(text: str) -> RootOfUnity:
    try:
        return parse_root(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_variant_flags(p: argparse.ArgumentParser, needs, required: bool) -> None:
    if "j" in needs:
        p.add_argument("--j", type=int, required=required, help="residue class")
    if "m" in needs:
        p.add_argument("--m", type=int, required=required, help="modulus")
    if "omega" in needs:
        p.add_argument("--omega", type=_root_arg, required=required, metavar="M/J",
                       help="root of unity exp(2 pi i J / M)")
    if "chi_index" in needs:
        p.add_argument("--chi-index", dest="chi_index", type=int, required=required,
                       help="position in the character enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copart",
        description="Coprime partitions, Jordan totients and their Binet forms, computed exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, (needs, _) in _VARIANTS.items():
        p = sub.add_parser(name, help=f"compute one {name} value")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        _add_variant_flags(p, needs, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("tabulate", help="one value per n over a range")
    p.add_argument("--what", choices=tuple(_VARIANTS), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-from", dest="n_from", type=int, required=True)
    p.add_argument("--n-to", dest="n_to", type=int, required=True)
    _add_variant_flags(p, ("j", "m", "omega", "chi_index"), required=False)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("decompose", help="Binet form of p_k and the combination for p'_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-k", dest="max_k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--k-max", dest="k_max", type=int, default=6)
    p.add_argument("--n-max", dest="n_max", type=int, default=500)
    return parser


# -- commands ------------------------------------------------------------------


def cmd_compute(args, out) -> int:
    _, fn = _VARIANTS[args.command]
    value = fn(args, args.n)
    if args.format == "json":
        q = _query(args, args.command, args.n)
        record = OutputRecord.of(args.command, value, **q)
        print(dumps(record.to_json()), file=out)
    else:
        print(format_value(value), file=out)
    return 0


def cmd_tabulate(args, parser, out) -> int:
    if args.n_from > args.n_to:
        parser.error(f"--n-from {args.n_from} is larger than --n-to {args.n_to}")
    needs, fn = _VARIANTS[args.what]
    missing = [f for f in needs if getattr(args, f) is None]
    if missing:
        flags = ", ".join("--" + f.replace("_", "-") for f in missing)
        parser.error(f"--what {args.what} needs {flags}")
    rows = [(n, format_value(fn(args, n))) for n in range(args.n_from, args.n_to + 1)]
    if args.format == "json":
        head = _query(args, args.what, args.n_from)
        del head["n"]
        doc = {"what": args.what, **head, "rows": [{"n": n, "value": v} for n, v in rows]}
        print(dumps(doc), file=out)
    else:
        print("n,value", file=out)
        for n, v in rows:
            print(f"{n},{v}", file=out)
    return 0


def _poly_text(coeffs: List[CycloNum], order: int) -> str:
    parts = []
    for t in range(len(coeffs) - 1, -1, -1):
        c = coeffs[t]
        low = restrict(c, order) or c
        if low.is_zero():
            continue
        mono = "" if t == 0 else "n" if t == 1 else f"n^{t}"
        q = low.is_rational()
        if q is not None:
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        else:
            parts.append(("+", f"{low}*{mono}" if mono else str(low)))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def render_text(decomp: BinetDecomposition, comb: CoprimeCombination) -> str:
    k = decomp.k
    lines = [f"p_{k}(n) = sum over roots w of P_w(n) * w^n   (field level {decomp.level})"]
    first, rest = decomp.terms[0], decomp.terms[1:]
    lines.append(f"  polynomial part: {_poly_text(list(first.coeffs), 1)}")
    for term in rest:
        lines.append(
            f"  w = {term.root} (multiplicity {term.spec.multiplicity}): "
            f"{_poly_text(list(term.coeffs), term.root.m)}"
        )
    lines.append(f"p'_{k}(n) = sum of coeff * J_(t, w)(n):")
    for e in comb.entries:
        coeff = restrict(e.coeff, e.root.m) or e.coeff
        lines.append(f"  t = {e.degree}, w = {e.root}: {format_value(coeff)}")
    return "\n".join(lines)


def cmd_decompose(args, parser, out) -> int:
    if not 2 <= args.k <= args.max_k:
        parser.error(f"--k must lie in [2, {args.max_k}], got {args.k}")
    decomp = binet_decompose(args.k)
    comb = coprime_combination(args.k)
    if args.format == "json":
        print(dumps(decomposition_to_json(decomp, comb)), file=out)
    else:
        print(render_text(decomp, comb), file=out)
    return 0


def cmd_verify(args, parser, out) -> int:
    if args.k_max < 1 or args.n_max < 1:
        parser.error("--k-max and --n-max must be positive")
    results = run_suites(args.suite, args.k_max, args.n_max)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name:<{width}}  {status}  {r.checks} checks", file=out)
        if not r.passed:
            print(f"  first counterexample: {r.failure}", file=out)
    return 0 if all(r.passed for r in results) else 1


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in _VARIANTS:
            return cmd_compute(args, out)
        if args.command == "tabulate":
            return cmd_tabulate(args, parser, out)
        if args.command == "decompose":
            return cmd_decompose(args, parser, out)
        return cmd_verify(args, parser, out)
    except CopartError as exc:
        print(f"copart: error: {exc}", file=sys.stderr)
        return 1
