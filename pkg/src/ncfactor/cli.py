"""Command-line front end: parse an expression, factor it, print a report.

Text mode prints one parenthesized product per factorization; JSON mode
emits a stable schema:

    {input, field, splits: [{h, k, factorizations:
        [{G, H, symbols, system, reduced_basis, solutions}]}]}

Both modes are byte-deterministic for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .commutative import SymbolRing
from .errors import NCFactorError, ParseError
from .factoring import (
    DegreeSplit,
    FactorOptions,
    SymbolicFactorization,
    factor_all,
    factor_bidegree,
    factor_completely,
)
from .fields import Field, PrimeField, RationalField
from .freealg import Alphabet, FreeAlgebra
from .parsing import identifiers_in, parse_expression


@dataclass
class Request:
    """One CLI invocation, fully resolved."""

    expression: str
    field: Field
    variables: Optional[tuple[str, ...]]
    degrees: Optional[tuple[int, int]]
    use_knapsack: bool = True
    groebner: bool = False
    complete: bool = False
    json_mode: bool = False
    max_solutions: int = 10**6
    budget: int = 500_000


def _field_name(field: Field) -> str:
    return f"F_{field.p}" if isinstance(field, PrimeField) else "Q"


def _scalar_str(field: Field, value) -> str:
    return field.format(value)


def _solution_obj(field: Field, solution: dict) -> dict:
    return {name: _scalar_str(field, value) for name, value in sorted(solution.items())}


def _fact_obj(field: Field, fact: SymbolicFactorization, groebner: bool) -> dict:
    return {
        "G": str(fact.left),
        "H": str(fact.right),
        "symbols": list(fact.system.symbols),
        "system": [str(eq) for eq in fact.system.equations],
        "reduced_basis": (
            [str(b) for b in fact.reduced_basis] if groebner and fact.reduced_basis is not None else None
        ),
        "solutions": (
            [_solution_obj(field, s) for s in fact.solutions]
            if fact.solutions is not None
            else None
        ),
    }


def _render_fact_lines(field: Field, facts: list[SymbolicFactorization], groebner: bool) -> list[str]:
    lines = []
    for fact in facts:
        line = f"  ({fact.left}) * ({fact.right})"
        if fact.solutions and fact.solutions[0]:
            assign = "; ".join(
                f"{name} = {_scalar_str(field, value)}"
                for name, value in sorted(fact.solutions[0].items())
            )
            line += f"   [{assign}]"
        lines.append(line)
    # Attempt-level context: symbols and equations are shared per pivot run.
    shown = set()
    for fact in facts:
        ctx = (fact.system.symbols, tuple(str(e) for e in fact.system.equations))
        if not fact.system.symbols or ctx in shown:
            continue
        shown.add(ctx)
        lines.append(f"  symbols: {', '.join(fact.system.symbols)}")
        if fact.system.equations:
            lines.append(f"  system: {fact.system}")
        if groebner and fact.reduced_basis is not None:
            lines.append(
                "  reduced basis: " + "; ".join(str(b) for b in fact.reduced_basis)
            )
    return lines


def run(request: Request) -> tuple[int, str]:
    """Execute a request; returns (exit code, report text)."""
    if request.variables is not None:
        names = request.variables
    else:
        names = tuple(sorted(identifiers_in(request.expression)))
    if not names:
        return 2, "error: expression has no variables and none were declared"
    try:
        algebra = FreeAlgebra(Alphabet(names), SymbolRing(request.field, ()))
    except ValueError as e:
        return 2, f"error: {e}"
    try:
        poly = parse_expression(request.expression, algebra)
    except ParseError as e:
        return 2, f"parse error: {e}"
    options = FactorOptions(
        enumeration_cap=request.max_solutions,
        knapsack_budget=request.budget,
        use_knapsack=request.use_knapsack,
    )

    lines = [f"input: {poly}", f"field: {_field_name(request.field)}"]
    out: dict = {"input": request.expression, "field": _field_name(request.field)}
    try:
        if request.degrees is not None:
            h, k = request.degrees
            split_results = {DegreeSplit(h, k): factor_bidegree(poly, (h, k), options)}
        else:
            split_results = factor_all(poly, options)
    except NCFactorError as e:
        return 3, f"error: {e}"
    except ValueError as e:
        return 2, f"error: {e}"

    found_any = False
    splits_obj = []
    for split in sorted(split_results):
        facts = split_results[split]
        splits_obj.append(
            {
                "h": split.h,
                "k": split.k,
                "factorizations": [
                    _fact_obj(request.field, f, request.groebner) for f in facts
                ],
            }
        )
        if facts:
            found_any = True
            lines.append(f"split ({split.h}, {split.k}):")
            lines.extend(_render_fact_lines(request.field, facts, request.groebner))
        else:
            lines.append(f"irreducible at ({split.h}, {split.k})")
    out["splits"] = splits_obj
    if not found_any:
        if request.degrees is None:
            lines.append("irreducible (no two-factor splits)")
    if request.complete:
        chains = factor_completely(poly, options=options)
        out["chains"] = [
            {
                "factors": [str(p) for p in chain.factors],
                "complete": chain.complete,
            }
            for chain in chains
        ]
        lines.append("complete factorizations:")
        for chain in chains:
            suffix = "" if chain.complete else "   [depth cap reached]"
            lines.append("  " + " * ".join(f"({p})" for p in chain.factors) + suffix)

    if request.json_mode:
        return 0, json.dumps(out, indent=2)
    return 0, "\n".join(lines)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncfactor",
        description="Factor a non-commutative polynomial into two factors of "
        "prescribed degrees, or at every admissible degree split.",
    )
    field_group = parser.add_mutually_exclusive_group(required=True)
    field_group.add_argument("--field", type=int, metavar="P", help="prime modulus of the coefficient field")
    field_group.add_argument("--rationals", action="store_true", help="work over the rational numbers")
    parser.add_argument("--vars", metavar="NAMES", help="comma-separated variable names, in order (default: identifiers of the expression, sorted)")
    parser.add_argument("--degrees", metavar="H,K", help="restrict to one degree split h,k")
    parser.add_argument("--no-knapsack", action="store_true", help="disable the commutative-image degree filter")
    parser.add_argument("--groebner", action="store_true", help="print the reduced lexicographic Groebner basis of each constraint system")
    parser.add_argument("--complete", action="store_true", help="also report maximal factorization chains")
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument("--max-solutions", type=int, default=10**6, metavar="N", help="cap on exhaustive symbol enumeration (default 10^6)")
    parser.add_argument("--budget", type=int, default=500_000, metavar="N", help="trial budget for the degree filter (default 500000)")
    parser.add_argument("expression", help="polynomial expression, or - to read stdin")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    if args.field is not None:
        try:
            field: Field = PrimeField(args.field)
        except ValueError as e:
            parser.error(str(e))
    else:
        field = RationalField()
    variables = None
    if args.vars:
        variables = tuple(name.strip() for name in args.vars.split(",") if name.strip())
    degrees = None
    if args.degrees:
        try:
            h_str, k_str = args.degrees.split(",")
            degrees = (int(h_str), int(k_str))
        except ValueError:
            parser.error("--degrees expects two integers h,k")
    expression = args.expression
    if expression == "-":
        expression = sys.stdin.read()
    request = Request(
        expression=expression,
        field=field,
        variables=variables,
        degrees=degrees,
        use_knapsack=not args.no_knapsack,
        groebner=args.groebner,
        complete=args.complete,
        json_mode=args.json,
        max_solutions=args.max_solutions,
        budget=args.budget,
    )
    code, report = run(request)
    print(report, file=sys.stderr if code else sys.stdout)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
