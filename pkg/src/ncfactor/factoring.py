"""General two-factor factorization with extension symbols, plus drivers.

The top homogeneous part of F fixes the top parts of both factors; lower
parts are recovered degree by degree from the relation between homogeneous
parts of F and of the factors.  Where the pivot words of the two top parts
overlap, one coefficient split is genuinely ambiguous, so a fresh extension
symbol is introduced for it and the final coefficient-matching system over
all symbols is solved exactly (enumeration over F_p, reduced Groebner basis
description over Q).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional, Union

from .commutative import (
    CPoly,
    ConstraintSystem,
    Monomial,
    buchberger,
    enumerate_solutions,
    monomial_degree,
    monomial_divides,
    monomial_mul,
    monomial_quotient,
    reduce_groebner,
)
from .errors import ContextMismatchError
from .fields import PrimeField, Scalar
from .freealg import NCPoly, Word, normalize_pair, overlap_lengths
from .homogeneous import factor_homogeneous


class DegreeSplit(NamedTuple):
    h: int
    k: int


Assignment = dict[str, Scalar]


@dataclass(frozen=True)
class SymbolicFactorization:
    """One factorization candidate at a fixed degree split.

    Over F_p, `left` and `right` are the concrete pair obtained by
    substituting one solution of the constraint system (recorded in
    `solutions`).  Over Q with a nonempty system they stay symbolic and
    `solutions` is None; the reduced Groebner basis then describes all
    admissible symbol values.
    """

    left: NCPoly
    right: NCPoly
    system: ConstraintSystem
    reduced_basis: Optional[tuple[CPoly, ...]]
    solutions: Optional[tuple[Assignment, ...]]
    pivots: tuple[Word, Word]

    @property
    def is_concrete(self) -> bool:
        return self.left.has_constant_coefficients() and self.right.has_constant_coefficients()


@dataclass(frozen=True)
class FactorChain:
    """A maximal multiplication chain; `complete` is False when the depth cap cut it."""

    factors: tuple[NCPoly, ...]
    complete: bool


@dataclass(frozen=True)
class FactorOptions:
    """Tuning knobs shared by the factorization drivers."""

    enumeration_cap: int = 10**6
    knapsack_budget: int = 500_000
    use_knapsack: bool = True
    pivot_retry_cap: Optional[int] = None  # None: try every pivot pair

    def __post_init__(self):
        if self.enumeration_cap < 1 or self.knapsack_budget < 1:
            raise ValueError("caps must be positive")


DEFAULT_OPTIONS = FactorOptions()


def _poly_key(p: NCPoly):
    return tuple(sorted((w, tuple(sorted(c._terms.items()))) for w, c in p._terms.items()))


def _pair_key(g: NCPoly, h: NCPoly):
    return (_poly_key(g), _poly_key(h))


def assemble_constraints(f: NCPoly, g: NCPoly, h: NCPoly) -> ConstraintSystem:
    """Coefficient-matching system for f = g*h.

    Expands g*h - f and returns one equation per word with a nonzero
    coefficient (possibly a nonzero constant, which makes the system
    inconsistent).  Empty system means g*h = f identically.
    """
    if g.algebra != h.algebra:
        raise ContextMismatchError("factors live in different algebras")
    if not f.has_constant_coefficients():
        raise ValueError("f must have constant coefficients")
    diff = g * h - f.lift(g.algebra)
    equations = tuple(coeff for _, coeff in diff.terms())
    return ConstraintSystem(g.algebra.ring, equations)


def _pivot_pairs(g_top: NCPoly, h_top: NCPoly) -> list[tuple[Word, Word]]:
    """Pivot candidates sorted by overlap count, then canonically."""
    pairs = [(u, v) for u in g_top.words() for v in h_top.words()]
    pairs.sort(key=lambda uv: (len(overlap_lengths(uv[0], uv[1])), uv[0], uv[1]))
    return pairs


def _solve_step(
    fhat: NCPoly,
    g_top: NCPoly,
    h_top: NCPoly,
    h_minus_j: int,
    k_minus_j: int,
    known: dict[tuple[str, Word], CPoly],
) -> tuple[dict[tuple[str, Word], CPoly], bool]:
    """Solve one degree step of the recovery for the unknown factor parts.

    The relation fhat = G_top * H_new + G_new * H_top is linear in the
    coefficients of G_new and H_new: the monomial M contributes the equation

        fhat[M] = G_top[M[:h]] * H_new[M[h:]] + G_new[M[:h-j]] * H_top[M[h-j:]]

    because words concatenate uniquely at a fixed cut.  Unknowns reachable
    from the support of fhat (directly or through cancellation against other
    head words) are collected by closure and the sparse system is solved by
    Gaussian elimination over the base field; right-hand sides may involve
    extension symbols from earlier steps.  Unconstrained unknowns are set to
    zero; entries fixed by the overlap symbol arrive through `known`.

    Returns (solution, underdetermined).  When `underdetermined` is True the
    zeroed unknowns were genuinely free, so the step may have dropped
    admissible factorizations and the caller must not treat this attempt's
    answer as exhaustive.
    """
    alg = fhat.algebra
    fld = alg.field
    h = g_top.degree()
    k = h_top.degree()
    g_words = {w: g_top.coefficient(w).constant_value() for w in g_top.words()}
    h_words = {w: h_top.coefficient(w).constant_value() for w in h_top.words()}

    def equation_monomials(unknown: tuple[str, Word]) -> list[Word]:
        kind, word = unknown
        if kind == "H":
            return [u + word for u in g_words]
        return [word + v for v in h_words]

    def monomial_unknowns(m: Word) -> list[tuple[str, Word]]:
        out = []
        if k_minus_j >= 0 and m[:h] in g_words:
            out.append(("H", m[h:]))
        if h_minus_j >= 0 and m[h_minus_j:] in h_words:
            out.append(("G", m[:h_minus_j]))
        return out

    unknowns: set[tuple[str, Word]] = set()
    frontier: list[tuple[str, Word]] = []

    def discover(unk: tuple[str, Word]) -> None:
        if unk not in known and unk not in unknowns:
            unknowns.add(unk)
            frontier.append(unk)

    for word in fhat.words():
        for unk in monomial_unknowns(word):
            discover(unk)
    # Entries fixed by the overlap symbol are nonzero data: equations through
    # them can reach unknowns invisible in the support of fhat.
    frontier.extend(known)
    while frontier:
        for m in equation_monomials(frontier.pop()):
            for other in monomial_unknowns(m):
                discover(other)

    monomials: set[Word] = set()
    for unk in unknowns:
        monomials.update(equation_monomials(unk))

    # Rows: scalar coefficients on the unknowns, CPoly right-hand side
    # (symbols from earlier overlap steps may appear there).
    order = sorted(unknowns)
    index = {unk: i for i, unk in enumerate(order)}
    rows: list[tuple[dict[int, Scalar], CPoly]] = []
    for m in sorted(monomials):
        coeffs: dict[int, Scalar] = {}
        rhs = fhat.coefficient(m)
        if k_minus_j >= 0 and m[:h] in g_words:
            unk = ("H", m[h:])
            if unk in known:
                rhs = rhs - known[unk].scale(g_words[m[:h]])
            else:
                coeffs[index[unk]] = g_words[m[:h]]
        if h_minus_j >= 0 and m[h_minus_j:] in h_words:
            unk = ("G", m[:h_minus_j])
            if unk in known:
                rhs = rhs - known[unk].scale(h_words[m[h_minus_j:]])
            else:
                coeffs[index[unk]] = h_words[m[h_minus_j:]]
        if coeffs:
            rows.append((coeffs, rhs))

    # Forward elimination to row echelon form.  Rows that empty out state
    # conditions on earlier symbols; they reappear in the final
    # coefficient-matching system, so they are dropped here.
    echelon: dict[int, tuple[dict[int, Scalar], CPoly]] = {}
    for col in range(len(order)):
        sel = next((ri for ri, (coeffs, _) in enumerate(rows) if col in coeffs), None)
        if sel is None:
            continue
        coeffs, rhs = rows.pop(sel)
        inv = fld.inv(coeffs[col])
        coeffs = {i: fld.mul(c, inv) for i, c in coeffs.items()}
        rhs = rhs.scale(inv)
        echelon[col] = (coeffs, rhs)
        remaining = []
        for other_coeffs, other_rhs in rows:
            if col in other_coeffs:
                factor = other_coeffs[col]
                merged = dict(other_coeffs)
                for i, c in coeffs.items():
                    nc = fld.sub(merged.get(i, fld.zero), fld.mul(factor, c))
                    if nc == 0:
                        merged.pop(i, None)
                    else:
                        merged[i] = nc
                other_rhs = other_rhs - rhs.scale(factor)
                if merged:
                    remaining.append((merged, other_rhs))
            else:
                remaining.append((other_coeffs, other_rhs))
        rows = remaining

    # Back-substitute; free unknowns stay zero.
    solution: dict[tuple[str, Word], CPoly] = dict(known)
    for unk in order:
        solution.setdefault(unk, alg.ring.zero())
    for col in sorted(echelon, reverse=True):
        coeffs, rhs = echelon[col]
        value = rhs
        for i, c in coeffs.items():
            if i != col:
                value = value - solution[order[i]].scale(c)
        solution[order[col]] = value
    underdetermined = any(col not in echelon for col in range(len(order)))
    return solution, underdetermined


def _attempt_pivot(
    f: NCPoly,
    h: int,
    k: int,
    g_top: NCPoly,
    h_top: NCPoly,
    g_hat: Word,
    h_hat: Word,
    options: FactorOptions,
) -> tuple[Optional[list[SymbolicFactorization]], bool]:
    """Run the degree-by-degree recovery for one pivot pair.

    Returns (results, exhaustive).  `results` is None when the assembled
    system is inconsistent.  `exhaustive` is True when every recovery step
    was fully determined (given the overlap symbols), in which case the
    result is the complete answer at this split; otherwise zeroed free
    coefficients may have dropped factorizations and the caller should merge
    answers across pivot pairs.
    """
    n = f.degree()
    fld = f.algebra.field
    overlaps = overlap_lengths(g_hat, h_hat)
    symbols = tuple(f"a{i + 1}" for i in range(len(overlaps)))
    symbol_at = dict(zip(overlaps, symbols))
    alg = f.algebra.extend_symbols(symbols)
    f_ext = f.lift(alg)
    gamma = g_top.coefficient(g_hat).constant_value()
    eta = h_top.coefficient(h_hat).constant_value()
    g_top_ext = g_top.lift(alg)
    h_top_ext = h_top.lift(alg)
    g_parts: dict[int, NCPoly] = {h: g_top_ext}
    h_parts: dict[int, NCPoly] = {k: h_top_ext}
    exhaustive = True
    # A non-pivot head pair with an overlap admits a cancellation pattern the
    # pivot symbols cannot parametrize; treat such attempts as non-exhaustive.
    for u in g_top.words():
        for v in h_top.words():
            if (u, v) != (g_hat, h_hat) and overlap_lengths(u, v):
                exhaustive = False

    for j in range(1, max(h, k) + 1):
        fhat = f_ext.homogeneous_part(n - j)
        for i in range(1, j):
            if h - i in g_parts and k - j + i in h_parts:
                fhat = fhat - g_parts[h - i] * h_parts[k - j + i]
        known: dict[tuple[str, Word], CPoly] = {}
        if j in symbol_at:
            # The fused word g_hat * h_hat[j:] is left-divisible by g_hat and
            # right-divisible by h_hat at once, so its coefficient c splits
            # into an undetermined part alpha (to G) and (c - alpha*eta)/gamma
            # (to H) for a fresh symbol alpha.
            fused = g_hat + h_hat[j:]
            c = fhat.coefficient(fused)
            alpha = alg.ring.symbol(symbol_at[j])
            known[("G", g_hat[: h - j])] = alpha
            known[("H", h_hat[j:])] = (c - alpha.scale(eta)).scale(fld.inv(gamma))
        solution, underdetermined = _solve_step(
            fhat, g_top_ext, h_top_ext, h - j, k - j, known
        )
        if underdetermined:
            exhaustive = False
        if h - j >= 0:
            g_new = alg.zero()
            for (kind, word), value in sorted(solution.items()):
                if kind == "G":
                    g_new = g_new + alg.monomial(word, value)
            g_parts[h - j] = g_new
        if k - j >= 0:
            h_new = alg.zero()
            for (kind, word), value in sorted(solution.items()):
                if kind == "H":
                    h_new = h_new + alg.monomial(word, value)
            h_parts[k - j] = h_new

    g_sym = alg.zero()
    for part in g_parts.values():
        g_sym = g_sym + part
    h_sym = alg.zero()
    for part in h_parts.values():
        h_sym = h_sym + part

    system = assemble_constraints(f, g_sym, h_sym)
    basis: Optional[tuple[CPoly, ...]] = None
    if system.equations:
        basis = tuple(reduce_groebner(buchberger(list(system.equations))))

    if not fld.is_finite:
        if basis is not None and list(basis) == [alg.ring.one()]:
            return None, exhaustive  # unit ideal: no admissible symbol values
        if not symbols:
            if system.equations:
                return None, exhaustive
            left, right = normalize_pair(g_sym, h_sym)
            fact = SymbolicFactorization(
                left, right, system, basis, (dict(),), (g_hat, h_hat)
            )
            return [fact], exhaustive
        fact = SymbolicFactorization(g_sym, h_sym, system, basis, None, (g_hat, h_hat))
        return [fact], exhaustive

    solutions = enumerate_solutions(system, cap=options.enumeration_cap)
    if not solutions:
        return None, exhaustive
    results: list[SymbolicFactorization] = []
    seen = set()
    for sol in solutions:
        left = g_sym.substitute_symbols(sol)
        right = h_sym.substitute_symbols(sol)
        left, right = normalize_pair(left, right)
        if left * right != f:
            raise AssertionError("solved factor pair fails to multiply back to f")
        key = _pair_key(left, right)
        if key in seen:
            continue
        seen.add(key)
        results.append(
            SymbolicFactorization(left, right, system, basis, (sol,), (g_hat, h_hat))
        )
    return results, exhaustive


def factor_bidegree(
    f: NCPoly,
    split: Union[DegreeSplit, tuple[int, int]],
    options: FactorOptions = DEFAULT_OPTIONS,
) -> list[SymbolicFactorization]:
    """All factorizations f = G*H with deg G = h and deg H = k.

    Empty list means no factorization exists at this split.  The top parts
    are forced by the homogeneous algorithm; pivot pairs are tried in order
    of increasing overlap count.  An attempt whose recovery steps were all
    fully determined settles the split outright; otherwise the answers of
    every consistent attempt are merged, since a free coefficient zeroed in
    one attempt can be reached through another pivot pair's overlap symbol.
    """
    h, k = split
    if h < 1 or k < 1:
        raise ValueError(f"factor degrees must be >= 1, got ({h}, {k})")
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not f.has_constant_coefficients():
        raise ValueError("input must have constant coefficients")
    if f.degree() != h + k:
        raise ValueError(f"degree {f.degree()} != {h} + {k}")

    top = factor_homogeneous(f.homogeneous_part(f.degree()), h, k)
    if top is None:
        return []
    g_top, h_top = top
    if f.is_homogeneous():
        # nothing below the top: the homogeneous pair is the whole answer
        ring = f.algebra.ring
        system = ConstraintSystem(ring, ())
        return [
            SymbolicFactorization(
                g_top, h_top, system, None, (dict(),),
                (g_top.leading_word(), h_top.leading_word()),
            )
        ]

    pivot_pairs = _pivot_pairs(g_top, h_top)
    if options.pivot_retry_cap is not None:
        pivot_pairs = pivot_pairs[: options.pivot_retry_cap]
    merged: dict = {}
    for g_hat, h_hat in pivot_pairs:
        results, exhaustive_attempt = _attempt_pivot(
            f, h, k, g_top, h_top, g_hat, h_hat, options
        )
        if exhaustive_attempt:
            return results if results is not None else []
        for fact in results or ():
            merged.setdefault(_pair_key(fact.left, fact.right), fact)
    return list(merged.values())


def commutative_factor_degrees(c: CPoly, budget: int = 500_000) -> Optional[list[int]]:
    """Total degrees of the irreducible factors of c over F_p, with multiplicity.

    Brute-force trial division: monomial content first, then monic candidate
    divisors of increasing degree.  Returns None when the candidate space
    exceeds the budget (callers must then treat every split as admissible).
    """
    if c.is_zero():
        raise ValueError("zero polynomial has no factor degrees")
    fld = c.ring.field
    if not isinstance(fld, PrimeField):
        return None
    degrees: list[int] = []
    # Peel off the monomial content: each variable power is a linear factor.
    content = tuple(min(m[i] for m in c._terms) for i in range(c.ring.nsymbols))
    if any(content):
        degrees.extend([1] * monomial_degree(content))
        c = CPoly(
            c.ring,
            {tuple(e - ct for e, ct in zip(m, content)): v for m, v in c._terms.items()},
        )
    trials = 0
    monomials_by_degree: dict[int, list] = {}

    def monomials_up_to(d: int):
        if d not in monomials_by_degree:
            monos = [
                m
                for m in product(range(d + 1), repeat=c.ring.nsymbols)
                if monomial_degree(m) <= d
            ]
            monos.sort(reverse=True)
            monomials_by_degree[d] = monos
        return monomials_by_degree[d]

    p = fld.p
    nsym = c.ring.nsymbols

    def point_filter(poly: CPoly):
        # a divisor must be nonzero at every point where the dividend is;
        # evaluating candidates at those points rejects most of them cheaply
        if p**nsym > 512:
            return None
        points = [
            pt
            for pt in product(range(p), repeat=nsym)
            if poly.evaluate_tuple(pt) != 0
        ]
        cache: dict[Monomial, list[int]] = {}

        def values(mono: Monomial) -> list[int]:
            if mono not in cache:
                row = []
                for pt in points:
                    v = 1
                    for x, e in zip(pt, mono):
                        for _ in range(e):
                            v = v * x % p
                    row.append(v)
                cache[mono] = row
            return cache[mono]

        def admissible(cand_terms: dict[Monomial, int]) -> bool:
            rows = [(values(m), coeff) for m, coeff in cand_terms.items()]
            for i in range(len(points)):
                total = 0
                for row, coeff in rows:
                    total += row[i] * coeff
                if total % p == 0:
                    return False
            return True

        return admissible

    def raw_divides(target: dict[Monomial, int], cand_terms: dict[Monomial, int], lead: Monomial) -> bool:
        # exact-division attempt on plain dicts; candidate is monic in `lead`
        r = dict(target)
        while r:
            lm = max(r)
            if not monomial_divides(lead, lm):
                return False
            q = monomial_quotient(lm, lead)
            coeff = r.pop(lm)
            for m, cc in cand_terms.items():
                if m == lead:
                    continue
                key = monomial_mul(m, q)
                nv = (r.get(key, 0) - coeff * cc) % p
                if nv:
                    r[key] = nv
                else:
                    r.pop(key, None)
        return True

    while True:
        deg = c.total_degree()
        if deg <= 1:
            if deg == 1:
                degrees.append(1)
            return sorted(degrees)
        lead_c = c.leading_monomial()
        trail_c = min(c._terms)
        raw_target = dict(c._terms)
        admissible = point_filter(c)
        found = None
        for d in range(1, deg // 2 + 1):
            monos = monomials_up_to(d)
            for lead_idx, lead in enumerate(monos):
                if monomial_degree(lead) != d and all(
                    monomial_degree(m) != d for m in monos[lead_idx + 1 :]
                ):
                    break
                # leading and trailing monomials are both multiplicative, so a
                # divisor's must divide the dividend's
                if not monomial_divides(lead, lead_c):
                    continue
                tail = monos[lead_idx + 1 :]
                trials += fld.p ** len(tail)
                if trials > budget:
                    return None
                for coeffs in product(fld.elements(), repeat=len(tail)):
                    cand_terms = {lead: fld.one}
                    for m, coeff in zip(tail, coeffs):
                        if coeff:
                            cand_terms[m] = coeff
                    if max(monomial_degree(m) for m in cand_terms) != d:
                        continue
                    if not monomial_divides(min(cand_terms), trail_c):
                        continue
                    if admissible is not None and not admissible(cand_terms):
                        continue
                    if raw_divides(raw_target, cand_terms, lead):
                        found = CPoly(c.ring, cand_terms)
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            degrees.append(deg)
            return sorted(degrees)
        degrees.append(found.total_degree())
        quotient = _exact_quotient(c, found)
        c = quotient


def _exact_quotient(c: CPoly, divisor: CPoly) -> CPoly:
    """c / divisor when the division is exact (remainder already checked zero)."""
    fld = c.ring.field
    q = c.ring.zero()
    r = c
    dm = divisor.leading_monomial()
    dc = divisor.leading_coefficient()
    while not r.is_zero():
        lm = r.leading_monomial()
        if not monomial_divides(dm, lm):
            raise ArithmeticError("division is not exact")
        mono = monomial_quotient(lm, dm)
        coeff = fld.div(r.leading_coefficient(), dc)
        q = q + CPoly(c.ring, {mono: coeff})
        r = r - divisor.mul_term(mono, coeff)
    return q


def knapsack_splits(
    f: NCPoly, budget: int = 500_000
) -> set[DegreeSplit]:
    """Degree splits admissible by the commutative-image degree filter.

    The image of a product factors as the product of the images, so a
    non-commutative factor degree must be a subset sum of the irreducible
    factor degrees of the commutative image (of f itself when the image
    keeps full degree, of the top homogeneous part otherwise).  This is a
    necessary condition only; when the image vanishes or the trial
    factorization blows its budget, every split is returned.
    """
    if f.is_zero():
        raise ValueError("cannot filter splits of the zero polynomial")
    if not f.has_constant_coefficients():
        raise ValueError("input must have constant coefficients")
    n = f.degree()
    all_splits = {DegreeSplit(b, n - b) for b in range(1, n)}
    image = f.commutative_image()
    if image.is_zero() or image.total_degree() < n:
        image = f.homogeneous_part(n).commutative_image()
        if image.is_zero():
            return all_splits
    parts = commutative_factor_degrees(image, budget=budget)
    if parts is None:
        return all_splits
    sums = {0}
    for a in parts:
        sums |= {s + a for s in sums}
    return {DegreeSplit(b, n - b) for b in sums if 1 <= b <= n - 1}


def factor_all(
    f: NCPoly, options: FactorOptions = DEFAULT_OPTIONS
) -> dict[DegreeSplit, list[SymbolicFactorization]]:
    """Factorizations of f at every admissible split, keyed by split.

    Splits come from the knapsack filter unless disabled; only splits with
    at least one factorization appear in the result.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree() < 2:
        raise ValueError("need degree >= 2 for a nontrivial split")
    if options.use_knapsack:
        splits = knapsack_splits(f, budget=options.knapsack_budget)
    else:
        n = f.degree()
        splits = {DegreeSplit(b, n - b) for b in range(1, n)}
    out: dict[DegreeSplit, list[SymbolicFactorization]] = {}
    for split in sorted(splits):
        results = factor_bidegree(f, split, options)
        if results:
            out[split] = results
    return out


def factor_completely(
    f: NCPoly, depth_cap: int = 8, options: FactorOptions = DEFAULT_OPTIONS
) -> list[FactorChain]:
    """Maximal factorization chains of f, recursing through concrete factors.

    Chains are deduplicated; a branch cut by the depth cap is reported as an
    incomplete chain rather than an error.
    """
    if depth_cap < 1:
        raise ValueError("depth cap must be >= 1")
    memo: dict = {}

    def chains(poly: NCPoly, budget: int) -> list[FactorChain]:
        if poly.degree() < 2:
            return [FactorChain((poly,), True)]
        if budget <= 0:
            return [FactorChain((poly,), False)]
        # a maximal chain has at most degree(poly) factors, so a budget of at
        # least the degree can never truncate and the answer is budget-free
        memo_key = (_poly_key(poly), budget if budget < poly.degree() else None)
        if memo_key in memo:
            return memo[memo_key]
        collected: dict = {}
        split_map = factor_all(poly, options)
        concrete = [
            fact
            for results in split_map.values()
            for fact in results
            if fact.is_concrete
        ]
        if not concrete:
            memo[memo_key] = [FactorChain((poly,), True)]
            return memo[memo_key]
        for fact in concrete:
            for lc in chains(fact.left, budget - 1):
                for rc in chains(fact.right, budget - 1):
                    factors = lc.factors + rc.factors
                    complete = lc.complete and rc.complete
                    key = tuple(_poly_key(p) for p in factors)
                    prev = collected.get(key)
                    if prev is None or (complete and not prev.complete):
                        collected[key] = FactorChain(factors, complete)
        memo[memo_key] = sorted(
            collected.values(), key=lambda ch: tuple(str(p) for p in ch.factors)
        )
        return memo[memo_key]

    return chains(f, depth_cap)
