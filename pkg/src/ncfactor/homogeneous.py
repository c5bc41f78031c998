"""Factorization of homogeneous polynomials at a prescribed degree split.

For homogeneous F of degree h + k every word splits uniquely into a
length-h prefix and a length-k suffix, so the product G*H has no
cancellation and the factor pair at a given split is unique up to a scalar.
The factor-recovery scan picks a pivot word, reads H off the left-quotients
by the pivot prefix and G off the right-quotients by the pivot suffix, and
verifies the product.
"""

from __future__ import annotations

from typing import Optional

from .errors import RefinementError
from .freealg import (
    NCPoly,
    Word,
    left_quotient,
    overlap_lengths,
    right_quotient,
    word_key,
)


def _check_homogeneous_input(f: NCPoly, h: int, k: int) -> None:
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if h < 1 or k < 1:
        raise ValueError(f"factor degrees must be >= 1, got ({h}, {k})")
    if not f.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    if f.degree() != h + k:
        raise ValueError(f"degree {f.degree()} != {h} + {k}")


def select_pivot(f: NCPoly, h: int, k: int) -> tuple[Word, Word]:
    """Split some word of f into (prefix of length h, suffix of length k).

    Among the words of f, picks the split whose prefix/suffix pair has the
    fewest overlaps (each overlap later costs an extension symbol in the
    inhomogeneous algorithm); ties go to the canonically smallest word.
    """
    _check_homogeneous_input(f, h, k)
    best_word = min(
        f.words(),
        key=lambda w: (len(overlap_lengths(w[:h], w[h:])), word_key(w)),
    )
    return best_word[:h], best_word[h:]


def factor_homogeneous(f: NCPoly, h: int, k: int) -> Optional[tuple[NCPoly, NCPoly]]:
    """Factor homogeneous f as G*H with deg G = h, deg H = k, if possible.

    Returns the pair normalized with G monic in its leading word, or None
    when no such factorization exists.  Coefficient bookkeeping: the raw
    quotient sums reproduce G and H only up to the pivot coefficients, so
    the pair is rescaled to make the product match f exactly before the
    final verification.
    """
    _check_homogeneous_input(f, h, k)
    if not f.has_constant_coefficients():
        raise ValueError("homogeneous factorization needs constant coefficients")
    g_hat, h_hat = select_pivot(f, h, k)
    alg = f.algebra
    h_raw = alg.zero()
    g_raw = alg.zero()
    for word, coeff in f.terms():
        r = left_quotient(word, g_hat)
        if r is not None:
            h_raw = h_raw + alg.monomial(r, coeff)
        l = right_quotient(word, h_hat)
        if l is not None:
            g_raw = g_raw + alg.monomial(l, coeff)
    # g_raw = G * eta and h_raw = gamma * H for the true pair (gamma, eta the
    # pivot coefficients in G, H), so g_raw * h_raw = pivot_coeff * f.
    pivot_coeff = f.coefficient(g_hat + h_hat).constant_value()
    fld = alg.field
    lc = g_raw.leading_coefficient().constant_value()
    g = g_raw.scale(fld.inv(lc))
    h = h_raw.scale(fld.div(lc, pivot_coeff))
    if g * h == f:
        return g, h
    return None


def refine(g1: NCPoly, h1: NCPoly, g2: NCPoly, h2: NCPoly) -> NCPoly:
    """Common refinement J of two factorizations G1*H1 = G2*H2 of one F.

    Requires deg G1 < deg G2 and both G factors monic in their leading
    words; returns J with G2 = G1*J and H1 = J*H2, so F = G1*J*H2.  J is
    read off as the left-quotient by G1's leading word of the part of G2
    left-divisible by that word.
    """
    f = g1 * h1
    if g2 * h2 != f:
        raise RefinementError("the two pairs do not multiply to the same polynomial")
    for p in (g1, h1, g2, h2):
        if p.is_zero() or not p.is_homogeneous():
            raise RefinementError("refinement needs nonzero homogeneous factors")
    if g1.degree() >= g2.degree():
        raise RefinementError("need deg G1 < deg G2")
    for g in (g1, g2):
        if g.leading_coefficient() != g.algebra.ring.one():
            raise RefinementError("G factors must be monic in their leading words")
    anchor = g1.leading_word()
    if left_quotient(g2.leading_word(), anchor) is None:
        raise RefinementError("no common leading-word prefix relation")
    alg = f.algebra
    j = alg.zero()
    for word, coeff in g2.terms():
        r = left_quotient(word, anchor)
        if r is not None:
            j = j + alg.monomial(r, coeff)
    if g1 * j != g2 or j * h2 != h1:
        raise RefinementError("refinement identities G2 = G1*J, H1 = J*H2 fail")
    return j
