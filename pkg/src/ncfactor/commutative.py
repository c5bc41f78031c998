"""Commutative polynomial algebra over exact fields.

Sparse multivariate polynomials in a fixed ordered tuple of symbols, under
pure lexicographic monomial order (first declared symbol most significant).
Provides ring arithmetic, multivariate division, Buchberger's algorithm,
the reduced lexicographic Groebner basis, and exhaustive solution
enumeration over prime fields.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from itertools import product
from typing import Iterable

from .errors import (
    ContextMismatchError,
    NotAGroebnerBasisError,
    SearchSpaceTooLargeError,
    UnsupportedFieldError,
)
from .fields import Field, Scalar, check_same_field

# A monomial is an exponent vector, one slot per ring symbol.
Monomial = tuple[int, ...]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming a divides b."""
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


class SymbolRing:
    """Context for CPoly: a coefficient field plus an ordered symbol list."""

    __slots__ = ("field", "symbols", "_index")

    def __init__(self, field: Field, symbols: Iterable[str] = ()):
        self.field = field
        self.symbols = tuple(symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols in {self.symbols}")
        self._index = {name: i for i, name in enumerate(self.symbols)}

    def extend(self, extra: Iterable[str]) -> "SymbolRing":
        return SymbolRing(self.field, self.symbols + tuple(extra))

    @property
    def nsymbols(self) -> int:
        return len(self.symbols)

    def zero(self) -> "CPoly":
        return CPoly(self, {})

    def one(self) -> "CPoly":
        return self.constant(self.field.one)

    def constant(self, value: Scalar) -> "CPoly":
        v = self.field.coerce(value)
        if v == 0:
            return CPoly(self, {})
        return CPoly(self, {(0,) * self.nsymbols: v})

    def symbol(self, name: str) -> "CPoly":
        if name not in self._index:
            raise KeyError(f"unknown symbol {name!r} (have {self.symbols})")
        expo = [0] * self.nsymbols
        expo[self._index[name]] = 1
        return CPoly(self, {tuple(expo): self.field.one})

    def poly(self, terms: dict[Monomial, Scalar]) -> "CPoly":
        clean: dict[Monomial, Scalar] = {}
        for mono, coeff in terms.items():
            if len(mono) != self.nsymbols:
                raise ValueError(f"monomial {mono} has wrong length for {self.symbols}")
            c = self.field.coerce(coeff)
            if c != 0:
                clean[tuple(mono)] = c
        return CPoly(self, clean)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymbolRing)
            and other.field == self.field
            and other.symbols == self.symbols
        )

    def __hash__(self) -> int:
        return hash((self.field, self.symbols))

    def __repr__(self) -> str:
        return f"SymbolRing({self.field!r}, symbols={self.symbols})"


def _check_same_ring(a: "CPoly", b: "CPoly") -> None:
    if a.ring != b.ring:
        raise ContextMismatchError(f"rings differ: {a.ring!r} vs {b.ring!r}")


class CPoly:
    """Sparse commutative polynomial; invariant: no stored coefficient is zero."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: SymbolRing, terms: dict[Monomial, Scalar]):
        self.ring = ring
        self._terms = terms

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(monomial_degree(m) == 0 for m in self._terms)

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial (zero included)."""
        if not self._terms:
            return self.ring.field.zero
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()))

    def terms(self) -> list[tuple[Monomial, Scalar]]:
        """Terms in descending lexicographic monomial order."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono, self.ring.field.zero)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("total degree of the zero polynomial is undefined")
        return max(monomial_degree(m) for m in self._terms)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms)

    def leading_coefficient(self) -> Scalar:
        return self._terms[self.leading_monomial()]

    # -- arithmetic --------------------------------------------------------

    def _coerce_operand(self, other) -> "CPoly":
        if isinstance(other, CPoly):
            _check_same_ring(self, other)
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> "CPoly":
        other = self._coerce_operand(other)
        f = self.ring.field
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = f.add(terms.get(mono, f.zero), coeff)
            if s == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return CPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "CPoly":
        f = self.ring.field
        return CPoly(self.ring, {m: f.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other) -> "CPoly":
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other) -> "CPoly":
        return self._coerce_operand(other) - self

    def __mul__(self, other) -> "CPoly":
        other = self._coerce_operand(other)
        f = self.ring.field
        terms: dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = monomial_mul(m1, m2)
                s = f.add(terms.get(mono, f.zero), f.mul(c1, c2))
                if s == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        return CPoly(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, s: Scalar) -> "CPoly":
        f = self.ring.field
        s = f.coerce(s)
        if s == 0:
            return CPoly(self.ring, {})
        return CPoly(self.ring, {m: f.mul(c, s) for m, c in self._terms.items()})

    def monic(self) -> "CPoly":
        if not self._terms:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(self.ring.field.inv(self.leading_coefficient()))

    def mul_term(self, mono: Monomial, coeff: Scalar) -> "CPoly":
        f = self.ring.field
        coeff = f.coerce(coeff)
        if coeff == 0:
            return CPoly(self.ring, {})
        return CPoly(
            self.ring, {monomial_mul(m, mono): f.mul(c, coeff) for m, c in self._terms.items()}
        )

    # -- evaluation and context changes -------------------------------------

    def evaluate(self, assignment: dict[str, Scalar]) -> Scalar:
        """Evaluate at a full symbol assignment; returns a field scalar."""
        values = tuple(self.ring.field.coerce(assignment[s]) for s in self.ring.symbols)
        return self.evaluate_tuple(values)

    def evaluate_tuple(self, values: tuple[Scalar, ...]) -> Scalar:
        f = self.ring.field
        acc = f.zero
        for mono, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, mono):
                if e:
                    term = f.mul(term, f.pow(v, e))
            acc = f.add(acc, term)
        return acc

    def lift(self, ring: SymbolRing) -> "CPoly":
        """Re-express in a ring whose symbol list contains this ring's symbols."""
        check_same_field(self.ring.field, ring.field)
        try:
            positions = [ring._index[s] for s in self.ring.symbols]
        except KeyError as e:
            raise ContextMismatchError(f"target ring lacks symbol {e.args[0]!r}") from None
        terms: dict[Monomial, Scalar] = {}
        for mono, coeff in self._terms.items():
            expo = [0] * ring.nsymbols
            for pos, e in zip(positions, mono):
                expo[pos] = e
            terms[tuple(expo)] = coeff
        return CPoly(ring, terms)

    # -- equality and display -----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, CPoly):
            if isinstance(other, (int,)) or hasattr(other, "denominator"):
                return self == self.ring.constant(other)
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    def _format_monomial(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.ring.symbols, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        f = self.ring.field
        chunks: list[str] = []
        for mono, coeff in self.terms():
            mono_str = self._format_monomial(mono)
            negative = not isinstance(coeff, int) and coeff < 0
            mag = -coeff if negative else coeff
            if not mono_str:
                body = f.format(mag)
            elif mag == f.one:
                body = mono_str
            else:
                body = f"{f.format(mag)}*{mono_str}"
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"CPoly({self})"


@dataclass(frozen=True)
class ConstraintSystem:
    """A set of polynomial equations (each CPoly = 0) over shared symbols."""

    ring: SymbolRing
    equations: tuple[CPoly, ...] = dataclass_field(default_factory=tuple)

    def __post_init__(self):
        for eq in self.equations:
            if eq.ring != self.ring:
                raise ContextMismatchError("equation ring differs from system ring")

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.ring.symbols

    def __str__(self) -> str:
        if not self.equations:
            return "<empty system>"
        return "; ".join(f"{eq} = 0" for eq in self.equations)


# -- division and Groebner bases ---------------------------------------------


def normal_form(f: CPoly, basis: Iterable[CPoly]) -> CPoly:
    """Remainder of multivariate division of f by the basis under lex order.

    No monomial of the result is divisible by any basis leading monomial.
    """
    divisors = []
    for g in basis:
        _check_same_ring(f, g)
        if g.is_zero():
            raise ValueError("zero polynomial in division basis")
        divisors.append((g.leading_monomial(), g.leading_coefficient(), g))
    fld = f.ring.field
    p = f
    remainder = f.ring.zero()
    while not p.is_zero():
        lm = p.leading_monomial()
        lc = p._terms[lm]
        for gm, gc, g in divisors:
            if monomial_divides(gm, lm):
                p = p - g.mul_term(monomial_quotient(lm, gm), fld.div(lc, gc))
                break
        else:
            head = CPoly(f.ring, {lm: lc})
            remainder = remainder + head
            p = p - head
    return remainder


def s_polynomial(f: CPoly, g: CPoly) -> CPoly:
    _check_same_ring(f, g)
    fld = f.ring.field
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    lcm = monomial_lcm(lmf, lmg)
    left = f.mul_term(monomial_quotient(lcm, lmf), fld.inv(f.leading_coefficient()))
    right = g.mul_term(monomial_quotient(lcm, lmg), fld.inv(g.leading_coefficient()))
    return left - right


def buchberger(gens: Iterable[CPoly]) -> list[CPoly]:
    """Groebner basis of the ideal generated by gens, under lex order.

    Naive pair queue with the coprime-leading-monomial skip; the constraint
    systems this library produces are tiny, so no further criteria are used.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator list")
    basis = [g for g in gens if not g.is_zero()]
    for g in basis:
        _check_same_ring(basis[0], g)
    if not basis:
        return []
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        lmi, lmj = basis[i].leading_monomial(), basis[j].leading_monomial()
        if monomial_lcm(lmi, lmj) == monomial_mul(lmi, lmj):
            continue  # coprime leading monomials: S-poly reduces to zero
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r)
            pairs.extend((i, len(basis) - 1) for i in range(len(basis) - 1))
    return basis


def is_groebner_basis(basis: list[CPoly]) -> bool:
    for j in range(len(basis)):
        for i in range(j):
            if not normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero():
                return False
    return True


def reduce_groebner(basis: Iterable[CPoly]) -> list[CPoly]:
    """The unique reduced Groebner basis for the ideal of a Groebner basis.

    Elements come out monic, fully reduced against each other, and sorted by
    ascending leading monomial.  The input is interreduced first (replacing
    each element by its normal form against the rest preserves the ideal),
    so a set that becomes a Groebner basis under tail reduction is accepted;
    if even the interreduced set has an S-polynomial that does not reduce to
    zero, the input was not a Groebner basis and an error is raised.
    """
    work = []
    for g in basis:
        if not g.is_zero() and g.monic() not in work:
            work.append(g.monic())
    work.sort(key=lambda g: g.leading_monomial())
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            g = work[i]
            others = work[:i] + work[i + 1 :]
            if not others:
                continue
            r = normal_form(g, others)
            if r.is_zero():
                work = others
                changed = True
                break
            r = r.monic()
            if r != g:
                work[i] = r
                changed = True
        work.sort(key=lambda g: g.leading_monomial())
    if not is_groebner_basis(work):
        raise NotAGroebnerBasisError("an S-polynomial does not reduce to zero")
    return work


def enumerate_solutions(
    system: ConstraintSystem, cap: int = 10**6
) -> list[dict[str, Scalar]]:
    """All points of F_p^s where every equation vanishes, in lex order.

    Plain enumeration; raises SearchSpaceTooLargeError when p**s exceeds the
    cap and UnsupportedFieldError over the rationals.
    """
    fld = system.ring.field
    if not fld.is_finite:
        raise UnsupportedFieldError("cannot enumerate solutions over Q")
    s = len(system.symbols)
    needed = fld.p**s
    if needed > cap:
        raise SearchSpaceTooLargeError(needed, cap)
    solutions = []
    for point in product(fld.elements(), repeat=s):
        if all(eq.evaluate_tuple(point) == 0 for eq in system.equations):
            solutions.append(dict(zip(system.symbols, point)))
    return solutions
