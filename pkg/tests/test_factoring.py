import pytest

from ncfactor.commutative import SymbolRing
from ncfactor.errors import SearchSpaceTooLargeError
from ncfactor.factoring import (
    DegreeSplit,
    FactorOptions,
    assemble_constraints,
    commutative_factor_degrees,
    factor_all,
    factor_bidegree,
    factor_completely,
    knapsack_splits,
    _pair_key,
)
from ncfactor.fields import PrimeField, RationalField
from ncfactor.freealg import Alphabet, FreeAlgebra, normalize_pair, overlap_lengths
from ncfactor.oracle import brute_force_factor, chain_family, random_factorable
from ncfactor.commutative import reduce_groebner, buchberger


def algebra(p=5):
    field = PrimeField(p) if p else RationalField()
    return FreeAlgebra(Alphabet(("x", "y")), SymbolRing(field, ()))


ALG = algebra()


def pair_set(facts):
    return {_pair_key(f.left, f.right) for f in facts}


class TestFactorBidegree:
    @pytest.mark.parametrize("p", [5, 7])
    def test_quintic_example(self, p):
        alg = algebra(p)
        f = alg.from_text("y*x*y*x*y - y")
        facts = factor_bidegree(f, (2, 3))
        assert len(facts) == 2
        expected = {
            _pair_key(alg.from_text("y*x - 1"), alg.from_text("y*x*y + y")),
            _pair_key(alg.from_text("y*x + 1"), alg.from_text("y*x*y - y")),
        }
        assert pair_set(facts) == expected
        ring = facts[0].system.ring
        a = ring.symbol("a1")
        assert list(facts[0].reduced_basis) == [a * a - 1]

    def test_degree_one_split(self):
        f = ALG.from_text("y*x*y*x*y - y")
        facts = factor_bidegree(f, (1, 4))
        assert pair_set(facts) == {
            _pair_key(ALG.from_text("y"), ALG.from_text("x*y*x*y - 1"))
        }
        assert facts[0].system.equations == ()

    def test_irreducible_head_prunes_split(self):
        assert factor_bidegree(ALG.from_text("x*x - y*y"), (1, 1)) == []

    def test_split_must_match_degree(self):
        with pytest.raises(ValueError):
            factor_bidegree(ALG.from_text("x*y"), (2, 2))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor_bidegree(ALG.zero(), (1, 1))

    def test_round_trip_of_every_result(self):
        for seed in range(40):
            f, g, h = random_factorable(seed, PrimeField(3), 2, 2, term_cap=3)
            for fact in factor_bidegree(f, (2, 2)):
                assert fact.left * fact.right == f
                assert fact.left.leading_coefficient() == f.algebra.ring.one()

    def test_enumeration_cap_propagates(self):
        f = ALG.from_text("y*x*y*x*y - y")
        with pytest.raises(SearchSpaceTooLargeError):
            factor_bidegree(f, (2, 3), FactorOptions(enumeration_cap=2))

    def test_rationals_concrete_when_no_symbols(self):
        alg = algebra(None)
        f = alg.from_text("y*x*y*x*y - y")
        facts = factor_bidegree(f, (1, 4))
        assert len(facts) == 1 and facts[0].is_concrete
        assert facts[0].solutions == ({},)

    def test_rationals_symbolic_description(self):
        alg = algebra(None)
        f = alg.from_text("y*x*y*x*y - y")
        facts = factor_bidegree(f, (2, 3))
        assert len(facts) == 1
        fact = facts[0]
        assert fact.solutions is None
        assert not fact.is_concrete
        ring = fact.system.ring
        a = ring.symbol("a1")
        assert list(fact.reduced_basis) == [a * a - 1]
        # substituting either admissible value of the symbol gives a factorization
        for value in (1, -1):
            left = fact.left.substitute_symbols({"a1": value})
            right = fact.right.substitute_symbols({"a1": value})
            assert left * right == f

    def test_symbol_economy(self):
        # pivots minimize the overlap count and produce one symbol per overlap
        f = ALG.from_text("y*x*y*x*y - y")
        facts = factor_bidegree(f, (2, 3))
        g_hat, h_hat = facts[0].pivots
        assert len(facts[0].system.symbols) == len(overlap_lengths(g_hat, h_hat))
        from ncfactor.homogeneous import factor_homogeneous

        g_top, h_top = factor_homogeneous(f.homogeneous_part(5), 2, 3)
        minimum = min(
            len(overlap_lengths(u, v))
            for u in g_top.words()
            for v in h_top.words()
        )
        assert len(facts[0].system.symbols) == minimum


class TestScanAmbiguities:
    """Inputs where a monomial is explainable through a non-pivot head word.

    A naive quotient scan forces wrong coefficients on these; the per-step
    linear solve and the merge across pivot attempts recover the full
    solution set.  Each case is cross-checked against the exhaustive oracle.
    """

    def _check(self, f, split, exhaustive=True):
        mine = pair_set(factor_bidegree(f, split))
        oracle = {
            _pair_key(g, h)
            for g, h in brute_force_factor(
                f, split, exhaustive=exhaustive, budget=10**7
            )
        }
        assert mine == oracle
        return mine

    def test_cross_assignment_through_nonpivot_head_word(self):
        alg = algebra(2)
        f = alg.from_text("(y^2 + x*y + 1) * (y + 1)")
        assert len(self._check(f, (2, 1))) == 1

    def test_underdetermined_step_needs_overlap_pivot(self):
        # (y+x+1)(y^2+xy) = (y+x)(y^2+xy+y): the overlap-free pivot pair sees
        # only one member of the family; the overlap pair parametrizes both
        alg = algebra(2)
        f = alg.from_text("(y + x + 1) * (y^2 + x*y)")
        assert len(self._check(f, (1, 2))) == 2

    def test_cancellation_kernel_invisible_in_support(self):
        # (y^3+yxy)(y^3+1) = (y^3+yxy+y^2+yx)(y^3+y^2+y): the second pair's
        # middle parts cancel entirely in degree 5, so the step system is
        # seeded only through the overlap symbol
        alg = algebra(2)
        f = alg.from_text("(y^3 + y*x*y) * (y^3 + 1)")
        # exhaustive enumeration is out of budget at degree 6; the
        # prefix/suffix-restricted oracle covers both pairs here
        assert len(self._check(f, (3, 3), exhaustive=False)) == 2


class TestAssembleConstraints:
    def test_quintic_overlap_system(self):
        sym = ALG.extend_symbols(("a1",))
        a = sym.ring.symbol("a1")
        g = sym.from_text("y*x") - sym.monomial((), a)
        h = sym.from_text("y*x*y") + sym.monomial(sym.alphabet.word("y"), a)
        f = ALG.from_text("y*x*y*x*y - y")
        system = assemble_constraints(f, g, h)
        assert len(system.equations) == 1
        assert reduce_groebner(buchberger(list(system.equations))) == [a * a - 1]

    def test_exact_product_gives_empty_system(self):
        g = ALG.from_text("y*x - 1")
        h = ALG.from_text("y*x*y + y")
        f = g * h
        assert assemble_constraints(f, g, h).equations == ()

    def test_wrong_product_gives_constant_contradiction(self):
        g = ALG.from_text("y*x")
        h = ALG.from_text("y*x*y")
        f = ALG.from_text("y*x*y*x*y - y")
        system = assemble_constraints(f, g, h)
        assert any(eq.is_constant() and not eq.is_zero() for eq in system.equations)


class TestKnapsackSplits:
    def test_irreducible_image_leaves_no_splits(self):
        # x*y + 1 has irreducible commutative image of full degree
        f = ALG.from_text("x*y + 1")
        assert knapsack_splits(f) == set()

    def test_quintic_splits(self):
        f = ALG.from_text("y*x*y*x*y - y")
        assert knapsack_splits(f) == {
            DegreeSplit(1, 4),
            DegreeSplit(2, 3),
            DegreeSplit(3, 2),
            DegreeSplit(4, 1),
        }

    def test_commutative_factorization_drives_splits(self):
        f = ALG.from_text("x*x + x*y - y*x - y*y")  # image x^2 - y^2
        assert knapsack_splits(f) == {DegreeSplit(1, 1)}

    def test_vanishing_image_falls_back_to_top_part(self):
        # image of x*y - y*x is 0; the top part is the whole polynomial here,
        # so every split of the degree survives
        f = ALG.from_text("x*y - y*x")
        assert knapsack_splits(f) == {DegreeSplit(1, 1)}

    def test_filter_soundness_on_random_products(self):
        for seed in range(60):
            dg = 1 + seed % 2
            dh = 1 + (seed // 2) % 2
            f, g, h = random_factorable(seed, PrimeField(2), dg, dh, term_cap=3)
            splits = knapsack_splits(f)
            n = f.degree()
            for b in range(1, n):
                found = brute_force_factor(f, (b, n - b), budget=10**6)
                if found:
                    assert DegreeSplit(b, n - b) in splits


class TestCommutativeFactorDegrees:
    def test_quintic_image_degrees(self):
        img = ALG.from_text("y*x*y*x*y - y").commutative_image()
        assert commutative_factor_degrees(img) == [1, 2, 2]

    def test_monomial_content(self):
        ring = SymbolRing(PrimeField(5), ("x", "y"))
        c = ring.poly({(2, 1): 3})
        assert commutative_factor_degrees(c) == [1, 1, 1]

    def test_budget_exhaustion_returns_none(self):
        img = ALG.from_text("y*x*y*x*y - y").commutative_image()
        assert commutative_factor_degrees(img, budget=10) is None

    def test_rationals_unsupported(self):
        alg = algebra(None)
        img = alg.from_text("x*y + 1").commutative_image()
        assert commutative_factor_degrees(img) is None


class TestFactorAll:
    def test_quintic_all_splits(self):
        f = ALG.from_text("y*x*y*x*y - y")
        result = factor_all(f)
        assert set(result) == {
            DegreeSplit(1, 4),
            DegreeSplit(2, 3),
            DegreeSplit(3, 2),
            DegreeSplit(4, 1),
        }
        assert pair_set(result[DegreeSplit(1, 4)]) == {
            _pair_key(ALG.from_text("y"), ALG.from_text("x*y*x*y - 1"))
        }
        assert pair_set(result[DegreeSplit(4, 1)]) == {
            _pair_key(ALG.from_text("y*x*y*x - 1"), ALG.from_text("y"))
        }
        assert len(result[DegreeSplit(2, 3)]) == 2
        assert len(result[DegreeSplit(3, 2)]) == 2

    def test_factor_all_matches_oracle_at_unfiltered_splits(self):
        f = ALG.from_text("y*x*y*x*y - y")
        with_filter = factor_all(f)
        without = factor_all(f, FactorOptions(use_knapsack=False))
        assert {s: pair_set(v) for s, v in with_filter.items()} == {
            s: pair_set(v) for s, v in without.items()
        }

    def test_irreducible_polynomial_empty(self):
        assert factor_all(ALG.from_text("x*x - y*y")) == {}

    def test_monomial(self):
        result = factor_all(ALG.from_text("x*x"))
        assert set(result) == {DegreeSplit(1, 1)}
        assert pair_set(result[DegreeSplit(1, 1)]) == {
            _pair_key(ALG.from_text("x"), ALG.from_text("x"))
        }

    def test_degree_below_two_rejected(self):
        with pytest.raises(ValueError):
            factor_all(ALG.from_text("x"))


class TestFactorCompletely:
    def test_quintic_chains(self):
        f = ALG.from_text("y*x*y*x*y - y")
        chains = factor_completely(f, depth_cap=5)
        rendered = {tuple(str(p) for p in ch.factors) for ch in chains if ch.complete}
        assert ("y", "x*y + 4", "x*y + 1") in rendered
        assert ("y*x + 4", "y", "x*y + 1") in rendered
        assert ("y*x + 4", "y*x + 1", "y") in rendered
        assert all(ch.complete for ch in chains)
        for ch in chains:
            prod = ch.factors[0]
            for part in ch.factors[1:]:
                prod = prod * part
            assert prod == f

    def test_irreducible_single_chain(self):
        f = ALG.from_text("x*x - y*y")
        chains = factor_completely(f, depth_cap=5)
        assert len(chains) == 1
        assert chains[0].factors == (f,) and chains[0].complete

    def test_monomial_cube(self):
        f = ALG.from_text("x*x*x")
        chains = factor_completely(f, depth_cap=5)
        assert len(chains) == 1
        assert tuple(str(p) for p in chains[0].factors) == ("x", "x", "x")

    def test_depth_cap_marks_incomplete(self):
        f = ALG.from_text("y*x*y*x*y - y")
        chains = factor_completely(f, depth_cap=1)
        assert chains and any(not ch.complete for ch in chains)


class TestChainFamilyProperty:
    @pytest.mark.parametrize(
        "p,roots", [(5, [1, -1]), (7, [1, 2]), (7, [1, 2, 3])]
    )
    def test_every_chain_boundary_is_found(self, p, roots):
        field = PrimeField(p)
        f, chains = chain_family(field, roots)
        found = factor_all(f)
        for chain in chains:
            for cut in range(1, len(chain)):
                left = chain[0]
                for part in chain[1:cut]:
                    left = left * part
                right = chain[cut]
                for part in chain[cut + 1 :]:
                    right = right * part
                split = DegreeSplit(left.degree(), right.degree())
                assert split in found
                assert _pair_key(*normalize_pair(left, right)) in pair_set(found[split])
