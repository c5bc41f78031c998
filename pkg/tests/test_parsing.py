import pytest
from hypothesis import given, settings, strategies as st

from ncfactor.commutative import SymbolRing
from ncfactor.errors import ParseError
from ncfactor.fields import PrimeField, RationalField
from ncfactor.freealg import Alphabet, FreeAlgebra
from ncfactor.parsing import identifiers_in, parse_expression


def algebra(p=5, names=("x", "y")):
    field = PrimeField(p) if p else RationalField()
    return FreeAlgebra(Alphabet(names), SymbolRing(field, ()))


ALG = algebra()


class TestGrammar:
    def test_quintic_input(self):
        f = parse_expression("y*x*y*x*y - y", ALG)
        assert f == ALG.poly({ALG.alphabet.word("yxyxy"): 1, ALG.alphabet.word("y"): -1})

    def test_power_expands_single_variable(self):
        one_var = algebra(names=("x",))
        f = parse_expression("x^2 - 1", one_var)
        assert f == one_var.poly({(0, 0): 1, (): -1})

    def test_order_preserved(self):
        f = parse_expression("x*y - y*x", ALG)
        assert not f.is_zero()
        assert f == ALG.poly({(0, 1): 1, (1, 0): -1})

    def test_whitespace_insignificant(self):
        assert parse_expression(" y*x \t- 1 ", ALG) == parse_expression("y*x-1", ALG)

    def test_parentheses_and_unary_minus(self):
        f = parse_expression("-(x - y)*(x + y)", ALG)
        assert f == -(ALG.from_text("x - y") * ALG.from_text("x + y"))

    def test_integer_coefficients_reduce_mod_p(self):
        assert parse_expression("7*x", ALG) == parse_expression("2*x", ALG)

    def test_rational_coefficient_over_q(self):
        alg = algebra(None)
        f = parse_expression("1/2*x + 3", alg)
        from fractions import Fraction

        assert f.coefficient((0,)).constant_value() == Fraction(1, 2)

    def test_rational_coefficient_invertible_mod_p(self):
        f = parse_expression("1/2*x", ALG)
        assert f == parse_expression("3*x", ALG)


class TestErrors:
    def test_unknown_identifier_with_position(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x*z", ALG)
        assert exc.value.position == 2

    def test_syntax_error_reports_expectations(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x + * y", ALG)
        assert exc.value.position == 4
        assert exc.value.expected

    def test_trailing_input(self):
        with pytest.raises(ParseError):
            parse_expression("x y", ALG)

    def test_power_of_parenthesized_group_rejected(self):
        with pytest.raises(ParseError):
            parse_expression("(x + y)^2", ALG)

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_expression("1/0*x", ALG)

    def test_denominator_vanishing_mod_p(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("1/5*x", ALG)
        assert "not reducible" in str(exc.value)

    def test_unexpected_character(self):
        with pytest.raises(ParseError):
            parse_expression("x & y", ALG)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_expression("", ALG)


def test_identifiers_in_source_order():
    assert identifiers_in("y*x + b*y") == ["y", "x", "b"]


@st.composite
def ncpolys(draw, alg):
    p = alg.zero()
    for _ in range(draw(st.integers(min_value=0, max_value=5))):
        length = draw(st.integers(min_value=0, max_value=4))
        word = tuple(
            draw(st.integers(min_value=0, max_value=alg.alphabet.size - 1))
            for _ in range(length)
        )
        coeff = draw(st.integers(min_value=-6, max_value=6))
        p = p + alg.monomial(word, coeff)
    return p


@given(ncpolys(algebra(5)))
@settings(max_examples=80)
def test_round_trip_over_f5(f):
    assert parse_expression(str(f), algebra(5)) == f


@given(ncpolys(algebra(None)))
@settings(max_examples=80)
def test_round_trip_over_q(f):
    assert parse_expression(str(f), algebra(None)) == f
