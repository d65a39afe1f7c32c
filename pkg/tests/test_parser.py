import random

import pytest
from hypothesis import given, settings, strategies as st

from cherednik.algebra import AlgebraElement, format_element, random_element
from cherednik.errors import ExponentOnS, ExpressionSyntaxError
from cherednik.field import make_field
from cherednik.parser import parse, parse_scalar, tokenize

from conftest import params


def test_monomial_with_negative_X_power():
    P = params(5, 1, 1, 2)
    assert parse("s*X^-2*y^3", P) == AlgebraElement.monomial(P, 1, -2, 3)


def test_relation_four_parses_to_zero():
    P = params(7, 1, 1, 3)
    assert parse("X*y*Xinv - y + t - k*s", P).is_zero()


def test_all_relations_parse_to_zero():
    P = params(3, 2, 1, 4)
    for text in ["s*X - Xinv*s", "s*s - 1", "s*y + y*s + k", "X*y*X^-1 - y + t - k*s"]:
        assert parse(text, P).is_zero(), text


def test_central_expression():
    P = params(7, 1, 1, 2)
    e = parse("(y^7-y)^2", P)
    assert format_element(e) == "y^2 + 5*y^8 + y^14"


def test_normal_form_text():
    P = params(5, 1, 0, 1)
    assert format_element(parse("y*X", P)) == "X*y + 4*s*X"


def test_coefficient_literal_in_extension():
    ctx = make_field(3, 2)
    P = params(3, 2, 1, 1)
    e = parse("[1,2]*y", P)
    assert e == AlgebraElement.monomial(P, 0, 0, 1).scale(ctx.from_coeffs([1, 2]))


def test_unary_minus_and_scalars():
    P = params(5)
    assert parse("-3 + 3", P).is_zero()
    assert parse("-(y)", P) == AlgebraElement.gen(P, "y").scale(-1)


def test_Xinv_power():
    P = params(5)
    assert parse("Xinv^3", P) == AlgebraElement.monomial(P, 0, -3, 0)
    assert parse("X^(-2)", P) == AlgebraElement.monomial(P, 0, -2, 0)


class TestErrors:
    def test_unbalanced(self):
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse("y*(", params(5))
        assert exc.value.position == 3

    def test_bad_character(self):
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse("y # 2", params(5))
        assert exc.value.position == 2

    def test_exponent_on_s(self):
        with pytest.raises(ExponentOnS):
            parse("s^2", params(5))

    def test_negative_exponent_on_y(self):
        with pytest.raises(ExpressionSyntaxError):
            parse("y^-1", params(5))

    def test_unknown_name(self):
        with pytest.raises(ExpressionSyntaxError):
            parse("z", params(5))

    def test_trailing_garbage(self):
        with pytest.raises(ExpressionSyntaxError):
            parse("y y", params(5))

    def test_exponent_too_large(self):
        with pytest.raises(ExpressionSyntaxError):
            parse("X^100000", params(5))


def test_tokenize_positions():
    toks = tokenize("X * y^2")
    assert [(t[0], t[2]) for t in toks] == [("NAME", 0), ("*", 2), ("NAME", 4), ("^", 5), ("INT", 6), ("EOF", 7)]


def test_parse_scalar():
    ctx = make_field(5, 2)
    assert parse_scalar("3", ctx) == 3
    assert parse_scalar("1,2", ctx) == ctx.from_coeffs([1, 2])
    assert parse_scalar("-1", make_field(7)) == 6
    with pytest.raises(ExpressionSyntaxError):
        parse_scalar("1,2,3", ctx)
    with pytest.raises(ExpressionSyntaxError):
        parse_scalar("abc", ctx)


def _to_text(elem):
    """Write a normal form as an expression with explicit field literals."""
    parts = []
    for (i, j, l), c in elem.items():
        factors = [f"[{','.join(str(x) for x in c.coeffs())}]"]
        if i:
            factors.append("s")
        if j:
            factors.append(f"X^({j})")
        if l:
            factors.append(f"y^{l}")
        parts.append("*".join(factors))
    return " + ".join(parts) or "0"


@given(st.integers(0, 2 ** 30), st.sampled_from([(5, 1, 1, 2), (3, 2, 1, 4), (7, 1, 0, 3)]))
@settings(max_examples=80, deadline=None)
def test_print_parse_round_trip(seed, cell):
    P = params(*cell)
    e = random_element(P, random.Random(seed))
    assert parse(_to_text(e), P) == e
