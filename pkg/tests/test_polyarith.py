import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from chowbso.expr import ParseError
from chowbso.polyarith import (
    MultiPoly,
    NotDivisibleError,
    VariableCountMismatch,
    add,
    coefficient_of,
    exact_div,
    monomial,
    mul,
    mul_multilinear_truncated,
    parse_poly,
    truncate_multilinear,
)

from conftest import from_sympy, multilinear_strategy, poly_strategy, to_sympy


def P(text, n=2):
    return parse_poly(text, n)


def test_add_examples():
    assert add(P("z1"), P("-z1")) == MultiPoly.zero(2)
    assert add(P("1+z1"), P("1-z1")) == 2
    assert add(P("z1*z2^3"), P("z1*z2^3")) == P("2*z1*z2^3")


def test_mul_examples():
    z1, z2 = sympy.symbols("z1 z2")
    oracle = from_sympy((1 + z1 + z2) * (1 - z1 - z2), 2)
    got = mul(P("1+z1+z2"), P("1-z1-z2"))
    assert got == oracle
    assert str(got) == "1 - z1^2 - 2*z1*z2 - z2^2"
    assert mul(P("1+z1"), P("1-z1")) == P("1 - z1^2")
    assert mul(P("3*z1*z2 + 7"), MultiPoly.zero(2)) == 0


def test_nvars_mismatch():
    with pytest.raises(VariableCountMismatch):
        add(P("z1"), P("z1", 3))
    with pytest.raises(VariableCountMismatch):
        mul(P("z1"), P("z1", 3))
    with pytest.raises(VariableCountMismatch):
        exact_div(P("z1"), P("z1", 3))


def test_truncated_examples():
    assert mul_multilinear_truncated(P("1+z1"), P("1+z1")) == P("1 + 2*z1")
    assert mul_multilinear_truncated(P("1+z1+z2"), P("1-z1-z2")) == P("1 - 2*z1*z2")
    p = P("1 + 3*z1 - z1*z2")
    assert mul_multilinear_truncated(p, MultiPoly.one(2)) == p


def test_exact_div_examples():
    assert exact_div(P("z1^2 - z2^2"), P("z1 - z2")) == P("z1 + z2")
    assert exact_div(P("2*z1*z2*(z2^2 - z1^2)"), P("z2^2 - z1^2")) == P("2*z1*z2")
    with pytest.raises(NotDivisibleError) as info:
        exact_div(P("z1"), P("z2"))
    assert info.value.remainder == P("z1")


def test_exact_div_reports_true_remainder():
    with pytest.raises(NotDivisibleError) as info:
        exact_div(P("z1^2 + 1"), P("z1 - 1"))
    assert info.value.remainder == 2
    with pytest.raises(NotDivisibleError):
        exact_div(P("3*z1"), P("2*z1"))
    with pytest.raises(ZeroDivisionError):
        exact_div(P("z1"), MultiPoly.zero(2))


def test_coefficient_examples():
    assert coefficient_of(P("1 - z1^2 - 2*z1*z2 - z2^2"), monomial(2, {0: 1, 1: 1})) == -2
    assert coefficient_of(P("1+z1"), (1, 0)) == 1
    assert coefficient_of(P("1+z1"), (0, 1)) == 0
    g = P("(1+z1+z2)*(1+z1-z2)*(1-z1+z2)")
    z1, z2 = sympy.symbols("z1 z2")
    oracle = sympy.Poly(sympy.expand((1 + z1 + z2) * (1 + z1 - z2) * (1 - z1 + z2)), z1, z2)
    assert coefficient_of(g, {0: 1, 1: 1}) == oracle.coeff_monomial(z1 * z2) == 2


def test_parse_examples():
    p = P("z1*z2^3 - 2")
    assert p.terms == {(1, 3): 1, (0, 0): -2}
    with pytest.raises(ParseError, match="unknown variable 'z3'") as info:
        P("z3")
    assert info.value.pos == 0
    assert P("-(1+z1)^2") == P("-1 - 2*z1 - z1^2")


def test_parse_precedence():
    assert P("-z1^2") == -(P("z1") ** 2)
    assert P("-2^2", 1) == -4
    assert P("2*-z1") == P("-2*z1")
    assert P("1 - z1 - z2") == P("1 + (-z1) + (-z2)")
    assert P("  z1 *\tz2 ") == P("z1*z2")


@pytest.mark.parametrize(
    "text, pos",
    [("z1 +", 4), ("(z1", 3), ("z1 ^ z2", 5), ("z1 $ 2", 3), ("z1 z2", 3), ("z1^70000", 3)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.pos == pos


def test_exponent_limit():
    assert P("z1^65535", 1).degree() == 65535
    with pytest.raises(ParseError, match="overflow"):
        P("z1^65536", 1)


def test_big_coefficients():
    p = P("(2*z1 + 3)^40", 1)
    assert p.coefficient((40,)) == 2**40
    assert p.coefficient((0,)) == 3**40


def test_printing_order():
    assert str(P("z2^2 + z1^2 + 1 + z1*z2")) == "1 + z1^2 + z1*z2 + z2^2"
    assert str(MultiPoly.zero(3)) == "0"
    assert str(P("-z1 + 3")) == "3 - z1"


N = 3
polys = poly_strategy(N)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + MultiPoly.zero(N) == a
    assert a * MultiPoly.one(N) == a
    assert a - a == 0


@given(polys, polys)
def test_mul_matches_sympy(a, b):
    assert a * b == from_sympy(to_sympy(a) * to_sympy(b), N)


@given(polys, polys.filter(bool))
def test_exact_div_roundtrip(a, b):
    assert exact_div(a * b, b) == a


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(multilinear_strategy(n), multilinear_strategy(n))))
def test_truncated_matches_bruteforce(pair):
    a, b = pair
    assert mul_multilinear_truncated(a, b) == truncate_multilinear(a * b)


@given(poly_strategy(4, max_exp=4, max_terms=8))
def test_parse_print_roundtrip(p):
    assert parse_poly(str(p), 4) == p


@settings(max_examples=30)
@given(polys, st.integers(0, 4))
def test_pow_matches_repeated_mul(a, k):
    expected = MultiPoly.one(N)
    for _ in range(k):
        expected = expected * a
    assert a**k == expected


def test_canonical_form_drops_zeros():
    p = MultiPoly({(1, 0): 0, (0, 1): 2}, 2)
    assert p.terms == {(0, 1): 2}
    assert hash(p) == hash(P("2*z2"))


def test_compose():
    f = P("z1^2 + 3*z2")
    g = f.compose([P("z1 + z2"), P("z1*z2")])
    assert g == P("z1^2 + 5*z1*z2 + z2^2")
