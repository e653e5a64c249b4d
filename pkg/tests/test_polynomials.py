from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trianglemap.polynomials import (
    IntPolynomial,
    divides,
    divmod_exact,
    exact_quotient,
    gcd,
    squarefree_part,
)

X = IntPolynomial((0, 1))
ONE = IntPolynomial((1,))


def poly(*coeffs: int) -> IntPolynomial:
    return IntPolynomial(tuple(coeffs))


def test_strip_and_degree():
    p = poly(1, 2, 0, 0)
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert poly(0, 0).is_zero
    # the zero polynomial keeps one slot and is flagged, not degree -1
    assert poly(0).degree == 0 and poly(0).is_zero


def test_leading_and_evaluate():
    p = poly(-1, 1, 1, 1)  # x^3 + x^2 + x - 1
    assert p.leading == 1
    assert p.evaluate(Fraction(1)) == 2
    assert p.evaluate(Fraction(1, 2)) == Fraction(-1, 8)
    assert p.evaluate(0) == -1


def test_arithmetic():
    a = poly(1, 1)   # x + 1
    b = poly(-1, 1)  # x - 1
    assert a * b == poly(-1, 0, 1)
    assert a + b == poly(0, 2)
    assert a - b == poly(2)
    assert a.scale(3) == poly(3, 3)
    assert (a * b).derivative() == poly(0, 2)


def test_content_primitive():
    p = poly(-6, 0, 4)
    assert p.content() == 2
    assert p.primitive() == poly(-3, 0, 2)
    # primitive normalizes the leading sign
    assert poly(2, -4).primitive() == poly(-1, 2)


def test_text_round_trip():
    p = poly(-1, 1, 20, 1)
    assert IntPolynomial.from_text(p.to_text()) == p
    assert IntPolynomial.from_text("-1, 1, 1, 1") == poly(-1, 1, 1, 1)


def test_divmod_exact():
    num = poly(-1, 0, 1)
    q, r = divmod_exact(num, poly(1, 1))
    assert all(c == 0 for c in r)
    assert q == (Fraction(-1), Fraction(1))
    q2, r2 = divmod_exact(poly(1, 0, 1), poly(1, 1))
    assert any(c != 0 for c in r2)


def test_divides_and_quotient():
    num = poly(-1, 1, 1, 1) * poly(3, 5)
    assert divides(poly(-1, 1, 1, 1), num)
    assert not divides(poly(1, 1), num)
    assert exact_quotient(num, poly(-1, 1, 1, 1)) == poly(3, 5)


def test_divide_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        divmod_exact(poly(1, 1), poly(0))


def test_gcd_known():
    a = poly(-1, 0, 1)          # (x-1)(x+1)
    b = poly(1, 2, 1)           # (x+1)^2
    assert gcd(a, b) == poly(1, 1)
    assert gcd(a, poly(0)) == a.primitive()
    assert gcd(poly(4), a).degree == 0


def test_squarefree_part():
    p = poly(1, 1) * poly(1, 1) * poly(-2, 1)
    sf = squarefree_part(p)
    assert sf == (poly(1, 1) * poly(-2, 1)).primitive()
    assert squarefree_part(poly(-1, 1, 1, 1)) == poly(-1, 1, 1, 1)


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(
    lambda c: IntPolynomial(tuple(c)))


@given(small_polys, small_polys)
def test_gcd_divides_both(a, b):
    g = gcd(a, b)
    if g.is_zero:
        assert a.is_zero and b.is_zero
    else:
        for p in (a, b):
            if not p.is_zero:
                assert divides(g, p)


@given(small_polys)
def test_squarefree_divides(p):
    if p.is_zero:
        return
    sf = squarefree_part(p)
    assert divides(sf, p.primitive())


@given(small_polys, small_polys, st.fractions(max_denominator=50))
def test_product_evaluates(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
