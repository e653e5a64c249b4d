from fractions import Fraction

import pytest

from trianglemap.errors import DegenerateInputError
from trianglemap.io_formats import (
    format_exact,
    format_fraction,
    format_matrix,
    format_point,
    format_symbols_nd,
    parse_fraction,
    parse_point2,
    parse_pointn,
    parse_symbols_2d,
    parse_symbols_nd,
)
from trianglemap.numeric import BigFloat
from trianglemap.simplex import NonNegSymbol, PairSymbol


def test_parse_fraction():
    assert parse_fraction("3/7") == Fraction(3, 7)
    assert parse_fraction("2") == Fraction(2)
    assert parse_fraction(" 1/2 ") == Fraction(1, 2)


def test_format_fraction_round_trip():
    for f in (Fraction(1, 3), Fraction(-2, 7), Fraction(5)):
        assert parse_fraction(format_fraction(f)) == f


def test_format_exact_fraction_vs_interval():
    assert format_exact(Fraction(1, 2)) == "1/2"
    enc = format_exact(BigFloat.from_bounds(Fraction(1, 4), Fraction(1, 2), 64))
    assert set(enc) == {"lo", "hi", "bits"}
    assert parse_fraction(enc["lo"]) == Fraction(1, 4)


def test_parse_point2_rational():
    pt = parse_point2("1/2,1/3", 128)
    assert pt.alpha == Fraction(1, 2)
    assert pt.beta == Fraction(1, 3)


def test_parse_point2_decimal():
    pt = parse_point2("dec:0.5,0.25:128", 64)
    assert pt.alpha.low == Fraction(1, 2)
    assert pt.beta.high == Fraction(1, 4)


def test_parse_point2_root():
    pt = parse_point2("root:-1,1,1,1:0,1:pow2", 128)
    a, b = pt.alpha, pt.beta
    assert a.source is not None and b.source is not None
    assert a.low > b.low  # r > r^2 on (0, 1)


def test_parse_point2_arity():
    with pytest.raises(DegenerateInputError):
        parse_point2("1/2", 128)
    with pytest.raises(DegenerateInputError):
        parse_point2("1/2,1/3,1/4", 128)


def test_parse_pointn_dimensions():
    pt = parse_pointn("1/2,1/3,1/4", 128)
    assert pt.dim == 3
    single = parse_pointn("2/3", 128)
    assert single.dim == 1


def test_parse_symbols_2d():
    assert parse_symbols_2d("1,0,2") == (1, 0, 2)
    assert parse_symbols_2d(" 3 ") == (3,)
    with pytest.raises(DegenerateInputError):
        parse_symbols_2d("1,-2")


def test_parse_symbols_nd():
    syms = parse_symbols_nd("(1,3),0,6")
    assert syms == (PairSymbol(1, 3), NonNegSymbol(0), NonNegSymbol(6))
    assert format_symbols_nd(syms) == "(1,3),0,6"


def test_parse_symbols_nd_rejects_garbage():
    with pytest.raises(DegenerateInputError):
        parse_symbols_nd("(1,3),x")


def test_format_matrix_row_major():
    rows = ((0, 1), (-2, 3))
    assert format_matrix(rows) == ["0", "1", "-2", "3"]


def test_format_point():
    assert format_point((Fraction(1, 3), Fraction(1, 4))) == "1/3,1/4"
