from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from trianglemap.errors import DegenerateInputError, PrecisionExhaustedError
from trianglemap.numeric import (
    MIN_PRECISION,
    BigFloat,
    FormEvaluator,
    RootSpec,
    Sign,
    refine_root,
    root_powers,
    sign_of,
)
from trianglemap.polynomials import IntPolynomial

GOLDEN = RootSpec(IntPolynomial((-1, 1, 1)), Fraction(0), Fraction(1))
CUBIC1 = RootSpec(IntPolynomial((-1, 1, 1, 1)), Fraction(0), Fraction(1))


def test_from_fraction_exact():
    x = BigFloat.from_fraction(Fraction(3, 8), 128)
    lo, hi = x.bounds()
    assert lo == hi == Fraction(3, 8)
    assert x.width() == 0


def test_from_fraction_rounds_outward():
    x = BigFloat.from_fraction(Fraction(1, 3), 128)
    lo, hi = x.bounds()
    assert lo <= Fraction(1, 3) <= hi
    assert hi - lo <= Fraction(1, 2 ** 127)


def test_minimum_precision_enforced():
    with pytest.raises(ValueError):
        BigFloat.from_fraction(Fraction(1, 3), 8)
    assert BigFloat.from_fraction(Fraction(1, 3), MIN_PRECISION).prec == MIN_PRECISION


def test_from_decimal():
    x = BigFloat.from_decimal("0.25", 128)
    assert x.low == x.high == Fraction(1, 4)


def test_midpoint_and_float():
    x = BigFloat.from_bounds(Fraction(1, 4), Fraction(3, 4), 64)
    assert x.midpoint() == Fraction(1, 2)
    assert abs(float(x) - 0.5) < 1e-12


def test_signs():
    assert BigFloat.from_fraction(Fraction(2), 64).sign() is Sign.POSITIVE
    assert BigFloat.from_fraction(Fraction(-2), 64).sign() is Sign.NEGATIVE
    assert BigFloat.from_fraction(Fraction(0), 64).sign() is Sign.ZERO
    straddle = BigFloat.from_bounds(Fraction(-1), Fraction(1), 64)
    assert straddle.sign() is Sign.AMBIGUOUS


def test_sign_of_never_refines():
    # a tiny but nonzero value below the resolution of its own enclosure
    tiny = BigFloat.from_fraction(Fraction(1, 2 ** 300), 256)
    assert sign_of(tiny) is Sign.AMBIGUOUS
    assert sign_of(Fraction(-5, 7)) is Sign.NEGATIVE
    assert sign_of(Fraction(0)) is Sign.ZERO


def test_floor_certain():
    assert BigFloat.from_fraction(Fraction(7, 2), 64).floor_certain() == 3
    wide = BigFloat.from_bounds(Fraction(9, 10), Fraction(11, 10), 64)
    assert wide.floor_certain() is None


def test_add_sub_exact_width():
    a = BigFloat.from_fraction(Fraction(1, 3), 128)
    b = BigFloat.from_fraction(Fraction(1, 7), 128)
    s = a + b
    assert s.low <= Fraction(1, 3) + Fraction(1, 7) <= s.high
    d = a - b
    assert d.low <= Fraction(1, 3) - Fraction(1, 7) <= d.high


def test_mixed_arithmetic_with_rationals():
    a = BigFloat.from_fraction(Fraction(1, 3), 128)
    assert (a + Fraction(1, 3)).low <= Fraction(2, 3) <= (a + Fraction(1, 3)).high
    assert (2 * a).low <= Fraction(2, 3) <= (2 * a).high
    assert (1 - a).low <= Fraction(2, 3) <= (1 - a).high


def test_division_straddling_zero():
    num = BigFloat.from_fraction(Fraction(1), 64)
    den = BigFloat.from_bounds(Fraction(-1), Fraction(1), 64)
    with pytest.raises(PrecisionExhaustedError):
        num / den
    with pytest.raises(ZeroDivisionError):
        num / BigFloat.from_fraction(Fraction(0), 64)


def test_power():
    a = BigFloat.from_fraction(Fraction(-2, 3), 128)
    sq = a ** 2
    assert sq.low <= Fraction(4, 9) <= sq.high
    cube = a ** 3
    assert cube.low <= Fraction(-8, 27) <= cube.high


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=64)


@given(rationals, rationals)
def test_interval_arithmetic_contains_truth(x, y):
    a = BigFloat.from_fraction(x, 96)
    b = BigFloat.from_fraction(y, 96)
    for op, exact in (
        (a + b, x + y),
        (a - b, x - y),
        (a * b, x * y),
    ):
        lo, hi = op.bounds()
        assert lo <= exact <= hi
    if y != 0 and (y > 0 or y < 0):
        blo, bhi = b.bounds()
        if blo > 0 or bhi < 0:
            q = a / b
            assert q.low <= x / y <= q.high


def test_root_spec_requires_sign_change():
    with pytest.raises(DegenerateInputError):
        RootSpec(IntPolynomial((1, 0, 1)), Fraction(0), Fraction(1))
    with pytest.raises(DegenerateInputError):
        RootSpec(IntPolynomial((-1, 1, 1)), Fraction(0), Fraction(0))


def test_refine_root_golden():
    # positive root of x^2 + x - 1 satisfies g = (sqrt(5) - 1) / 2
    x = refine_root(GOLDEN, 256)
    lo, hi = x.bounds()
    assert hi - lo <= Fraction(1, 2 ** 255)
    p = GOLDEN.poly
    assert p.evaluate(lo) <= 0 <= p.evaluate(hi)
    assert x.refinable


def test_refined_value_nests():
    x = refine_root(CUBIC1, 80)
    y = x.refined(200)
    assert y.low >= x.low - x.width()
    assert y.high <= x.high + x.width()
    assert y.width() <= Fraction(1, 2 ** 199)


def test_root_powers_consistent():
    v1, v2 = root_powers(GOLDEN, 2, 160)
    # same underlying root: v2 enclosure must overlap v1 squared
    sq = v1 * v1
    assert sq.low <= v2.high and v2.low <= sq.high
    assert v1.source is not None and v2.source is not None
    assert v1.source.enclosure is v2.source.enclosure


def test_form_evaluator_rational_signs():
    ev = FormEvaluator([Fraction(1, 2), Fraction(1, 3)])
    assert ev.certified_sign((1, -1, 0)) is Sign.POSITIVE   # 1 - x
    assert ev.certified_sign((0, 1, -1)) is Sign.POSITIVE   # x - y
    assert ev.certified_sign((0, -2, 3)) is Sign.ZERO
    assert ev.certified_sign((-1, 1, 1)) is Sign.NEGATIVE


def test_form_evaluator_floor():
    ev = FormEvaluator([Fraction(1, 2), Fraction(1, 3)])
    assert ev.certified_floor((1, -1, 0), (0, 0, 1)) == 1
    ev2 = FormEvaluator([Fraction(3, 4), Fraction(1, 8)])
    assert ev2.certified_floor((1, -1, 0), (0, 0, 1)) == 2


def test_form_evaluator_exact_zero_shared_root():
    values = root_powers(CUBIC1, 3, 96)
    ev = FormEvaluator(list(values))
    # r^3 + r^2 + r - 1 = 0 exactly
    assert ev.certified_sign((-1, 1, 1, 1)) is Sign.ZERO
    assert ev.certified_sign((1, 1, 1, 1)) is Sign.POSITIVE


def test_form_evaluator_exact_integer_floor():
    # (1 - g) / g^2 equals 1 exactly for the golden pair
    values = root_powers(GOLDEN, 2, 96)
    ev = FormEvaluator(list(values))
    assert ev.certified_floor((1, -1, 0), (0, 0, 1)) == 1


def test_form_evaluator_refines_on_demand():
    values = root_powers(CUBIC1, 2, 64)
    ev = FormEvaluator(list(values))
    lo, hi = ev.eval_bounds((0, 1, 0))
    target = Fraction((lo + hi) / 2).limit_denominator(10 ** 40)
    # separating the root from a nearby rational forces refinement
    sign = ev.certified_sign((target.numerator, -target.denominator, 0))
    assert sign in (Sign.POSITIVE, Sign.NEGATIVE)
    assert ev.refinements >= 1


def test_form_evaluator_cap_limits_refinement():
    values = root_powers(CUBIC1, 2, 64)
    ev = FormEvaluator(list(values), cap_bits=64)
    lo, hi = ev.eval_bounds((0, 1, 0))
    mid = Fraction((lo + hi) / 2).limit_denominator(10 ** 60)
    assert ev.certified_sign((mid.numerator, -mid.denominator, 0)) is Sign.AMBIGUOUS
