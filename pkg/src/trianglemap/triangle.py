"""The 2D subdivision map, its symbol sequences, and the classical comparison.

Points live in the closed triangle 1 >= alpha >= beta > 0 (the lower edge
beta = 0 is tolerated by ``sequence``, which then terminates immediately).
The map splits the triangle into wedges indexed by k = floor((1-alpha)/beta)
and sends a point of wedge k to (beta/alpha, (1-alpha-k*beta)/alpha).

Sequences are computed without iterating the map itself: the engine maintains
three integer lattice columns whose dot products with (1, alpha, beta) are the
current remainders.  All branch decisions are certified sign and floor queries
on those integer forms, so the only rounding error in play is the width of
the input enclosures times an integer norm; root-backed inputs refine
themselves on demand when a decision would otherwise be ambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence as SequenceType

from .errors import DegenerateInputError, PrecisionExhaustedError
from .matrices import IntMatrix
from .numeric import (
    BigFloat,
    ExactNumber,
    FormEvaluator,
    RootSpec,
    SequenceStatus,
    Sign,
    root_powers,
)

Column = tuple[int, int, int]


@dataclass(frozen=True)
class Point2:
    alpha: ExactNumber
    beta: ExactNumber

    @classmethod
    def from_rationals(cls, alpha, beta) -> "Point2":
        return cls(Fraction(alpha), Fraction(beta))

    @classmethod
    def from_root(cls, spec: RootSpec, precision: int) -> "Point2":
        """The pair (r, r**2) for the root r described by spec.

        Both coordinates share one bisection cache, so certified queries
        refine them together.
        """
        a, b = root_powers(spec, 2, precision)
        return cls(a, b)


@dataclass(frozen=True)
class SequenceRecord:
    symbols: tuple[int, ...]
    d_history: tuple[ExactNumber, ...]
    status: SequenceStatus
    matrix: IntMatrix
    refinements: int
    precision_bits: int

    @property
    def terminated(self) -> bool:
        return self.status is SequenceStatus.TERMINATED


def _col_sub(a: Column, b: Column) -> Column:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _col_addmul(a: Column, c: int, b: Column) -> Column:
    return (a[0] + c * b[0], a[1] + c * b[1], a[2] + c * b[2])


def _form(col: Column) -> tuple[int, int, int]:
    # a column is already the coefficient vector of c0 + c1*alpha + c2*beta
    return col


def _require_domain(ev: FormEvaluator, *, strict_beta: bool) -> None:
    checks = [
        ((1, -1, 0), "alpha exceeds 1"),
        ((0, 1, -1), "beta exceeds alpha"),
        ((0, 0, 1), "beta is negative"),
    ]
    for coeffs, msg in checks:
        s = ev.certified_sign(coeffs)
        if s is Sign.NEGATIVE:
            raise DegenerateInputError(msg)
        if s is Sign.AMBIGUOUS:
            raise PrecisionExhaustedError(f"cannot certify domain: {msg}")
        if strict_beta and coeffs == (0, 0, 1) and s is Sign.ZERO:
            raise DegenerateInputError("beta must be positive")


def _classify(ev: FormEvaluator) -> int:
    _require_domain(ev, strict_beta=True)
    k = ev.certified_floor((1, -1, 0), (0, 0, 1))
    # verify both boundary tests rather than trusting the floor alone
    s_in = ev.certified_sign((1, -1, -k))
    s_out = ev.certified_sign((1, -1, -(k + 1)))
    if s_in is Sign.AMBIGUOUS or s_out is Sign.AMBIGUOUS:
        raise PrecisionExhaustedError("wedge boundary test is ambiguous")
    if s_in is Sign.NEGATIVE or s_out is not Sign.NEGATIVE:
        raise AssertionError("certified floor contradicts boundary signs")
    return k


def classify(point: Point2, *, cap_bits: int | None = None) -> int:
    """The wedge index k with 1 - alpha - k*beta >= 0 > 1 - alpha - (k+1)*beta."""
    ev = FormEvaluator([point.alpha, point.beta], cap_bits=cap_bits)
    return _classify(ev)


def step(point: Point2, *, cap_bits: int | None = None) -> tuple[int, Point2]:
    """One application of the map: the wedge symbol and the image point."""
    ev = FormEvaluator([point.alpha, point.beta], cap_bits=cap_bits)
    k = _classify(ev)
    # use the evaluator's coordinates: refinement during classification may
    # have tightened them enough for the divisions below to be sign-definite
    a, b = ev.values
    image_a = b / a
    image_b = (1 - a - b * k) / a
    return k, Point2(image_a, image_b)


def sequence(point: Point2, max_len: int, *, cap_bits: int | None = None) -> SequenceRecord:
    """Certified symbol sequence with remainder history and column matrix.

    Remainders follow d_j = d_{j-3} - d_{j-2} - a_j * d_{j-1} from seeds
    (1, alpha, beta); the run terminates when a remainder hits exact zero
    (rational or algebraically detected), truncates at max_len, or reports
    precision exhaustion when a branch cannot be certified and the inputs
    cannot refine.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    ev = FormEvaluator([point.alpha, point.beta], cap_bits=cap_bits)
    _require_domain(ev, strict_beta=False)

    cols: list[Column] = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    symbols: list[int] = []
    d_hist: list[ExactNumber] = [ev.materialize(c) for c in cols]
    status = None

    while len(symbols) < max_len:
        s_last = ev.certified_sign(_form(cols[2]))
        if s_last is Sign.ZERO:
            status = SequenceStatus.TERMINATED
            break
        if s_last is Sign.AMBIGUOUS:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        if s_last is Sign.NEGATIVE:
            raise AssertionError("remainder certified negative")
        t = _col_sub(cols[0], cols[1])
        try:
            a = ev.certified_floor(t, cols[2])
        except PrecisionExhaustedError:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        g1 = _col_addmul(t, -a, cols[2])
        g2 = _col_sub(g1, cols[2])
        s1 = ev.certified_sign(_form(g1))
        s2 = ev.certified_sign(_form(g2))
        if s1 is Sign.AMBIGUOUS or s2 is Sign.AMBIGUOUS:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        if s1 is Sign.NEGATIVE or s2 is not Sign.NEGATIVE:
            raise AssertionError("certified floor contradicts boundary signs")
        symbols.append(a)
        d_hist.append(ev.materialize(g1))
        cols = [cols[1], cols[2], g1]

    if status is None:
        s_last = ev.certified_sign(_form(cols[2]))
        status = SequenceStatus.TERMINATED if s_last is Sign.ZERO else SequenceStatus.TRUNCATED

    return SequenceRecord(
        symbols=tuple(symbols),
        d_history=tuple(d_hist),
        status=status,
        matrix=IntMatrix.from_columns(cols),
        refinements=ev.refinements,
        precision_bits=ev.bits,
    )


@dataclass(frozen=True)
class GaussRecord:
    quotients: tuple[int, ...]
    remainders: tuple[ExactNumber, ...]
    status: SequenceStatus


def gauss_sequence(x: ExactNumber, max_len: int, *, cap_bits: int | None = None) -> GaussRecord:
    """Classical continued fraction of x in (0, 1], for comparison runs.

    The state is a linear-fractional form with integer coefficients, so the
    certified machinery (and on-demand refinement for root-backed input)
    applies exactly as in the 2D engine.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    ev = FormEvaluator([x], cap_bits=cap_bits)
    s = ev.certified_sign((0, 1))
    if s is Sign.NEGATIVE or s is Sign.ZERO:
        raise DegenerateInputError("x must be positive")
    if s is Sign.AMBIGUOUS:
        raise PrecisionExhaustedError("cannot certify x > 0")
    s = ev.certified_sign((1, -1))
    if s is Sign.NEGATIVE:
        raise DegenerateInputError("x must not exceed 1")
    if s is Sign.AMBIGUOUS:
        raise PrecisionExhaustedError("cannot certify x <= 1")

    num = (0, 1)   # coefficients of the current remainder value
    den = (1, 0)   # coefficients of its reciprocal partner
    quotients: list[int] = []
    remainders: list[ExactNumber] = [ev.materialize(num)]
    status = None

    while len(quotients) < max_len:
        s_num = ev.certified_sign(num)
        if s_num is Sign.ZERO:
            status = SequenceStatus.TERMINATED
            break
        if s_num is Sign.AMBIGUOUS:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        try:
            a = ev.certified_floor(den, num)
        except PrecisionExhaustedError:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        quotients.append(a)
        num, den = (den[0] - a * num[0], den[1] - a * num[1]), num
        remainders.append(ev.materialize(num))

    if status is None:
        s_num = ev.certified_sign(num)
        status = SequenceStatus.TERMINATED if s_num is Sign.ZERO else SequenceStatus.TRUNCATED

    return GaussRecord(tuple(quotients), tuple(remainders), status)
