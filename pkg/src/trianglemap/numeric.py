"""Exact numeric substrate: rationals, certified dyadic intervals, algebraic roots.

Two value kinds flow through the package:

* ``fractions.Fraction`` for anything exactly rational;
* ``BigFloat``, a closed dyadic interval ``[lo, hi]`` whose endpoints are
  integer multiples of ``2**-prec``, certified to contain the real number it
  stands for.  Operations are pure and round outward, so enclosures never lie.

A ``BigFloat`` built from a root specification (``refine_root`` or
``root_powers``) additionally keeps a handle to the isolating-interval
bisection that produced it.  Certified queries made through ``FormEvaluator``
may then tighten the enclosure on demand: the underlying value never changes,
only the interval around it shrinks.  Plain bigfloats (decimal input, results
of interval arithmetic) carry no such handle; once their resolution is spent a
sign or floor query honestly reports ambiguity instead of guessing.

Sign queries on values backed by powers of a single root get an exact zero
test: a linear form ``c0 + c1*x + c2*x**2 + ...`` vanishes at the root exactly
when the gcd of the form with the squarefree part of the defining polynomial
changes sign across the isolating interval.  That keeps refinement loops from
spinning forever on true zeros and makes termination decidable for algebraic
input points.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import polynomials
from .errors import DegenerateInputError, PrecisionExhaustedError
from .polynomials import IntPolynomial

#: Smallest working precision accepted from user-facing entry points.
MIN_PRECISION = 64

#: Default hard ceiling multiplier for on-demand refinement.
REFINE_CAP_FACTOR = 32


class Sign(str, enum.Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"
    AMBIGUOUS = "ambiguous"


class SequenceStatus(str, enum.Enum):
    TERMINATED = "terminated"
    TRUNCATED = "truncated-at-max-length"
    PRECISION_EXHAUSTED = "precision-exhausted"


def _floor_div(num: int, den: int) -> int:
    # Python's // already floors for negative numerators.
    return num // den


def _round_out(lo: Fraction, hi: Fraction, prec: int) -> tuple[int, int]:
    """Outward-round a rational interval to the 2**-prec grid."""
    scale = 1 << prec
    lo_num = (lo.numerator * scale) // lo.denominator
    hi_num = -((-hi.numerator * scale) // hi.denominator)
    return lo_num, hi_num


@dataclass(frozen=True)
class BigFloat:
    """Dyadic interval [lo_num, hi_num] / 2**prec enclosing one real number."""

    lo_num: int
    hi_num: int
    prec: int
    source: "_RootPower | None" = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.prec < 1:
            raise ValueError("precision must be positive")
        if self.lo_num > self.hi_num:
            raise ValueError("empty interval")

    # construction -------------------------------------------------------

    @classmethod
    def from_fraction(cls, value, prec: int) -> "BigFloat":
        if prec < MIN_PRECISION:
            raise ValueError(f"precision below the {MIN_PRECISION}-bit floor")
        v = Fraction(value)
        lo, hi = _round_out(v, v, prec)
        return cls(lo, hi, prec)

    @classmethod
    def from_decimal(cls, text: str, prec: int) -> "BigFloat":
        return cls.from_fraction(Fraction(text), prec)

    @classmethod
    def from_bounds(cls, lo: Fraction, hi: Fraction, prec: int) -> "BigFloat":
        if lo > hi:
            raise ValueError("lower bound above upper bound")
        lo_num, hi_num = _round_out(Fraction(lo), Fraction(hi), prec)
        return cls(lo_num, hi_num, prec)

    # inspection ---------------------------------------------------------

    def bounds(self) -> tuple[Fraction, Fraction]:
        scale = 1 << self.prec
        return Fraction(self.lo_num, scale), Fraction(self.hi_num, scale)

    @property
    def low(self) -> Fraction:
        return Fraction(self.lo_num, 1 << self.prec)

    @property
    def high(self) -> Fraction:
        return Fraction(self.hi_num, 1 << self.prec)

    def midpoint(self) -> Fraction:
        return Fraction(self.lo_num + self.hi_num, 2 << self.prec)

    def width(self) -> Fraction:
        return Fraction(self.hi_num - self.lo_num, 1 << self.prec)

    def sign(self) -> Sign:
        if self.lo_num > 0:
            return Sign.POSITIVE
        if self.hi_num < 0:
            return Sign.NEGATIVE
        if self.lo_num == 0 and self.hi_num == 0:
            return Sign.ZERO
        return Sign.AMBIGUOUS

    def floor_certain(self) -> int | None:
        """The integer floor when both endpoints agree on it, else None."""
        fl = self.lo_num >> self.prec
        fh = self.hi_num >> self.prec
        return fl if fl == fh else None

    @property
    def refinable(self) -> bool:
        return self.source is not None

    def refined(self, bits: int) -> "BigFloat | None":
        """A tighter enclosure of the same value, or None without a source."""
        if self.source is None:
            return None
        if bits <= self.prec:
            return self
        return self.source.as_bigfloat(bits)

    def __float__(self) -> float:
        return self.lo_num / (1 << self.prec) if self.lo_num == self.hi_num else float(self.midpoint())

    # arithmetic: pure, outward rounding, result source dropped ----------

    def _coerce(self, other) -> "BigFloat | None":
        if isinstance(other, BigFloat):
            return other
        if isinstance(other, (int, Fraction)):
            v = Fraction(other)
            lo, hi = _round_out(v, v, self.prec)
            return BigFloat(lo, hi, self.prec)
        return None

    def __neg__(self) -> "BigFloat":
        return BigFloat(-self.hi_num, -self.lo_num, self.prec)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.prec, o.prec)
        a, b = self.lo_num << (prec - self.prec), self.hi_num << (prec - self.prec)
        c, d = o.lo_num << (prec - o.prec), o.hi_num << (prec - o.prec)
        return BigFloat(a + c, b + d, prec)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            # exact: scaling by an integer keeps the grid
            lo, hi = self.lo_num * other, self.hi_num * other
            if other < 0:
                lo, hi = hi, lo
            return BigFloat(lo, hi, self.prec)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.prec, o.prec)
        prods = (self.lo_num * o.lo_num, self.lo_num * o.hi_num,
                 self.hi_num * o.lo_num, self.hi_num * o.hi_num)
        shift = self.prec + o.prec - prec
        lo = min(prods) >> shift
        hi = -((-max(prods)) >> shift)
        return BigFloat(lo, hi, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.lo_num <= 0 <= o.hi_num:
            if o.lo_num == 0 and o.hi_num == 0:
                raise ZeroDivisionError("division by exact zero")
            raise PrecisionExhaustedError("divisor interval straddles zero")
        prec = max(self.prec, o.prec)
        nlo, nhi = self.bounds()
        dlo, dhi = o.bounds()
        quots = (nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi)
        lo, hi = _round_out(min(quots), max(quots), prec)
        return BigFloat(lo, hi, prec)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0:
            return BigFloat(1 << self.prec, 1 << self.prec, self.prec)
        if n == 1:
            return self
        cands = (self.lo_num ** n, self.hi_num ** n)
        lo, hi = min(cands), max(cands)
        if n % 2 == 0 and self.lo_num < 0 < self.hi_num:
            lo = 0
        shift = self.prec * (n - 1)
        return BigFloat(lo >> shift, -((-hi) >> shift), self.prec)


ExactNumber = Union[Fraction, BigFloat]


def sign_of(x) -> Sign:
    """Sign of a value at its current enclosure; never refines."""
    if isinstance(x, BigFloat):
        return x.sign()
    v = Fraction(x)
    if v > 0:
        return Sign.POSITIVE
    if v < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


# root enclosures ---------------------------------------------------------


@dataclass(frozen=True)
class RootSpec:
    """A real algebraic number: polynomial plus open isolating interval.

    The interval endpoints must not be roots and the polynomial must change
    sign across them; the caller asserts the root inside is unique.
    """

    poly: IntPolynomial
    low: Fraction
    high: Fraction

    def __post_init__(self):
        object.__setattr__(self, "low", Fraction(self.low))
        object.__setattr__(self, "high", Fraction(self.high))
        if self.low >= self.high:
            raise DegenerateInputError("isolating interval is empty")
        flo = self.poly.evaluate(self.low)
        fhi = self.poly.evaluate(self.high)
        if flo == 0 or fhi == 0:
            raise DegenerateInputError("isolating interval endpoint is a root")
        if (flo < 0) == (fhi < 0):
            raise DegenerateInputError("polynomial does not change sign across the interval")


class _RootEnclosure:
    """Mutable bisection state shared by every power of one root.

    Tightening is caching, not mutation of the value: the root is fixed, the
    interval around it only ever shrinks.  Not thread-safe.
    """

    __slots__ = ("poly", "lo", "hi", "_neg_low", "_squarefree")

    def __init__(self, spec: RootSpec):
        self.poly = spec.poly
        self.lo = spec.low
        self.hi = spec.high
        self._neg_low = spec.poly.evaluate(spec.low) < 0
        self._squarefree: IntPolynomial | None = None

    @property
    def squarefree(self) -> IntPolynomial:
        if self._squarefree is None:
            self._squarefree = polynomials.squarefree_part(self.poly)
        return self._squarefree

    def refine_below(self, width: Fraction) -> None:
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            v = self.poly.evaluate(mid)
            if v == 0:
                # landed exactly on the root: enclosure collapses to a rational
                self.lo = self.hi = mid
                return
            if (v < 0) == self._neg_low:
                self.lo = mid
            else:
                self.hi = mid


class _RootPower:
    """Refinable source: the power ``root**power`` of a shared enclosure."""

    __slots__ = ("enclosure", "power")

    def __init__(self, enclosure: _RootEnclosure, power: int):
        if power < 1:
            raise ValueError("power must be at least 1")
        self.enclosure = enclosure
        self.power = power

    def _powered(self) -> tuple[Fraction, Fraction]:
        lo, hi = self.enclosure.lo, self.enclosure.hi
        a, b = lo ** self.power, hi ** self.power
        m, big = min(a, b), max(a, b)
        if self.power % 2 == 0 and lo < 0 < hi:
            m = Fraction(0)
        return m, big

    def bounds_at(self, bits: int) -> tuple[Fraction, Fraction]:
        target = Fraction(1, 1 << (bits + 2))
        width = target
        while True:
            self.enclosure.refine_below(width)
            m, big = self._powered()
            if big - m <= target or self.enclosure.lo == self.enclosure.hi:
                return m, big
            width /= 2

    def as_bigfloat(self, bits: int) -> BigFloat:
        m, big = self.bounds_at(bits)
        prec = bits + 2
        lo_num, hi_num = _round_out(m, big, prec)
        return BigFloat(lo_num, hi_num, prec, source=self)


def refine_root(spec: RootSpec, precision: int) -> BigFloat:
    """Enclose the root of ``spec`` to width at most 2**-precision.

    The result keeps a handle to the bisection, so certified queries may
    tighten it further on demand.  The precision tag can exceed the request
    by a small guard; it is never below it.
    """
    if precision < MIN_PRECISION:
        raise ValueError(f"precision below the {MIN_PRECISION}-bit floor")
    return _RootPower(_RootEnclosure(spec), 1).as_bigfloat(precision)


def root_powers(spec: RootSpec, count: int, precision: int) -> tuple[BigFloat, ...]:
    """(root, root**2, ..., root**count) sharing one bisection cache."""
    if precision < MIN_PRECISION:
        raise ValueError(f"precision below the {MIN_PRECISION}-bit floor")
    if count < 1:
        raise ValueError("count must be at least 1")
    enc = _RootEnclosure(spec)
    return tuple(_RootPower(enc, j).as_bigfloat(precision) for j in range(1, count + 1))


# certified linear-form evaluation ----------------------------------------


class FormEvaluator:
    """Certified sign and floor queries for integer linear forms.

    Holds the coordinates of one point; a form ``(c0, c1, ..., cn)`` denotes
    ``c0 + c1*v1 + ... + cn*vn``.  Evaluation is exact rational interval
    arithmetic over the current enclosures.  When a query cannot be decided,
    root-backed coordinates are refined (doubling the working bits up to a
    cap) and the query retried; a true zero is recognised exactly when all
    irrational coordinates are powers of one shared root.
    """

    def __init__(self, values: Sequence, *, cap_bits: int | None = None):
        self.values: list = [Fraction(v) if isinstance(v, int) else v for v in values]
        precs = [v.prec for v in self.values if isinstance(v, BigFloat)]
        self.bits = max(precs) if precs else MIN_PRECISION
        refinable = any(isinstance(v, BigFloat) and v.refinable for v in self.values)
        if cap_bits is not None:
            self.cap = cap_bits
        elif refinable:
            self.cap = max(4096, REFINE_CAP_FACTOR * self.bits)
        else:
            self.cap = self.bits
        self.refinements = 0

    def _bounds(self, v) -> tuple[Fraction, Fraction]:
        if isinstance(v, BigFloat):
            return v.bounds()
        return v, v

    def eval_bounds(self, coeffs: Sequence[int]) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(coeffs[0])
        for c, v in zip(coeffs[1:], self.values):
            if c == 0:
                continue
            vl, vh = self._bounds(v)
            if c > 0:
                lo += c * vl
                hi += c * vh
            else:
                lo += c * vh
                hi += c * vl
        return lo, hi

    def materialize(self, coeffs: Sequence[int]) -> ExactNumber:
        lo, hi = self.eval_bounds(coeffs)
        if lo == hi:
            return lo
        return BigFloat.from_bounds(lo, hi, self.bits)

    def refine(self) -> bool:
        if self.bits >= self.cap:
            return False
        new_bits = min(self.cap, self.bits * 2)
        improved = False
        for i, v in enumerate(self.values):
            if isinstance(v, BigFloat) and v.refinable:
                self.values[i] = v.refined(new_bits)
                improved = True
        if not improved:
            return False
        self.bits = new_bits
        self.refinements += 1
        return True

    def exact_zero(self, coeffs: Sequence[int]) -> bool | None:
        """Exact zero test; None when the coordinate structure cannot support one."""
        const = Fraction(coeffs[0])
        monomials: dict[int, Fraction] = {}
        enclosure: _RootEnclosure | None = None
        for c, v in zip(coeffs[1:], self.values):
            if c == 0:
                continue
            if isinstance(v, Fraction):
                const += c * v
                continue
            src = v.source
            if src is None:
                return None
            if enclosure is None:
                enclosure = src.enclosure
            elif src.enclosure is not enclosure:
                return None
            monomials[src.power] = monomials.get(src.power, Fraction(0)) + c
        if enclosure is None:
            return const == 0
        if enclosure.lo == enclosure.hi:
            root = enclosure.lo
            return const + sum(a * root ** p for p, a in monomials.items()) == 0
        top = max(monomials) if monomials else 0
        frac_coeffs = [Fraction(0)] * (top + 1)
        frac_coeffs[0] = const
        for p, a in monomials.items():
            frac_coeffs[p] += a
        denlcm = math.lcm(*(f.denominator for f in frac_coeffs))
        g = IntPolynomial(tuple(int(f * denlcm) for f in frac_coeffs))
        if g.is_zero:
            return True
        h = polynomials.gcd(enclosure.squarefree, g)
        if h.degree == 0:
            return False
        return (h.evaluate(enclosure.lo) < 0) != (h.evaluate(enclosure.hi) < 0)

    def certified_sign(self, coeffs: Sequence[int]) -> Sign:
        """Sign of the form, refining as needed; AMBIGUOUS only when exhausted."""
        zero_checked = False
        while True:
            lo, hi = self.eval_bounds(coeffs)
            if lo > 0:
                return Sign.POSITIVE
            if hi < 0:
                return Sign.NEGATIVE
            if lo == hi:
                return Sign.ZERO
            if not zero_checked:
                zero_checked = True
                if self.exact_zero(coeffs) is True:
                    return Sign.ZERO
            if not self.refine():
                return Sign.AMBIGUOUS

    def certified_floor(self, num: Sequence[int], den: Sequence[int]) -> int:
        """floor(num/den) with den certified positive; raises when undecidable."""
        if self.certified_sign(den) is not Sign.POSITIVE:
            raise PrecisionExhaustedError("denominator form is not certainly positive")
        tested: set[int] = set()
        while True:
            nlo, nhi = self.eval_bounds(num)
            dlo, dhi = self.eval_bounds(den)
            lo_r = nlo / dhi if nlo >= 0 else nlo / dlo
            hi_r = nhi / dlo if nhi >= 0 else nhi / dhi
            fl = lo_r.numerator // lo_r.denominator
            fh = hi_r.numerator // hi_r.denominator
            if fl == fh:
                return fl
            # a ratio exactly equal to an integer m keeps the enclosure
            # straddling m forever; recognise that case exactly
            if fh == fl + 1 and fh not in tested:
                tested.add(fh)
                boundary = tuple(a - fh * b for a, b in zip(num, den))
                if self.exact_zero(boundary) is True:
                    return fh
            if not self.refine():
                raise PrecisionExhaustedError("floor undecidable at the precision cap")
