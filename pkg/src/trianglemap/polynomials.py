"""Integer polynomials in one variable.

Coefficients are stored constant term first, so ``IntPolynomial((-1, 1, 1, 1))``
is x^3 + x^2 + x - 1.  The text form used by the command line mirrors the
storage order: ``"-1,1,1,1"``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _strip(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


@dataclass(frozen=True)
class IntPolynomial:
    """Immutable integer polynomial, constant coefficient first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            object.__setattr__(self, "coeffs", (0,))
        else:
            if not all(isinstance(c, int) for c in self.coeffs):
                raise TypeError("coefficients must be ints")
            object.__setattr__(self, "coeffs", _strip(tuple(self.coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def evaluate(self, x):
        """Horner evaluation; works for any value kind with * and +."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        if self.degree == 0:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    def content(self) -> int:
        return math.gcd(*self.coeffs) if len(self.coeffs) > 1 else abs(self.coeffs[0])

    def primitive(self) -> "IntPolynomial":
        """Divide out the content; leading coefficient made positive."""
        c = self.content()
        if c == 0:
            return IntPolynomial((0,))
        if self.leading < 0:
            c = -c
        return IntPolynomial(tuple(a // c for a in self.coeffs))

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        try:
            return cls(tuple(int(part.strip()) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad polynomial text {text!r}") from exc

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs!r})"


def divmod_exact(num: IntPolynomial, den: IntPolynomial) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Polynomial division over the rationals: returns (quotient, remainder) coefficient tuples."""
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in num.coeffs]
    d = [Fraction(c) for c in den.coeffs]
    dd = len(d) - 1
    if len(rem) - 1 < dd:
        return (Fraction(0),), tuple(rem)
    quo = [Fraction(0)] * (len(rem) - dd)
    lead = d[-1]
    for i in range(len(rem) - 1, dd - 1, -1):
        q = rem[i] / lead
        quo[i - dd] = q
        if q:
            for j in range(dd + 1):
                rem[i - dd + j] -= q * d[j]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


def divides(den: IntPolynomial, num: IntPolynomial) -> bool:
    """True when den divides num exactly over the rationals."""
    _, rem = divmod_exact(num, den)
    return all(c == 0 for c in rem)


def exact_quotient(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    quo, rem = divmod_exact(num, den)
    if any(c != 0 for c in rem):
        raise ValueError("division is not exact")
    scale = math.lcm(*(c.denominator for c in quo))
    return IntPolynomial(tuple(int(c * scale) for c in quo)).primitive()


def gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Polynomial gcd over the rationals, returned primitive with positive lead."""
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    x = [Fraction(c) for c in a.coeffs]
    y = [Fraction(c) for c in b.coeffs]

    def trim(v):
        while len(v) > 1 and v[-1] == 0:
            v.pop()
        return v

    x, y = trim(x), trim(y)
    while not (len(y) == 1 and y[0] == 0):
        # remainder of x by y
        dd = len(y) - 1
        lead = y[-1]
        r = x[:]
        for i in range(len(r) - 1, dd - 1, -1):
            q = r[i] / lead
            if q:
                for j in range(dd + 1):
                    r[i - dd + j] -= q * y[j]
        x, y = y, trim(r)
    scale = math.lcm(*(c.denominator for c in x))
    return IntPolynomial(tuple(int(c * scale) for c in x)).primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p with repeated factors reduced to multiplicity one (same root set)."""
    if p.degree <= 1:
        return p.primitive()
    g = gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return exact_quotient(p, g)
