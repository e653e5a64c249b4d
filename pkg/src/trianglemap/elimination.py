"""Multivariate integer polynomials and resultant-based variable elimination.

Small and purpose-built: dense enough machinery to form the fixed-direction
equations of a matrix portion and collapse them to one univariate polynomial
by iterated Sylvester resultants.  Everything is exact over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InconsistentInputError
from .polynomials import IntPolynomial

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class MPoly:
    """Integer polynomial in a fixed number of variables."""

    nvars: int
    terms: tuple[tuple[Exponents, int], ...]

    def __post_init__(self):
        cleaned = {}
        for exps, c in self.terms:
            if len(exps) != self.nvars:
                raise ValueError("exponent tuple has wrong length")
            if c:
                cleaned[exps] = cleaned.get(exps, 0) + c
        object.__setattr__(
            self, "terms",
            tuple(sorted((e, c) for e, c in cleaned.items() if c != 0)),
        )

    # constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars, ())

    @classmethod
    def const(cls, nvars: int, c: int) -> "MPoly":
        return cls(nvars, (((0,) * nvars, c),))

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, ((exps, 1),))

    # basic ring operations ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "MPoly") -> "MPoly":
        return MPoly(self.nvars, self.terms + other.terms)

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "MPoly":
        return MPoly(self.nvars, tuple((e, c * a) for e, a in self.terms))

    def __mul__(self, other: "MPoly") -> "MPoly":
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MPoly(self.nvars, tuple(out.items()))

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power")
        acc = MPoly.const(self.nvars, 1)
        for _ in range(n):
            acc = acc * self
        return acc

    # structure ------------------------------------------------------------

    def degree_in(self, var: int) -> int:
        return max((e[var] for e, _ in self.terms), default=0)

    def coeffs_in(self, var: int) -> list["MPoly"]:
        """Coefficients as polynomials in the other variables, low power first."""
        d = self.degree_in(var)
        buckets: list[dict[Exponents, int]] = [dict() for _ in range(d + 1)]
        for e, c in self.terms:
            reduced = tuple(0 if i == var else x for i, x in enumerate(e))
            buckets[e[var]][reduced] = buckets[e[var]].get(reduced, 0) + c
        return [MPoly(self.nvars, tuple(b.items())) for b in buckets]

    def to_univariate(self, var: int) -> IntPolynomial:
        coeffs = [0] * (self.degree_in(var) + 1)
        for e, c in self.terms:
            if any(x != 0 for i, x in enumerate(e) if i != var):
                raise ValueError("polynomial involves more than one variable")
            coeffs[e[var]] += c
        return IntPolynomial(tuple(coeffs))

    def evaluate(self, values: Sequence) -> Fraction:
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for e, c in self.terms:
            term = Fraction(c)
            for v, p in zip(values, e):
                term *= Fraction(v) ** p
            total += term
        return total

    def substitute_powers(self, weights: Sequence[int]) -> IntPolynomial:
        """Substitute variable i by x**weights[i], collapsing to one variable."""
        if len(weights) != self.nvars:
            raise ValueError("wrong number of weights")
        out: dict[int, int] = {}
        for e, c in self.terms:
            power = sum(w * p for w, p in zip(weights, e))
            out[power] = out.get(power, 0) + c
        if not out:
            return IntPolynomial((0,))
        coeffs = [0] * (max(out) + 1)
        for p, c in out.items():
            coeffs[p] = c
        return IntPolynomial(tuple(coeffs))


def _det(mat: list[list[MPoly]]) -> MPoly:
    """Determinant by Laplace expansion memoized on column subsets."""
    n = len(mat)
    if n == 0:
        return MPoly.const(1, 1)
    nvars = mat[0][0].nvars
    memo: dict[int, MPoly] = {}

    def minor(mask: int) -> MPoly:
        if mask == 0:
            return MPoly.const(nvars, 1)
        if mask in memo:
            return memo[mask]
        row = n - bin(mask).count("1")
        acc = MPoly.zero(nvars)
        sign = 1
        for j in range(n):
            if not (mask >> j) & 1:
                continue
            entry = mat[row][j]
            if not entry.is_zero:
                sub = minor(mask & ~(1 << j))
                acc = acc + (entry * sub).scale(sign)
            sign = -sign
        memo[mask] = acc
        return acc

    return minor((1 << n) - 1)


def resultant(f: MPoly, g: MPoly, var: int) -> MPoly:
    """Sylvester resultant eliminating one variable."""
    if f.is_zero or g.is_zero:
        return MPoly.zero(f.nvars)
    df, dg = f.degree_in(var), g.degree_in(var)
    if df == 0 and dg == 0:
        return MPoly.const(f.nvars, 1)
    if df == 0:
        return f ** dg
    if dg == 0:
        return g ** df
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    size = df + dg
    zero = MPoly.zero(f.nvars)
    mat: list[list[MPoly]] = []
    for i in range(dg):
        row = [zero] * size
        for t, c in enumerate(reversed(fc)):
            row[i + t] = c
        mat.append(row)
    for i in range(df):
        row = [zero] * size
        for t, c in enumerate(reversed(gc)):
            row[i + t] = c
        mat.append(row)
    return _det(mat)


def fixed_direction_polynomials(q: Sequence[Sequence[int]], n: int) -> list[MPoly]:
    """The n quadratic equations a periodic point must satisfy for portion q.

    With L_j the linear form given by column j of q acting on (1, a_1..a_n),
    equation i states L_1 * a_i - L_{i+1} = 0.
    """
    size = n + 1
    if len(q) != size or any(len(row) != size for row in q):
        raise ValueError("portion matrix has the wrong shape")

    def column_form(j: int) -> MPoly:
        acc = MPoly.const(n, q[0][j])
        for t in range(1, size):
            acc = acc + MPoly.variable(n, t - 1).scale(q[t][j])
        return acc

    l1 = column_form(0)
    eqs = []
    for i in range(1, size):
        eqs.append(l1 * MPoly.variable(n, i - 1) - column_form(i))
    return eqs


def eliminant_from_portion(q: Sequence[Sequence[int]], n: int) -> IntPolynomial:
    """Collapse the fixed-direction system to one polynomial in the first coordinate.

    Eliminates the last variable from consecutive pairs by resultants until a
    single univariate polynomial remains, returned primitive with positive
    leading coefficient.  A system degenerate enough to kill every resultant
    raises InconsistentInputError.
    """
    polys = fixed_direction_polynomials(q, n)
    for var in range(n - 1, 0, -1):
        last = polys[-1]
        polys = [resultant(p, last, var) for p in polys[:-1]]
        polys = [p for p in polys if not p.is_zero]
        if not polys:
            raise InconsistentInputError("eliminant vanished identically")
    result = polys[0]
    for extra in polys[1:]:
        # more than one survivor: fold in via gcd-free product is wasteful;
        # keep the first nonconstant one, they share the solution coordinate
        if result.degree_in(0) == 0 and extra.degree_in(0) > 0:
            result = extra
    uni = result.to_univariate(0)
    if uni.is_zero:
        raise InconsistentInputError("eliminant vanished identically")
    if uni.degree == 0:
        raise InconsistentInputError("eliminant is a nonzero constant: no solution")
    return uni.primitive()
