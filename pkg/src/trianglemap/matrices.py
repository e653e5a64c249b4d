"""3x3 integer matrices tracking the 2D subdivision sequence.

The matrix for symbol k is

    [ 0  0   1 ]
    [ 1  0  -1 ]
    [ 0  1  -k ]

with determinant one.  The running product after k steps has columns
(C_{k-2}, C_{k-1}, C_k) satisfying the same three-term recursion as the
remainders: row-vector times matrix sends (1, alpha, beta) to
(d_{k-2}, d_{k-1}, d_k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InconsistentInputError, NotYetConvergedError
from .numeric import BigFloat, ExactNumber

Row = tuple[int, int, int]


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[Row, Row, Row]

    @classmethod
    def identity(cls) -> "IntMatrix":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(cols[j][i] for j in range(3)) for i in range(3)))

    def column(self, j: int) -> tuple[int, int, int]:
        return tuple(self.rows[i][j] for i in range(3))

    def columns(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(self.column(j) for j in range(3))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        a, b = self.rows, other.rows
        return IntMatrix(tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(3)) for j in range(3))
            for i in range(3)
        ))

    def det(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def inverse(self) -> "IntMatrix":
        """Exact integer inverse; requires determinant +-1."""
        d = self.det()
        if d not in (1, -1):
            raise InconsistentInputError(f"matrix determinant {d} is not a unit")
        (a, b, c), (e, f, g), (h, i, j) = self.rows
        adj = (
            (f * j - g * i, c * i - b * j, b * g - c * f),
            (g * h - e * j, a * j - c * h, c * e - a * g),
            (e * i - f * h, b * h - a * i, a * f - b * e),
        )
        return IntMatrix(tuple(tuple(x * d for x in row) for row in adj))

    def apply_row(self, vec: Sequence) -> tuple:
        """Row vector times matrix; entries may be any exact number kind."""
        return tuple(
            sum(vec[i] * self.rows[i][j] for i in range(3))
            for j in range(3)
        )


def step_matrix(k: int) -> IntMatrix:
    if k < 0:
        raise ValueError("symbols are nonnegative")
    return IntMatrix(((0, 0, 1), (1, 0, -1), (0, 1, -k)))


def accumulate(m: IntMatrix, k: int) -> IntMatrix:
    return m @ step_matrix(k)


def product_matrix(symbols: Iterable[int]) -> IntMatrix:
    m = IntMatrix.identity()
    for k in symbols:
        m = accumulate(m, k)
    return m


def column_distances(m: IntMatrix, alpha: ExactNumber, beta: ExactNumber) -> tuple:
    """(1, alpha, beta) dotted with each column: the three current remainders."""
    return m.apply_row((1, alpha, beta))


def _consistent(x, y) -> bool:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    xl, xh = (x.bounds() if isinstance(x, BigFloat) else (x, x))
    yl, yh = (y.bounds() if isinstance(y, BigFloat) else (y, y))
    return xl <= yh and yl <= xh


def fundamental_identity_check(alpha: ExactNumber, beta: ExactNumber,
                               symbols: Sequence[int]) -> bool:
    """Verify the remainder recursion against the matrix route, step by step.

    Runs the raw three-term recursion d_k = d_{k-3} - d_{k-2} - a_k d_{k-1}
    alongside the column products, requiring the two routes to agree (exactly
    for rationals, as overlapping enclosures otherwise) and every partial
    product to have determinant one.
    """
    d = [Fraction(1), alpha, beta]
    m = IntMatrix.identity()
    for k in symbols:
        new = d[-3] - d[-2] - d[-1] * k
        d.append(new)
        m = accumulate(m, k)
        if m.det() != 1:
            return False
        route = column_distances(m, alpha, beta)
        for got, want in zip(route, d[-3:]):
            if not _consistent(got, want):
                return False
    return True


def recover_pair(m: IntMatrix) -> tuple[Fraction, Fraction]:
    """Estimate the starting pair from the last two columns.

    The cross product of columns C_{k-1} and C_k is orthogonal to both
    remainder constraints; normalising its first entry gives the estimate.
    A zero first entry means the columns do not yet pin down a direction.
    """
    u = m.column(1)
    v = m.column(2)
    w = (u[1] * v[2] - u[2] * v[1],
         u[2] * v[0] - u[0] * v[2],
         u[0] * v[1] - u[1] * v[0])
    if w[0] == 0:
        raise NotYetConvergedError("cross product has zero leading entry")
    return Fraction(w[1], w[0]), Fraction(w[2], w[0])


def recover_terminated(m: IntMatrix, d_km2: Fraction, d_km1: Fraction) -> tuple[Fraction, Fraction]:
    """Exact recovery for a terminated run from its final matrix and remainders.

    With d_k = 0 the remainder row is (d_{k-2}, d_{k-1}, 0); multiplying by
    the integer inverse of the accumulated matrix returns (1, alpha, beta).
    """
    row = m.inverse().apply_row((Fraction(d_km2), Fraction(d_km1), Fraction(0)))
    if row[0] != 1:
        raise InconsistentInputError("remainders are inconsistent with the matrix")
    return row[1], row[2]
