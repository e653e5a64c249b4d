"""The subdivision map on the ordered simplex in any dimension.

Points live in ``1 >= x_1 >= x_2 >= ... >= x_n > 0``.  With
``q_i = 1 - x_1 - ... - x_i`` (so ``q_{n-1}`` is the slack after all but the
last coordinate), the simplex splits into

* nonnegative-slack regions indexed by k >= 0 where
  ``q_{n-1} - k*x_n >= 0 > q_{n-1} - (k+1)*x_n``, and
* pair regions indexed by (i, j) where ``q_{n-1} <= 0``, index i is the unique
  crossing ``q_i > 0 >= q_{i+1}``, and j is the unique window
  ``x_j >= q_i > x_{j+1}`` (with ``x_{n+1} = 0``).

At n = 2 the slack ``q_1 = 1 - x_1`` is never negative, so only the
nonnegative family fires and the scheme reduces to the 2D wedges; at n = 1 it
reduces to the classical continued-fraction step.  The engine keeps n+1 exact
integer columns whose dot products with (1, x_1, ..., x_n) are the remainder
values; every branch is a certified sign or floor query on those forms, with
on-demand refinement for root-backed inputs, exactly as in the 2D module (the
two engines are deliberately independent implementations).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DegenerateInputError,
    InconsistentInputError,
    NotYetConvergedError,
    PrecisionExhaustedError,
)
from .numeric import (
    BigFloat,
    ExactNumber,
    FormEvaluator,
    RootSpec,
    SequenceStatus,
    Sign,
    root_powers,
)

Column = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


# symbols ------------------------------------------------------------------


@dataclass(frozen=True)
class NonNegSymbol:
    k: int

    def __str__(self) -> str:
        return str(self.k)


@dataclass(frozen=True)
class PairSymbol:
    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


SymbolND = NonNegSymbol | PairSymbol


# points ---------------------------------------------------------------------


@dataclass(frozen=True)
class PointN:
    coords: tuple[ExactNumber, ...]

    def __post_init__(self):
        if not self.coords:
            raise DegenerateInputError("point needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @classmethod
    def from_rationals(cls, values: Iterable) -> "PointN":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def from_root(cls, spec: RootSpec, n: int, precision: int) -> "PointN":
        """(r, r**2, ..., r**n) for the described root, sharing one cache."""
        return cls(root_powers(spec, n, precision))


# integer matrix helpers (kept local: the 2D module is a separate route) -----


def mat_identity(size: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(size)) for j in range(size))
        for i in range(size)
    )


def mat_from_columns(cols: Sequence[Column]) -> Matrix:
    size = len(cols[0])
    return tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(size))


def mat_det(m: Matrix) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    a = [list(row) for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_minor_det(m: Matrix, drop_row: int, drop_col: int) -> int:
    sub = tuple(
        tuple(x for j, x in enumerate(row) if j != drop_col)
        for i, row in enumerate(m)
        if i != drop_row
    )
    if not sub:
        return 1
    return mat_det(sub)


def mat_inverse_unimodular(m: Matrix) -> Matrix:
    d = mat_det(m)
    if d not in (1, -1):
        raise InconsistentInputError(f"matrix determinant {d} is not a unit")
    size = len(m)
    return tuple(
        tuple(d * (-1) ** (i + j) * mat_minor_det(m, j, i) for j in range(size))
        for i in range(size)
    )


def mat_apply_row(vec: Sequence, m: Matrix) -> tuple:
    size = len(m)
    return tuple(sum(vec[i] * m[i][j] for i in range(size)) for j in range(size))


def step_matrix_nd(symbol: SymbolND, n: int) -> Matrix:
    """The (n+1)x(n+1) integer matrix whose row action performs one d-update."""
    size = n + 1
    cols: list[list[int]] = []
    if isinstance(symbol, NonNegSymbol):
        if symbol.k < 0:
            raise ValueError("nonnegative symbol index must be >= 0")
        for c in range(n):
            col = [0] * size
            col[c + 1] = 1
            cols.append(col)
        last = [0] * size
        last[0] = 1
        for u in range(1, n):
            last[u] = -1
        last[n] = -symbol.k
        cols.append(last)
    else:
        i, j = symbol.i, symbol.j
        if not (1 <= i < j <= n):
            raise ValueError(f"bad pair symbol ({i},{j})")
        for c in range(j):
            col = [0] * size
            col[c + 1] = 1
            cols.append(col)
        mid = [0] * size
        mid[0] = 1
        for u in range(1, i + 1):
            mid[u] = -1
        cols.append(mid)
        for c in range(j + 1, size):
            col = [0] * size
            col[c] = 1
            cols.append(col)
    return mat_from_columns(cols)


def product_matrix_nd(symbols: Iterable[SymbolND], n: int) -> Matrix:
    m = mat_identity(n + 1)
    for s in symbols:
        m = mat_mul(m, step_matrix_nd(s, n))
    return m


# classification and sequences ----------------------------------------------


def _col_zero(size: int) -> Column:
    return (0,) * size


def _col_sub(a: Column, b: Column) -> Column:
    return tuple(x - y for x, y in zip(a, b))


def _col_addmul(a: Column, c: int, b: Column) -> Column:
    return tuple(x + c * y for x, y in zip(a, b))


def _require_domain_nd(ev: FormEvaluator, n: int) -> None:
    size = n + 1
    unit = lambda t: tuple(1 if u == t else 0 for u in range(size))
    checks: list[tuple[Column, str, bool]] = []
    top = [1] + [0] * n
    top[1] = -1
    checks.append((tuple(top), "first coordinate exceeds 1", False))
    for t in range(1, n):
        form = [0] * size
        form[t] = 1
        form[t + 1] = -1
        checks.append((tuple(form), f"coordinate {t + 1} exceeds coordinate {t}", False))
    checks.append((unit(n), "last coordinate must be positive", True))
    for form, msg, strict in checks:
        s = ev.certified_sign(form)
        if s is Sign.NEGATIVE or (strict and s is Sign.ZERO):
            raise DegenerateInputError(msg)
        if s is Sign.AMBIGUOUS:
            raise PrecisionExhaustedError(f"cannot certify domain: {msg}")


class _Engine:
    """Shared branch logic over a set of integer columns."""

    def __init__(self, ev: FormEvaluator, n: int):
        self.ev = ev
        self.n = n
        size = n + 1
        self.cols: list[Column] = [
            tuple(1 if i == j else 0 for i in range(size)) for j in range(size)
        ]

    def slack_col(self, i: int) -> Column:
        """Column form of q_i scaled by the leading remainder (i coords subtracted)."""
        col = self.cols[0]
        for t in range(1, i + 1):
            col = _col_sub(col, self.cols[t])
        return col

    def coord_col(self, t: int) -> Column:
        # x_{n+1} is identically zero
        if t == self.n + 1:
            return _col_zero(self.n + 1)
        return self.cols[t]

    def classify_once(self) -> tuple[SymbolND, Column]:
        """One certified branch decision: the symbol and the inserted column."""
        ev, n = self.ev, self.n
        s0_col = self.slack_col(n - 1)
        s0 = ev.certified_sign(s0_col)
        if s0 is Sign.AMBIGUOUS:
            raise PrecisionExhaustedError("slack sign is ambiguous")
        if s0 in (Sign.POSITIVE, Sign.ZERO):
            a = ev.certified_floor(s0_col, self.cols[n])
            g1 = _col_addmul(s0_col, -a, self.cols[n])
            g2 = _col_sub(g1, self.cols[n])
            s1 = ev.certified_sign(g1)
            s2 = ev.certified_sign(g2)
            if s1 is Sign.AMBIGUOUS or s2 is Sign.AMBIGUOUS:
                raise PrecisionExhaustedError("region boundary test is ambiguous")
            if s1 is Sign.NEGATIVE or s2 is not Sign.NEGATIVE:
                raise AssertionError("certified floor contradicts boundary signs")
            return NonNegSymbol(a), g1
        # slack negative: find the crossing index i, then the window index j.
        # The q_t values decrease strictly and q_1 = 1 - x_1 >= 0 on the
        # domain, so with q_{n-1} certified negative the first index whose
        # successor is <= 0 always exists and lands at some i <= n-2.  A zero
        # q_i can only appear at i = 1 (on the facet x_1 = 1) and is a valid
        # crossing there; its window lands at j = n and the inserted column
        # is identically zero, so the sequence terminates on the next step.
        i = None
        q_col = None
        prev_col = self.slack_col(1)
        prev_sign = ev.certified_sign(prev_col)
        if prev_sign is Sign.AMBIGUOUS:
            raise PrecisionExhaustedError("slack sign is ambiguous")
        for cand in range(1, n - 1):
            if cand + 1 == n - 1:
                nxt_col, nxt_sign = s0_col, s0
            else:
                nxt_col = self.slack_col(cand + 1)
                nxt_sign = ev.certified_sign(nxt_col)
                if nxt_sign is Sign.AMBIGUOUS:
                    raise PrecisionExhaustedError("slack sign is ambiguous")
            if prev_sign in (Sign.POSITIVE, Sign.ZERO) and nxt_sign in (Sign.NEGATIVE, Sign.ZERO):
                i = cand
                q_col = prev_col
                break
            prev_col, prev_sign = nxt_col, nxt_sign
        if i is None or q_col is None:
            raise AssertionError("slack chain crossing not found below a negative tail")
        j = None
        for cand in range(i + 1, n + 1):
            below = _col_sub(q_col, self.coord_col(cand + 1))
            s_below = ev.certified_sign(below)
            if s_below is Sign.AMBIGUOUS:
                raise PrecisionExhaustedError("pair window test is ambiguous")
            # strict against real coordinates, closed against x_{n+1} = 0
            if s_below is Sign.POSITIVE or (cand == n and s_below is Sign.ZERO):
                above = _col_sub(self.coord_col(cand), q_col)
                s_above = ev.certified_sign(above)
                if s_above is Sign.AMBIGUOUS:
                    raise PrecisionExhaustedError("pair window test is ambiguous")
                if s_above is Sign.NEGATIVE:
                    raise AssertionError("window scan lost monotonicity")
                j = cand
                break
        if j is None:
            raise AssertionError("pair window scan fell off the end")
        return PairSymbol(i, j), q_col

    def push(self, symbol: SymbolND, inserted: Column) -> None:
        if isinstance(symbol, NonNegSymbol):
            self.cols = self.cols[1:] + [inserted]
        else:
            j = symbol.j
            self.cols = self.cols[1:j + 1] + [inserted] + self.cols[j + 1:]


@dataclass(frozen=True)
class SequenceRecordN:
    symbols: tuple[SymbolND, ...]
    d_history: tuple[tuple[ExactNumber, ...], ...]
    status: SequenceStatus
    matrix: Matrix
    refinements: int
    precision_bits: int

    @property
    def terminated(self) -> bool:
        return self.status is SequenceStatus.TERMINATED


def classify_nd(point: PointN, *, cap_bits: int | None = None) -> SymbolND:
    """The unique region symbol of a simplex point (slack ties go nonnegative)."""
    n = point.dim
    ev = FormEvaluator(list(point.coords), cap_bits=cap_bits)
    _require_domain_nd(ev, n)
    return _Engine(ev, n).classify_once()[0]


def sequence_nd(point: PointN, max_len: int, *, cap_bits: int | None = None) -> SequenceRecordN:
    """Certified symbol sequence in dimension n with full remainder history."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    n = point.dim
    ev = FormEvaluator(list(point.coords), cap_bits=cap_bits)
    _require_domain_nd(ev, n)
    eng = _Engine(ev, n)
    symbols: list[SymbolND] = []
    d_hist: list[tuple[ExactNumber, ...]] = [tuple(ev.materialize(c) for c in eng.cols)]
    status = None

    while len(symbols) < max_len:
        s_lead = ev.certified_sign(eng.cols[0])
        if s_lead is Sign.AMBIGUOUS:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        if s_lead is not Sign.POSITIVE:
            raise AssertionError("leading remainder lost positivity")
        s_last = ev.certified_sign(eng.cols[n])
        if s_last is Sign.ZERO:
            status = SequenceStatus.TERMINATED
            break
        if s_last is Sign.AMBIGUOUS:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        if s_last is Sign.NEGATIVE:
            raise AssertionError("smallest remainder certified negative")
        try:
            symbol, inserted = eng.classify_once()
        except PrecisionExhaustedError:
            status = SequenceStatus.PRECISION_EXHAUSTED
            break
        eng.push(symbol, inserted)
        symbols.append(symbol)
        d_hist.append(tuple(ev.materialize(c) for c in eng.cols))

    if status is None:
        s_last = ev.certified_sign(eng.cols[n])
        status = SequenceStatus.TERMINATED if s_last is Sign.ZERO else SequenceStatus.TRUNCATED

    return SequenceRecordN(
        symbols=tuple(symbols),
        d_history=tuple(d_hist),
        status=status,
        matrix=mat_from_columns(eng.cols),
        refinements=ev.refinements,
        precision_bits=ev.bits,
    )


def recover_nd(matrix: Matrix) -> tuple[Fraction, ...]:
    """Estimate the starting coordinates from an accumulated matrix.

    The direction orthogonal to all but the leading column is the vector of
    signed first-column minors; normalising by the top entry gives estimates
    for (x_1, ..., x_n).  A zero top minor means not enough contraction yet.
    """
    size = len(matrix)
    minors = [(-1) ** r * mat_minor_det(matrix, r, 0) for r in range(size)]
    if minors[0] == 0:
        raise NotYetConvergedError("leading minor is zero")
    return tuple(Fraction(minors[r], minors[0]) for r in range(1, size))


# regions, membership, decomposition audit -----------------------------------


def _frame_vertex(n: int, ones: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1) if t < ones else Fraction(0) for t in range(n))


def region_vertices(n: int, symbol: SymbolND) -> tuple[tuple[Fraction, ...], ...]:
    """The n+1 exact vertices of a region of the subdivision."""
    if isinstance(symbol, NonNegSymbol):
        k = symbol.k
        if k < 0:
            raise ValueError("nonnegative symbol index must be >= 0")
        ones = _frame_vertex(n, n)
        if n == 1:
            if k < 1:
                raise ValueError("index 0 region is empty in dimension 1")
            return ((Fraction(1, k),), (Fraction(1, k + 1),))
        verts = [_frame_vertex(n, 1)]
        for level in range(2, n):
            verts.append(tuple(c / level for c in _frame_vertex(n, level)))
        verts.append(tuple(c / (n + k - 1) for c in ones))
        verts.append(tuple(c / (n + k) for c in ones))
        return tuple(verts)
    i, j = symbol.i, symbol.j
    if n < 3:
        raise ValueError("pair regions only exist in dimension 3 and up")
    if not (1 <= i < j <= n):
        raise ValueError(f"bad pair symbol ({i},{j})")
    verts = []
    for level in range(1, n + 1):
        if level == j:
            continue
        scale = min(i, level) + (1 if level > j else 0)
        verts.append(tuple(c / scale for c in _frame_vertex(n, level)))
    vj = _frame_vertex(n, j)
    verts.append(tuple(c / (i + 1) for c in vj))
    verts.append(tuple(c / i for c in vj))
    return tuple(verts)


def region_membership(point: Sequence[Fraction], symbol: SymbolND, *, closed: bool = False) -> bool:
    """Exact membership test straight from the defining inequalities.

    With closed=False this implements the partition convention (half-open
    boundaries); closed=True relaxes every strict inequality, giving the
    closure, which is what region vertices satisfy.
    """
    x = [Fraction(v) for v in point]
    n = len(x)

    def gt(v) -> bool:
        return v >= 0 if closed else v > 0

    # domain (closure version never rejects a boundary point of the simplex)
    if x[0] > 1 or any(x[t] < x[t + 1] for t in range(n - 1)) or not gt(x[n - 1]):
        return False
    q = []
    acc = Fraction(1)
    for t in range(n):
        acc -= x[t]
        q.append(acc)  # q[t] = q_{t+1}
    slack = q[n - 2] if n >= 2 else Fraction(1)
    if isinstance(symbol, NonNegSymbol):
        k = symbol.k
        hi = slack - k * x[n - 1]
        lo_next = hi - x[n - 1]
        return hi >= 0 and (lo_next < 0 or (closed and lo_next <= 0))
    i, j = symbol.i, symbol.j
    if n < 3 or not (1 <= i < j <= n):
        return False
    qi = q[i - 1]
    qi1 = q[i]
    xj = x[j - 1]
    xj1 = x[j] if j < n else Fraction(0)
    if closed:
        return slack <= 0 and qi >= 0 and qi1 <= 0 and xj >= qi >= xj1
    # half-open convention: the fan owns slack == 0; the crossing index is
    # the first t with q_{t+1} <= 0, so q_i == 0 is admitted only at i == 1;
    # the window is strict on the right against real coordinates and closed
    # against the virtual endpoint x_{n+1} = 0.
    if slack >= 0:
        return False
    if qi < 0 or (qi == 0 and i > 1):
        return False
    if qi1 > 0:
        return False
    if xj < qi:
        return False
    if j < n and qi <= xj1:
        return False
    return True


def candidate_symbols(n: int) -> list[SymbolND]:
    """Every pair symbol plus a marker-free enumeration hook for audits."""
    return [PairSymbol(i, j) for i in range(1, n - 1) for j in range(i + 1, n + 1)]


def sample_rational_point(rng: random.Random, n: int, max_denominator: int) -> tuple[Fraction, ...]:
    """One random rational point with 1 >= x_1 >= ... >= x_n > 0.

    The top facet x_1 = 1 is included: the subdivision covers it (such
    points sit in a pair region whose inserted value is zero), so the
    coverage audit should exercise it too.
    """
    if max_denominator < n + 1:
        raise ValueError("denominator bound too small to sample the simplex")
    den = rng.randint(n + 1, max_denominator)
    nums = sorted((rng.randint(1, den) for _ in range(n)), reverse=True)
    return tuple(Fraction(p, den) for p in nums)


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    samples: int
    violations: tuple[tuple[tuple[Fraction, ...], int], ...]
    classify_mismatches: int

    @property
    def ok(self) -> bool:
        return not self.violations and self.classify_mismatches == 0


def decomposition_check(n: int, samples: int, *, seed: int = 0,
                        max_denominator: int = 10000) -> DecompositionReport:
    """Sample rational points and count how many regions claim each one.

    Membership is tested directly from the defining inequalities for the
    floor-determined nonnegative index (plus its neighbours, which must
    fail) and for every pair symbol exhaustively.  Every sampled point must
    land in exactly one region; its region must also agree with classify_nd,
    which decides by certified integer forms rather than these inequalities.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    rng = random.Random(seed)
    violations: list[tuple[tuple[Fraction, ...], int]] = []
    mismatches = 0
    for _ in range(samples):
        x = sample_rational_point(rng, n, max_denominator)
        slack = 1 - sum(x[:n - 1]) if n >= 2 else Fraction(1)
        matches: list[SymbolND] = []
        if slack >= 0:
            k = int(slack / x[n - 1])
            for cand in (k - 1, k, k + 1):
                if cand >= 0 and region_membership(x, NonNegSymbol(cand)):
                    matches.append(NonNegSymbol(cand))
        for sym in candidate_symbols(n):
            if region_membership(x, sym):
                matches.append(sym)
        if len(matches) != 1:
            violations.append((x, len(matches)))
            continue
        if classify_nd(PointN(x)) != matches[0]:
            mismatches += 1
    return DecompositionReport(
        n=n,
        samples=samples,
        violations=tuple(violations),
        classify_mismatches=mismatches,
    )
