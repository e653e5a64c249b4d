"""Follow a rational pair to termination and rebuild it from the matrix.

Rational inputs drive an integer remainder sequence downhill until it hits
zero.  The accumulated unimodular matrix plus the last two remainders then
reproduce the starting pair exactly; the cross-product estimate alone is
close but needs the remainder tail, because different terminating pairs can
share one symbol string.
"""
from fractions import Fraction

from trianglemap import (
    Point2,
    rational_termination_check,
    recover_pair,
    recover_terminated,
    sequence,
)


def main() -> None:
    p, q, r = 113, 76, 45
    alpha, beta = Fraction(q, p), Fraction(r, p)
    print(f"start: alpha = {alpha}, beta = {beta}")

    rec = sequence(Point2(alpha, beta), 100)
    print(f"symbols: {','.join(map(str, rec.symbols))}")
    print(f"status: {rec.status.value}")

    trace = rational_termination_check(p, q, r)
    print(f"integer remainders: {trace.d_values}")
    drops = [a - b for a, b in zip(trace.d_values, trace.d_values[1:])]
    assert all(d > 0 for d in drops), "remainders must strictly decrease"
    print(f"strictly decreasing across {trace.steps} steps, final remainder 0")

    est = recover_pair(rec.matrix)
    exact = recover_terminated(rec.matrix, rec.d_history[-3], rec.d_history[-2])
    print(f"cross-product estimate: {est}")
    print(f"exact recovery from remainder tail: {exact}")
    assert exact == (alpha, beta)
    print("recovered the starting pair exactly")


if __name__ == "__main__":
    main()
