"""Recover the algebraic equation hiding behind a periodic symbol stream.

A window of the accumulated matrices pins the starting point to a curve:
eliminating the second coordinate leaves one integer polynomial in the
first.  For the constant stream k,k,k,... that eliminant is divisible by
x^3 + k*x^2 + x - 1, the polynomial whose root actually generates the
stream.
"""
from trianglemap import (
    derive_cubic,
    divides,
    eliminant_report,
    period_one_poly,
    period_one_root,
)


def main() -> None:
    for k in (1, 2, 5):
        symbols = (k,) * 8
        eliminant = derive_cubic(symbols, later=3, earlier=1)
        target = period_one_poly(k)
        rep = eliminant_report(eliminant, candidate=target,
                               hint=period_one_root(k, 192))
        print(f"k = {k}")
        print(f"  stream:      {','.join(map(str, symbols))}")
        print(f"  eliminant:   {eliminant.to_text()}")
        print(f"  target:      {target.to_text()}")
        print(f"  degree {rep['degree']}, divisible by target: {rep['factor_checked']}, "
              f"root residual {rep['root_residual']}")
        assert divides(target, eliminant)
    print("every eliminant contains the generating cubic as a factor")


if __name__ == "__main__":
    main()
