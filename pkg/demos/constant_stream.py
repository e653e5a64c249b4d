"""Watch an algebraic point produce a constant symbol stream.

The positive root r of x^3 + k*x^2 + x - 1 gives a point (r, r^2) that the
subdivision map sends exactly to itself, so every step lands in wedge k.
The engine works on certified enclosures and refines them on demand, which
is visible in the refinement counter for large k.
"""
import argparse

from trianglemap import period_one_point, period_one_poly, period_one_root, sequence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=20, help="wedge index to hold")
    ap.add_argument("--steps", type=int, default=40)
    ap.add_argument("--bits", type=int, default=256, help="working precision")
    args = ap.parse_args()

    poly = period_one_poly(args.k)
    root = period_one_root(args.k, args.bits)
    lo, hi = root.bounds()
    print(f"defining polynomial: {poly.to_text()}")
    print(f"root enclosure at {args.bits} bits: [{float(lo):.15f}, {float(hi):.15f}]")

    point = period_one_point(args.k, args.bits)
    rec = sequence(point, args.steps)
    print(f"symbols ({len(rec.symbols)} steps): {','.join(map(str, rec.symbols))}")
    print(f"status: {rec.status.value}")
    print(f"enclosure refinements needed: {rec.refinements} "
          f"(final working precision {rec.precision_bits} bits)")
    assert all(s == args.k for s in rec.symbols)
    print(f"every symbol equals {args.k}, as the fixed point demands")


if __name__ == "__main__":
    main()
