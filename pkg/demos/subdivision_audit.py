"""Tour the higher-dimensional subdivision and audit its covering property.

In dimension n the domain 1 >= x_1 >= ... >= x_n > 0 splits into a fan of
nonnegative-index regions plus finitely many pair regions.  Every region is
a simplex on n+1 rational vertices; the audit samples random rational
points and demands that exactly one region claims each, with the certified
classifier agreeing.  The top facet x_1 = 1 is part of the cover: its pair
step inserts a zero and the run ends one step later.
"""
import argparse
from fractions import Fraction

from trianglemap import (
    NonNegSymbol,
    PairSymbol,
    PointN,
    classify_nd,
    decomposition_check,
    region_vertices,
    sequence_nd,
)


def show_region(n: int, symbol) -> None:
    verts = region_vertices(n, symbol)
    pretty = ["(" + ", ".join(str(c) for c in v) + ")" for v in verts]
    print(f"  region {symbol}: {len(verts)} vertices")
    for p in pretty:
        print(f"    {p}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    n = 3
    print(f"some regions in dimension {n}:")
    show_region(n, NonNegSymbol(0))
    show_region(n, PairSymbol(1, 3))

    tie = PointN((Fraction(9, 10), Fraction(9, 10), Fraction(1, 10)))
    print(f"tied point {tie.coords} classifies as {classify_nd(tie)}")
    rec = sequence_nd(tie, 10)
    path = ",".join(str(s) for s in rec.symbols)
    print(f"its run passes through the x_1 = 1 facet and ends: {path} "
          f"({rec.status.value})")

    for dim in (3, 4):
        report = decomposition_check(dim, args.samples, seed=args.seed)
        print(f"n = {dim}: {report.samples} sampled points, "
              f"{len(report.violations)} coverage violations, "
              f"{report.classify_mismatches} classifier mismatches, "
              f"ok = {report.ok}")
        assert report.ok
    print("each sampled point lies in exactly one region")


if __name__ == "__main__":
    main()
