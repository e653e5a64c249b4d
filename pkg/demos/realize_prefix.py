"""Turn a symbol string into the exact triangle of points that produce it.

Each symbol refines the previous triangle by one inverse-map application,
so prefixes of a string give a strictly nested chain of rational triangles.
The centroid of the final triangle is a certificate: running the forward
map on it reproduces the whole prefix.
"""
from trianglemap import Point2, realize, sequence, witness


def area2(region) -> str:
    return f"{abs(region.orientation())}"


def main() -> None:
    symbols = (2, 0, 1, 3)
    chain = [symbols[:t] for t in range(1, len(symbols) + 1)]

    print(f"target prefix: {','.join(map(str, symbols))}")
    previous = None
    for prefix in chain:
        region = realize(prefix)
        label = ",".join(map(str, prefix))
        print(f"prefix {label:10s} vertices {region.vertices}  2*area {area2(region)}")
        if previous is not None:
            assert previous.contains_region(region), "refinement must nest"
        previous = region

    w = witness(symbols)
    print(f"witness point: {w}")
    rec = sequence(Point2(*w), len(symbols))
    assert rec.symbols == symbols
    print("forward run on the witness reproduces the prefix exactly")


if __name__ == "__main__":
    main()
