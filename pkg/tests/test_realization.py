import random
from fractions import Fraction

import pytest

from trianglemap.errors import DegenerateInputError
from trianglemap.realization import (
    DOMAIN_VERTICES,
    TriangleRegion,
    preimage_point,
    preimage_region,
    realize,
    witness,
)
from trianglemap.triangle import Point2, sequence, step


def test_domain_region():
    domain = TriangleRegion(tuple((Fraction(x), Fraction(y)) for x, y in DOMAIN_VERTICES))
    assert domain.contains((Fraction(1, 2), Fraction(1, 3)))
    assert not domain.contains((Fraction(1, 3), Fraction(1, 2)))
    assert domain.contains((Fraction(1), Fraction(0)))
    assert not domain.contains((Fraction(1), Fraction(0)), strict=True)


def test_degenerate_region_rejected():
    flat = TriangleRegion(((Fraction(0), Fraction(0)),
                           (Fraction(1), Fraction(1)),
                           (Fraction(2), Fraction(2))))
    with pytest.raises(DegenerateInputError):
        flat.contains((Fraction(1, 2), Fraction(1, 2)))


def test_preimage_point_inverts_map():
    target = (Fraction(2, 3), Fraction(1, 3))
    src = preimage_point(1, target)
    k, image = step(Point2(*src))
    assert k == 1
    assert (image.alpha, image.beta) == target


def test_realize_single_symbol():
    region = realize((2,))
    assert region.vertices == ((Fraction(1), Fraction(0)),
                               (Fraction(1, 3), Fraction(1, 3)),
                               (Fraction(1, 4), Fraction(1, 4)))
    assert region.centroid() == (Fraction(19, 36), Fraction(7, 36))
    assert region.diameter_sq() == Fraction(5, 8)


def test_realize_empty_is_domain():
    region = realize(())
    assert region.vertices == tuple(
        (Fraction(x), Fraction(y)) for x, y in DOMAIN_VERTICES)


def test_witness_reproduces_prefix():
    prefix = (2, 0, 1, 3)
    w = witness(prefix)
    rec = sequence(Point2(*w), len(prefix))
    assert rec.symbols == prefix


def test_regions_nest_strictly():
    prefix = (1, 2, 0, 2, 1)
    prev = realize(())
    for i in range(1, len(prefix) + 1):
        cur = realize(prefix[:i])
        assert prev.contains_region(cur)
        assert abs(cur.orientation()) < abs(prev.orientation())
        prev = cur


def test_preimage_region_matches_realize():
    inner = realize((3,))
    again = preimage_region(2, inner)
    assert again.vertices == realize((2, 3)).vertices


def test_random_prefixes_round_trip():
    rng = random.Random(11)
    for _ in range(40):
        prefix = tuple(rng.randint(0, 4) for _ in range(rng.randint(1, 8)))
        w = witness(prefix)
        rec = sequence(Point2(*w), len(prefix))
        assert rec.symbols == prefix


def test_vertex_sequences_on_wedge_boundary():
    # the wedge is half-open: its near diagonal vertex carries symbol k,
    # the far one already belongs to wedge k + 1
    from trianglemap.triangle import classify
    for k in range(4):
        region = realize((k,))
        _, near, far = region.vertices
        assert classify(Point2(*near)) == k
        assert classify(Point2(*far)) == k + 1
