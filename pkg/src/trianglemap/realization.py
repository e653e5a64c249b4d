"""Exact cylinder regions: which starting points produce a given symbol prefix.

The map restricted to wedge k is a projective bijection onto the whole
triangle, so the preimage of a triangle is again a triangle and can be folded
back one symbol at a time starting from the full domain.  All vertices are
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateInputError

Pt = tuple[Fraction, Fraction]

#: The closed domain triangle 1 >= x >= y >= 0.
DOMAIN_VERTICES: tuple[Pt, Pt, Pt] = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(1), Fraction(1)),
)


def _cross(o: Pt, a: Pt, b: Pt) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class TriangleRegion:
    vertices: tuple[Pt, Pt, Pt]

    def orientation(self) -> Fraction:
        a, b, c = self.vertices
        return _cross(a, b, c)

    def centroid(self) -> Pt:
        xs = sum(v[0] for v in self.vertices)
        ys = sum(v[1] for v in self.vertices)
        return xs / 3, ys / 3

    def contains(self, point: Pt, *, strict: bool = False) -> bool:
        """Exact membership; strict=True excludes the boundary."""
        x, y = Fraction(point[0]), Fraction(point[1])
        a, b, c = self.vertices
        orient = self.orientation()
        if orient == 0:
            raise DegenerateInputError("region is degenerate")
        signs = [_cross(a, b, (x, y)), _cross(b, c, (x, y)), _cross(c, a, (x, y))]
        if orient < 0:
            signs = [-s for s in signs]
        if strict:
            return all(s > 0 for s in signs)
        return all(s >= 0 for s in signs)

    def contains_region(self, other: "TriangleRegion", *, strict: bool = False) -> bool:
        return all(self.contains(v, strict=strict) for v in other.vertices)

    def diameter_sq(self) -> Fraction:
        a, b, c = self.vertices
        pairs = ((a, b), (b, c), (a, c))
        return max((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 for p, q in pairs)


def preimage_point(k: int, point: Pt) -> Pt:
    """The unique source in wedge k mapping to the given point."""
    if k < 0:
        raise ValueError("symbols are nonnegative")
    u, v = Fraction(point[0]), Fraction(point[1])
    den = 1 + k * u + v
    return Fraction(1, 1) / den, u / den


def preimage_region(k: int, region: TriangleRegion) -> TriangleRegion:
    return TriangleRegion(tuple(preimage_point(k, v) for v in region.vertices))


def realize(symbols: Sequence[int]) -> TriangleRegion:
    """The closed set of starting points whose run begins with these symbols.

    Folds preimages right to left from the full domain triangle; an empty
    prefix realizes the domain itself.
    """
    region = TriangleRegion(DOMAIN_VERTICES)
    for k in reversed(list(symbols)):
        if not isinstance(k, int) or k < 0:
            raise DegenerateInputError(f"bad symbol {k!r}")
        region = preimage_region(k, region)
    return region


def witness(symbols: Sequence[int]) -> Pt:
    """An exact interior rational point realizing the prefix: the centroid."""
    return realize(symbols).centroid()
