"""Text forms for points, polynomials, symbols, and matrices.

Point text accepted everywhere a point is an input:

* ``"1/2,1/3"`` exact rationals, one per coordinate (plain decimals work too);
* ``"dec:0.54,0.29:256"`` decimal coordinates enclosed at the given bits;
* ``"root:-1,1,1,1:0,1:pow2"`` powers (r, r**2, ..., r**N) of the root of the
  polynomial (constant coefficient first) isolated in the open interval.

Polynomial text is the comma-separated coefficient list, constant first, so
``"-1,1,1,1"`` is x**3 + x**2 + x - 1.  Symbols in dimension two are plain
integers; higher dimensions mix integers and pairs like ``"3,(1,2),0"``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DegenerateInputError
from .numeric import BigFloat, ExactNumber, RootSpec
from .polynomials import IntPolynomial
from .simplex import NonNegSymbol, PairSymbol, PointN, SymbolND
from .triangle import Point2


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DegenerateInputError(f"bad rational {text!r}") from exc


def format_fraction(value: Fraction) -> str:
    return str(value)


def format_exact(value: ExactNumber) -> object:
    """JSON-ready form: exact rationals as strings, enclosures as objects."""
    if isinstance(value, BigFloat):
        lo, hi = value.bounds()
        return {"lo": str(lo), "hi": str(hi), "bits": value.prec}
    return str(value)


def parse_root_spec(poly_text: str, interval_text: str) -> RootSpec:
    poly = IntPolynomial.from_text(poly_text)
    parts = interval_text.split(",")
    if len(parts) != 2:
        raise DegenerateInputError(f"bad interval {interval_text!r}")
    return RootSpec(poly, parse_fraction(parts[0]), parse_fraction(parts[1]))


def _parse_coordinates(text: str, precision: int) -> tuple[ExactNumber, ...]:
    text = text.strip()
    if text.startswith("root:"):
        body = text[len("root:"):]
        pieces = body.rsplit(":", 2)
        if len(pieces) != 3:
            raise DegenerateInputError(f"bad root point {text!r}")
        poly_text, interval_text, pow_text = pieces
        m = re.fullmatch(r"pow(\d+)", pow_text.strip())
        if not m:
            raise DegenerateInputError(f"bad power suffix {pow_text!r}")
        count = int(m.group(1))
        spec = parse_root_spec(poly_text, interval_text)
        return PointN.from_root(spec, count, precision).coords
    if text.startswith("dec:"):
        body = text[len("dec:"):]
        values_text, _, bits_text = body.rpartition(":")
        if not values_text:
            raise DegenerateInputError(f"bad decimal point {text!r}")
        try:
            bits = int(bits_text)
        except ValueError as exc:
            raise DegenerateInputError(f"bad precision {bits_text!r}") from exc
        return tuple(BigFloat.from_decimal(part, bits) for part in values_text.split(","))
    return tuple(parse_fraction(part) for part in text.split(","))


def parse_point2(text: str, precision: int) -> Point2:
    coords = _parse_coordinates(text, precision)
    if len(coords) != 2:
        raise DegenerateInputError(f"expected two coordinates, got {len(coords)}")
    return Point2(coords[0], coords[1])


def parse_pointn(text: str, precision: int) -> PointN:
    return PointN(_parse_coordinates(text, precision))


def parse_symbols_2d(text: str) -> tuple[int, ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            k = int(part)
        except ValueError as exc:
            raise DegenerateInputError(f"bad symbol {part!r}") from exc
        if k < 0:
            raise DegenerateInputError("symbols are nonnegative")
        out.append(k)
    return tuple(out)


_ND_TOKEN = re.compile(r"\((\d+)\s*,\s*(\d+)\)|(\d+)")


def parse_symbols_nd(text: str) -> tuple[SymbolND, ...]:
    out: list[SymbolND] = []
    pos = 0
    stripped = text.replace(" ", "")
    while pos < len(stripped):
        if stripped[pos] == ",":
            pos += 1
            continue
        m = _ND_TOKEN.match(stripped, pos)
        if not m:
            raise DegenerateInputError(f"bad symbol stream near {stripped[pos:]!r}")
        if m.group(3) is not None:
            out.append(NonNegSymbol(int(m.group(3))))
        else:
            out.append(PairSymbol(int(m.group(1)), int(m.group(2))))
        pos = m.end()
    return tuple(out)


def format_symbols_nd(symbols) -> str:
    return ",".join(str(s) for s in symbols)


def format_matrix(rows) -> list[str]:
    """Row-major flattening to decimal integer strings."""
    return [str(x) for row in rows for x in row]


def format_point(coords) -> str:
    """Comma-joined exact rational coordinates (not for enclosure values)."""
    return ",".join(str(Fraction(c)) for c in coords)
