"""Command line interface.

Every command writes one JSON object per line to stdout (``--format csv``
switches to CSV with a header row).  Output is deterministic: keys are
sorted, rationals are printed as ``p/q`` strings, and anything random is
seeded.  Exit codes: 0 success, 1 usage or degenerate input, 2 precision
exhausted, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from . import io_formats, matrices, periodicity, realization, simplex, triangle
from .errors import (
    DegenerateInputError,
    InconsistentInputError,
    NotYetConvergedError,
    PrecisionExhaustedError,
    TriangleMapError,
)
from .numeric import MIN_PRECISION, BigFloat, SequenceStatus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECISION = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; this project reserves 2
    for precision exhaustion, so usage problems exit 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"error": "usage", "detail": message}, sort_keys=True),
              file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(records: list[dict], fmt: str) -> None:
    if fmt == "csv":
        if not records:
            return
        keys = sorted({k for r in records for k in r})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys)
        writer.writeheader()
        for r in records:
            writer.writerow({k: json.dumps(r[k], sort_keys=True) if isinstance(r.get(k), (dict, list))
                             else r.get(k, "") for k in keys})
        sys.stdout.write(buf.getvalue())
    else:
        for r in records:
            print(json.dumps(r, sort_keys=True))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bits", type=int, default=256,
                   help="working precision for inexact input (default 256)")
    p.add_argument("--cap-bits", type=int, default=None,
                   help="hard ceiling for on-demand refinement")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")


def _check_bits(bits: int) -> None:
    if bits < MIN_PRECISION:
        raise DegenerateInputError(f"--bits must be at least {MIN_PRECISION}")


def _status_payload(status: SequenceStatus) -> str:
    return status.value


# seq -------------------------------------------------------------------------


def _cmd_seq(args) -> int:
    _check_bits(args.bits)
    coords = io_formats._parse_coordinates(args.point, args.bits)
    records: list[dict] = []
    if len(coords) == 2:
        rec = triangle.sequence(triangle.Point2(*coords), args.max, cap_bits=args.cap_bits)
        symbols = [str(k) for k in rec.symbols]
        d_values = [io_formats.format_exact(d) for d in rec.d_history]
        matrix = io_formats.format_matrix(rec.matrix.rows)
    else:
        recn = simplex.sequence_nd(simplex.PointN(coords), args.max, cap_bits=args.cap_bits)
        rec = recn
        symbols = [str(s) for s in recn.symbols]
        d_values = [io_formats.format_exact(d) for row in recn.d_history[-1:] for d in row]
        matrix = io_formats.format_matrix(recn.matrix)
    if args.trace:
        for idx, sym in enumerate(rec.symbols):
            records.append({"index": idx + 1, "symbol": sym if isinstance(sym, str) else str(sym)})
    summary: dict = {
        "symbols": ",".join(symbols),
        "status": _status_payload(rec.status),
        "length": len(symbols),
        "refinements": rec.refinements,
        "bits": rec.precision_bits,
        "matrix": matrix,
    }
    if args.d_values:
        summary["d_values"] = d_values
    records.append(summary)
    _emit(records, args.format)
    if rec.status is SequenceStatus.PRECISION_EXHAUSTED:
        return EXIT_PRECISION
    return EXIT_OK


# classify ---------------------------------------------------------------------


def _cmd_classify(args) -> int:
    _check_bits(args.bits)
    coords = io_formats._parse_coordinates(args.point, args.bits)
    if len(coords) == 2:
        symbol = str(triangle.classify(triangle.Point2(*coords), cap_bits=args.cap_bits))
    else:
        symbol = str(simplex.classify_nd(simplex.PointN(coords), cap_bits=args.cap_bits))
    _emit([{"symbol": symbol, "dimension": len(coords)}], args.format)
    return EXIT_OK


# recover ----------------------------------------------------------------------


def _cmd_recover(args) -> int:
    _check_bits(args.bits)
    coords = io_formats._parse_coordinates(args.point, args.bits)
    out: dict = {"steps": args.steps}
    if len(coords) == 2:
        point = triangle.Point2(*coords)
        rec = triangle.sequence(point, args.steps, cap_bits=args.cap_bits)
        out["status"] = _status_payload(rec.status)
        if rec.status is SequenceStatus.PRECISION_EXHAUSTED:
            _emit([out], args.format)
            return EXIT_PRECISION
        d_tail = rec.d_history[-3:-1]
        if rec.terminated and all(isinstance(d, Fraction) for d in d_tail):
            alpha, beta = matrices.recover_terminated(rec.matrix, *d_tail)
            out["method"] = "terminated-exact"
            estimates = (alpha, beta)
        else:
            try:
                estimates = matrices.recover_pair(rec.matrix)
            except NotYetConvergedError:
                out["method"] = "estimate"
                out["converged"] = False
                _emit([out], args.format)
                return EXIT_VERIFY if args.strict else EXIT_OK
            out["method"] = "estimate"
        out["estimates"] = [str(v) for v in estimates]
        if all(isinstance(c, Fraction) for c in coords):
            residual = max(abs(e - c) for e, c in zip(estimates, coords))
            out["residual"] = str(residual)
    else:
        pointn = simplex.PointN(coords)
        recn = simplex.sequence_nd(pointn, args.steps, cap_bits=args.cap_bits)
        out["status"] = _status_payload(recn.status)
        if recn.status is SequenceStatus.PRECISION_EXHAUSTED:
            _emit([out], args.format)
            return EXIT_PRECISION
        try:
            estimates = simplex.recover_nd(recn.matrix)
        except NotYetConvergedError:
            out["method"] = "estimate"
            out["converged"] = False
            _emit([out], args.format)
            return EXIT_VERIFY if args.strict else EXIT_OK
        out["method"] = "estimate"
        out["estimates"] = [str(v) for v in estimates]
        if all(isinstance(c, Fraction) for c in coords):
            residual = max(abs(e - c) for e, c in zip(estimates, coords))
            out["residual"] = str(residual)
    _emit([out], args.format)
    return EXIT_OK


# realize ----------------------------------------------------------------------


def _cmd_realize(args) -> int:
    symbols = io_formats.parse_symbols_2d(args.symbols)
    region = realization.realize(symbols)
    wit = region.centroid()
    _emit([{
        "symbols": ",".join(str(k) for k in symbols),
        "vertices": [io_formats.format_point(v) for v in region.vertices],
        "witness": io_formats.format_point(wit),
        "diameter_sq": str(region.diameter_sq()),
    }], args.format)
    return EXIT_OK


# derive-poly -------------------------------------------------------------------


def _cmd_derive_poly(args) -> int:
    _check_bits(args.bits)
    symbols = io_formats.parse_symbols_2d(args.symbols)
    later = args.later if args.later is not None else len(symbols)
    earlier = args.earlier
    poly = periodicity.derive_cubic(symbols, later, earlier)
    candidate = None
    window = symbols[earlier:later]
    if window and all(k == window[0] for k in window):
        candidate = periodicity.period_one_poly(window[0])
    hint = None
    if args.hint:
        coords = io_formats._parse_coordinates(args.hint, args.bits)
        hint = coords[0]
    report = periodicity.eliminant_report(poly, candidate=candidate, hint=hint)
    _emit([{
        "poly": poly.to_text(),
        "degree": report["degree"],
        "factor_checked": report["factor_checked"],
        "root_residual": report["root_residual"],
    }], args.format)
    return EXIT_OK


# decomp-check -------------------------------------------------------------------


def _cmd_decomp_check(args) -> int:
    report = simplex.decomposition_check(
        args.n, args.samples, seed=args.seed, max_denominator=args.max_den)
    _emit([{
        "n": report.n,
        "samples": report.samples,
        "violations": len(report.violations),
        "classify_mismatches": report.classify_mismatches,
        "ok": report.ok,
    }], args.format)
    return EXIT_OK if report.ok else EXIT_VERIFY


# verify -------------------------------------------------------------------------


def _verify_period1(args, records: list[dict]) -> int:
    failures = 0
    for k in range(args.kmax + 1):
        point = periodicity.period_one_point(k, args.bits)
        rec = triangle.sequence(point, args.length, cap_bits=args.cap_bits)
        ok = (rec.status is SequenceStatus.TRUNCATED
              and all(sym == k for sym in rec.symbols)
              and len(rec.symbols) == args.length)
        failures += 0 if ok else 1
        records.append({"suite": "period1", "case": f"k={k}", "ok": ok,
                        "refinements": rec.refinements})
    return failures


def _verify_identity(args, records: list[dict]) -> int:
    rng = random.Random(args.seed)
    failures = 0
    for case in range(args.cases):
        den = rng.randint(3, 500)
        b = rng.randint(1, den - 1)
        a = rng.randint(b, den - 1)
        alpha, beta = Fraction(a, den), Fraction(b, den)
        rec = triangle.sequence(triangle.Point2(alpha, beta), 40)
        ok = matrices.fundamental_identity_check(alpha, beta, rec.symbols)
        ok = ok and rec.matrix.det() == 1
        failures += 0 if ok else 1
        records.append({"suite": "identity", "case": f"{alpha},{beta}", "ok": ok})
    return failures


def _verify_reduction(args, records: list[dict]) -> int:
    rng = random.Random(args.seed)
    failures = 0
    for case in range(args.cases):
        den = rng.randint(3, 300)
        b = rng.randint(1, den - 1)
        a = rng.randint(b, den - 1)
        alpha, beta = Fraction(a, den), Fraction(b, den)
        rec2 = triangle.sequence(triangle.Point2(alpha, beta), 60)
        recn = simplex.sequence_nd(simplex.PointN((alpha, beta)), 60)
        got = tuple(s.k if isinstance(s, simplex.NonNegSymbol) else None for s in recn.symbols)
        ok = got == rec2.symbols and recn.status is rec2.status
        failures += 0 if ok else 1
        records.append({"suite": "reduction", "case": f"{alpha},{beta}", "ok": ok})
        x = Fraction(rng.randint(1, den - 1), den)
        g = triangle.gauss_sequence(x, 60)
        r1 = simplex.sequence_nd(simplex.PointN((x,)), 60)
        got1 = tuple(s.k if isinstance(s, simplex.NonNegSymbol) else None for s in r1.symbols)
        ok1 = got1 == g.quotients and r1.status is g.status
        failures += 0 if ok1 else 1
        records.append({"suite": "reduction", "case": f"gauss {x}", "ok": ok1})
    return failures


def _verify_decomp(args, records: list[dict]) -> int:
    failures = 0
    for n in (3, 4):
        report = simplex.decomposition_check(n, args.cases, seed=args.seed)
        ok = report.ok
        failures += 0 if ok else 1
        records.append({"suite": "decomp", "case": f"n={n}", "ok": ok,
                        "classify_mismatches": report.classify_mismatches})
    return failures


def _verify_conjecture1(args, records: list[dict]) -> int:
    failures = 0
    for n in (2, 3, 4):
        for k in range(args.kmax + 1):
            if n == 1 and k == 0:
                continue
            evidence = periodicity.power_basis_evidence(n, k)
            ok = evidence["all_annihilated"]
            failures += 0 if ok else 1
            records.append({"suite": "conjecture1", "case": f"n={n},k={k}", "ok": ok})
    return failures


def _verify_derive(args, records: list[dict]) -> int:
    failures = 0
    for k in range(1, args.kmax + 1):
        stream = (k,) * 4
        poly = periodicity.derive_cubic(stream, 2, 1)
        ok = poly == periodicity.period_one_poly(k)
        failures += 0 if ok else 1
        records.append({"suite": "derive", "case": f"k={k}", "ok": ok,
                        "poly": poly.to_text()})
    return failures


_SUITES = {
    "period1": _verify_period1,
    "identity": _verify_identity,
    "reduction": _verify_reduction,
    "decomp": _verify_decomp,
    "conjecture1": _verify_conjecture1,
    "derive": _verify_derive,
}


def _cmd_verify(args) -> int:
    _check_bits(args.bits)
    records: list[dict] = []
    failures = _SUITES[args.suite](args, records)
    records.append({"summary": True, "suite": args.suite,
                    "cases": len(records), "failures": failures})
    _emit(records, args.format)
    return EXIT_OK if failures == 0 else EXIT_VERIFY


# entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trianglemap",
                     description="exact subdivision sequences on triangles and simplices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[], help="symbol sequence of a point")
    p.add_argument("--point", required=True)
    p.add_argument("--max", type=int, default=50)
    p.add_argument("--d-values", action="store_true")
    p.add_argument("--trace", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("classify", help="region symbol of a point")
    p.add_argument("--point", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("recover", help="estimate the start of a run from its matrix")
    p.add_argument("--point", required=True)
    p.add_argument("--steps", type=int, default=30)
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when the estimate has not converged")
    _add_common(p)
    p.set_defaults(func=_cmd_recover)

    p = sub.add_parser("realize", help="exact region of points with a given prefix")
    p.add_argument("--symbols", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("derive-poly", help="polynomial pinned by a periodic stream")
    p.add_argument("--symbols", required=True)
    p.add_argument("--earlier", type=int, default=0)
    p.add_argument("--later", type=int, default=None)
    p.add_argument("--hint", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_derive_poly)

    p = sub.add_parser("decomp-check", help="sampled exactly-one-region audit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-den", type=int, default=10000)
    _add_common(p)
    p.set_defaults(func=_cmd_decomp_check)

    p = sub.add_parser("verify", help="built-in verification suites")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--length", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionExhaustedError as exc:
        print(json.dumps({"error": "precision-exhausted", "detail": str(exc)},
                         sort_keys=True), file=sys.stderr)
        return EXIT_PRECISION
    except (DegenerateInputError, InconsistentInputError, NotYetConvergedError,
            TriangleMapError, ValueError) as exc:
        print(json.dumps({"error": "degenerate-input", "detail": str(exc)},
                         sort_keys=True), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
