"""Command-line interface.

Exit codes: 0 success or a positive answer, 1 a negative or empty answer,
2 bad usage, 3 an internal consistency failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import render
from .cycles.arithmetic import find_hole
from .cycles.enumeration import (
    FIGURE_RECTANGLE,
    Rectangle,
    enumerate_by_age,
    enumerate_in_disk,
    enumerate_in_rectangle,
    shell_growth_step,
)
from .field import CycInt, QLambda, ZLambda, make_context, poly_str
from .group import cf_ratio_equals, eval_cf, pseudo_euclid, reduce_column

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _context(q: int):
    if q < 3:
        raise UsageError("q must be at least 3")
    return make_context(q)


def parse_coeffs(text: str, d: int) -> list[int]:
    """Integers separated by ';' or ',' in ascending powers of λ."""
    parts = [p for p in text.replace(",", ";").split(";") if p.strip()]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad coefficient list {text!r}") from None
    if not vals or len(vals) > d:
        raise UsageError(f"expected 1 to {d} coefficients, got {text!r}")
    return vals + [0] * (d - len(vals))


def _zl(ctx, text: str) -> ZLambda:
    return ZLambda(ctx, parse_coeffs(text, ctx.d))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_minpoly(args) -> int:
    ctx = _context(args.q)
    print(f"Phi_{2 * args.q}: {poly_str(ctx.phi2q)}")
    print(f"pmin: {poly_str(ctx.pmin)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ctx = _context(args.q)
    if args.precision < 16:
        raise UsageError("precision must be at least 16 bits")
    shell_r = math.sqrt(float(shell_growth_step(ctx)))
    if args.radius2 is not None:
        R2 = _fraction(args.radius2)
        if R2 < 0:
            raise UsageError("radius2 must be nonnegative")
        records = enumerate_in_disk(ctx, R2, args.workers)
        r = math.sqrt(float(R2))
        extent = (-r, r, -r, r)
        query = {"radius2": str(R2)}
    elif args.age is not None:
        if args.age < 0:
            raise UsageError("age must be nonnegative")
        records = list(enumerate_by_age(ctx, args.age, args.workers))
        r = max(abs(complex(x.point)) for x in records)
        extent = (-r, r, -r, r)
        query = {"age": args.age}
    else:
        rect = FIGURE_RECTANGLE if args.rect is None else Rectangle(*map(_fraction, args.rect))
        records = enumerate_in_rectangle(ctx, rect, args.workers)
        extent = (float(rect.x0), float(rect.x1), float(rect.y0), float(rect.y1))
        query = {"rect": [str(rect.x0), str(rect.x1), str(rect.y0), str(rect.y1)]}
    if args.format == "csv":
        text = render.to_csv(records, args.precision)
    elif args.format == "json":
        text = render.to_json(args.q, query, records, args.precision)
    else:
        text = render.to_svg(args.q, records, extent, shell_r)
    _emit(text, args.out)
    if args.out:
        print(f"{len(records)} points written to {args.out}", file=sys.stderr)
    return EXIT_OK if records else EXIT_NO


def cmd_member(args) -> int:
    ctx = _context(args.q)
    x = CycInt(_zl(ctx, args.a), _zl(ctx, args.c))
    red = reduce_column(x)
    print("true" if red.member else "false")
    print(f"point: {x}")
    print(f"multipliers: {list(red.multipliers)}")
    print(f"final: {red.final}")
    print(f"reason: {red.reason}")
    return EXIT_OK if red.member else EXIT_NO


def cmd_cf(args) -> int:
    ctx = _context(args.q)
    r0, r1 = QLambda(_zl(ctx, args.num)), QLambda(_zl(ctx, args.den))
    if not r1:
        raise UsageError("denominator must be nonzero")
    cf = pseudo_euclid(r0, r1, args.max_steps)
    print(cf)
    if cf.terminated:
        if not cf_ratio_equals(eval_cf(ctx, cf.terms), r0, r1):
            raise AssertionError("expansion does not evaluate back to the input")
        print("terminated")
        return EXIT_OK
    print("undecided(max-steps)")
    return EXIT_NO


def cmd_reduce5(args) -> int:
    from .q5 import decompose_q5

    ctx = make_context(5)
    g = CycInt(_zl(ctx, args.a), _zl(ctx, args.c))
    if not g:
        print(render.dumps({"error": "gamma is zero"}), end="")
        return EXIT_NO
    d = decompose_q5(g)
    payload = {
        "delta": {"a": list(d.delta.a.c), "c": list(d.delta.c.c), "text": str(d.delta)},
        "gamma": {"a": list(g.a.c), "c": list(g.c.c), "text": str(g)},
        "trace": [
            {"branch": s.branch.value, "k": s.k, "n": s.n, "norm": abs(s.norm_before)}
            for s in d.trace
        ],
        "u": {"coeffs": list(d.u.c), "text": str(d.u)},
    }
    print(render.dumps(payload), end="")
    return EXIT_OK


def cmd_holes(args) -> int:
    ctx = _context(args.q)
    if args.q not in (3, 4, 6):
        raise UsageError("holes are available for q in 3, 4, 6")
    grid = None
    if args.primes:
        flat = parse_coeffs(args.primes, args.N * args.N)
        if len(args.primes.replace(",", ";").split(";")) != args.N * args.N:
            raise UsageError(f"expected {args.N * args.N} primes")
        grid = [flat[i * args.N : (i + 1) * args.N] for i in range(args.N)]
    try:
        cert = find_hole(ctx, args.N, grid, overlap=args.overlap)
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload = {
        "base": list(cert.base),
        "interior": [list(p) for p in cert.interior],
        "lattices": list(cert.lattices),
        "N": cert.N,
        "primes": [list(r) for r in cert.primes],
        "q": cert.q,
        "quadrangle": cert.quadrangle(),
        "verified": cert.verified,
    }
    if cert.overlap is not None:
        payload["overlap"] = cert.overlap
    print(render.dumps(payload), end="")
    return EXIT_OK if cert.verified else EXIT_NO


def cmd_verify(args) -> int:
    from . import verify

    q_list = [int(v) for v in args.q_list.split(",")] if args.q_list else verify.DEFAULT_Q_LIST
    if any(q < 3 for q in q_list):
        raise UsageError("q must be at least 3")
    suites = args.suites.split(",") if args.suites else None
    try:
        results = verify.run(q_list, args.seed, suites)
    except ValueError as e:
        raise UsageError(str(e)) from None
    for r in results:
        print(r.line())
    ok = all(r.ok for r in results)
    print("all suites passed" if ok else "some suites failed")
    return EXIT_OK if ok else EXIT_NO


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddcycles", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("minpoly", help="print Φ_2q and the minimal polynomial of λ")
    s.add_argument("q", type=int)
    s.set_defaults(func=cmd_minpoly)

    s = sub.add_parser("enumerate", help="list odd vanishing cycles")
    s.add_argument("q", type=int)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--radius2", help="squared radius bound (rational)")
    g.add_argument("--age", type=int, help="maximal age")
    g.add_argument("--rect", nargs=4, metavar=("X0", "X1", "Y0", "Y1"))
    s.add_argument("--format", choices=("csv", "svg", "json"), default="csv")
    s.add_argument("--out")
    s.add_argument("--precision", type=int, default=53, help="bits for coordinates")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("member", help="decide membership of a + c·ζ^(q-1)")
    s.add_argument("q", type=int)
    s.add_argument("a", help="coefficients of a, e.g. '0;2' for 2λ")
    s.add_argument("c", help="coefficients of c")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("cf", help="λ-continued fraction of num/den")
    s.add_argument("q", type=int)
    s.add_argument("num")
    s.add_argument("den")
    s.add_argument("--max-steps", type=int, default=1000)
    s.set_defaults(func=cmd_cf)

    s = sub.add_parser("reduce5", help="write γ = u·δ for q = 5")
    s.add_argument("a")
    s.add_argument("c")
    s.set_defaults(func=cmd_reduce5)

    s = sub.add_parser("holes", help="certified empty parallelogram (q = 3, 4, 6)")
    s.add_argument("q", type=int)
    s.add_argument("N", type=int)
    s.add_argument("--primes", help="N² primes, row by row")
    s.add_argument("--overlap", action="store_true", help="also cover the second lattice")
    s.set_defaults(func=cmd_holes)

    s = sub.add_parser("verify", help="run the seeded self-check suites")
    s.add_argument("--q-list", default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--suites", default=None)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
