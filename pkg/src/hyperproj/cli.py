"""Command-line front end.

    hyperproj xratio --algebra complex 0 1 2 3
    hyperproj map3   --algebra complex 0 1 inf -> 1 0 inf
    hyperproj cycle  --algebra complex [1:1] [i:1] [-1:1] --plot c.csv
    hyperproj dist   --algebra complex [i:1] [2i:1]
    hyperproj cprod  --algebra complex real.json imag.json

Results are printed as one JSON object.  Exit codes: 0 success, 2 parse
or usage error, 3 violated precondition, 4 failed ``--verify`` check.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import cycles, lobachevsky, moebius, testkit
from .cross_ratio import cross_ratio
from .errors import PreconditionError
from .hypercomplex import Kind
from .literals import (
    LiteralError,
    format_number,
    format_pair,
    parse_number,
    parse_point,
    parse_rational,
)
from .projective import canonicalize, classify_point, PointClass

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4


class VerificationError(Exception):
    pass


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise VerificationError(what)


def _points(texts, kind):
    return [parse_point(t, kind) for t in texts]


def cmd_xratio(args, kind):
    if len(args.points) != 4:
        raise LiteralError("xratio takes exactly four points")
    pts = _points(args.points, kind)
    v = cross_ratio(*pts)
    canon = canonicalize(v.value)
    out = {
        "value": format_pair(v.value),
        "canonical": format_pair(canon),
        "singular": v.singular,
        "real": cycles.on_cycle(v.value, cycles.real_line(kind)),
    }
    if args.verify:
        _check(canon == v.value, "canonical form is not equivalent to the value")
        shift = moebius.make(1, 1, 0, 1, kind=kind)
        moved = cross_ratio(*(shift(p) for p in pts)).value
        _check(moved == v.value, "cross-ratio changed under translation")
        if all(classify_point(p) is PointClass.FINITE for p in pts):
            try:
                oracle = testkit.oracle_cross_ratio(*pts)
            except PreconditionError:
                oracle = None
            if oracle is not None:
                _check(oracle == v.value, "affine cross-ratio disagrees")
    return out


def cmd_map3(args, kind):
    tokens = [t.strip() for t in args.points]
    if tokens.count("->") != 1:
        raise LiteralError("map3 expects: z1 z2 z3 -> w1 w2 w3")
    i = tokens.index("->")
    src, dst = tokens[:i], tokens[i + 1:]
    if len(src) != 3 or len(dst) != 3:
        raise LiteralError("map3 expects three source and three target points")
    zs, ws = _points(src, kind), _points(dst, kind)
    M = moebius.three_point_map(*zs, *ws).normalized()
    out = {"matrix": [[format_number(M.a), format_number(M.b)],
                      [format_number(M.c), format_number(M.d)]]}
    if args.verify:
        for z, w in zip(zs, ws):
            _check(M(z) == w, f"matrix does not send {z!r} to {w!r}")
    return out


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _quadratic_roots(a: float, b: float, c: float) -> list[float]:
    """Real roots of a t^2 + b t + c (a != 0), numerically stable."""
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    if disc == 0:
        return [-b / (2 * a)]
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    roots = [q / a, c / q] if q != 0 else [0.0, 0.0]
    return sorted(roots)


def sample_cycle(C: cycles.CycleMatrix, xmin: float, xmax: float, n: int) -> list[tuple[float, float, int]]:
    """Affine points ``x + y u`` on C at ``n`` sampled x values.

    Branches 0 and 1 are the lower and upper roots in y; branch 2 are
    vertical lines, sampled over the same range in y.
    """
    coeffs = [float(c) for c in cycles.affine_equation(C)]
    scale = max(abs(c) for c in coeffs) or 1.0
    a, b, c, d, e = (q / scale for q in coeffs)
    rows = []
    if b == 0 and d == 0:
        if a == 0:
            xs = [-e / c] if c != 0 else []
        else:
            xs = _quadratic_roots(a, c, e)
        for x in xs:
            if xmin <= x <= xmax:
                rows.extend((x, y, 2) for y in _linspace(xmin, xmax, n))
        return rows
    for x in _linspace(xmin, xmax, n):
        rest = a * x * x + c * x + e
        if b == 0:
            rows.append((x, -rest / d, 0))
            continue
        for branch, y in enumerate(_quadratic_roots(b, d, rest)):
            rows.append((x, y, branch))
    return rows


def plot_residual(C: cycles.CycleMatrix, x: float, y: float) -> float:
    coeffs = [float(c) for c in cycles.affine_equation(C)]
    scale = max(abs(c) for c in coeffs) or 1.0
    a, b, c, d, e = (q / scale for q in coeffs)
    return abs(a * x * x + b * y * y + c * x + d * y + e)


def cmd_cycle(args, kind):
    if len(args.points) != 3:
        raise LiteralError("cycle takes exactly three points")
    pts = _points(args.points, kind)
    C = cycles.cycle_through(*pts, strict=False)
    out = {"k": str(C.k), "L": format_number(C.L), "m": str(C.m)}
    rows = None
    if args.plot:
        xmin, xmax = args.range
        if args.samples < 1:
            raise LiteralError("--samples must be positive")
        rows = sample_cycle(C, xmin, xmax, args.samples)
        with open(args.plot, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x", "y", "branch"])
            for x, y, branch in rows:
                writer.writerow([repr(x), repr(y), branch])
        out["plot"] = {"path": args.plot, "rows": len(rows)}
    if args.verify:
        for p in pts:
            _check(cycles.on_cycle(p, C), f"{p!r} is not on the constructed cycle")
        for x, y, _ in rows or []:
            _check(plot_residual(C, x, y) < 1e-12, f"plot point ({x}, {y}) is off the cycle")
    return out


def cmd_dist(args, kind):
    if len(args.points) != 2:
        raise LiteralError("dist takes exactly two points")
    z, w = _points(args.points, kind)
    dist = lobachevsky.distance(z, w)
    forms = dist.forms
    out = {
        "d": str(dist.d),
        "delta": dist.delta,
        "forms": None if forms is None else {
            "cosh2": forms.cosh_sq, "sinh2": forms.sinh_sq, "tanh2": forms.tanh_sq,
        },
    }
    if args.verify:
        _check(lobachevsky.d_proj(w, z) == dist.d, "tanh-distance is not symmetric")
        if dist.delta is not None:
            _check(math.isclose(math.tanh(dist.delta / 2) ** 2, float(dist.d),
                                rel_tol=1e-12, abs_tol=1e-15), "tanh^2(delta/2) != d")
            _check(abs(forms.cosh_sq - forms.sinh_sq - 1) < 1e-12, "cosh^2 - sinh^2 != 1")
    return out


def load_cycle(path: str, kind: Kind) -> cycles.CycleMatrix:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise LiteralError(f"cannot read cycle file {path}: {exc}") from None
    if not isinstance(data, dict) or set(data) != {"k", "m", "L"}:
        raise LiteralError(f"{path}: expected an object with keys k, m, L")
    try:
        k, m = parse_rational(data["k"]), parse_rational(data["m"])
        L = parse_number(str(data["L"]), kind)
    except (TypeError, ValueError) as exc:
        raise LiteralError(f"{path}: {exc}") from None
    return cycles.CycleMatrix(k, m, L)


def cmd_cprod(args, kind):
    if len(args.points) != 2:
        raise LiteralError("cprod takes exactly two cycle files")
    C1, C2 = (load_cycle(p, kind) for p in args.points)
    product = cycles.cycle_product(C1, C2)
    orthogonal = None if kind is Kind.PARABOLIC else cycles.is_cycle_orthogonal(C1, C2)
    out = {"product": format_number(product), "orthogonal": orthogonal}
    if args.verify:
        s = kind.square
        expanded = -2 * (C1.L * C2.L.conjugate()).re - s * (C1.m * C2.k + C1.k * C2.m)
        _check(product == expanded, "cycle product disagrees with its expanded form")
        _check(product == cycles.cycle_product(C2, C1), "cycle product is not symmetric")
    return out


COMMANDS = {
    "xratio": (cmd_xratio, "projective cross-ratio of four points"),
    "map3": (cmd_map3, "Moebius matrix sending three points to three points"),
    "cycle": (cmd_cycle, "cycle through three points, optionally sampled to CSV"),
    "dist": (cmd_dist, "projective Lobachevskian distance of two points"),
    "cprod": (cmd_cprod, "cycle product of two cycles stored as JSON"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=["complex", "dual", "double"], default="complex")
    common.add_argument("--verify", action="store_true",
                        help="re-check postconditions, exit 4 on mismatch")
    parser = argparse.ArgumentParser(prog="hyperproj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("points", nargs="+")
        if name == "cycle":
            p.add_argument("--plot", metavar="CSV")
            p.add_argument("--range", nargs=2, type=float, default=(-2.0, 2.0),
                           metavar=("XMIN", "XMAX"))
            p.add_argument("--samples", type=int, default=101)
    return parser


def _shield(argv: list[str]) -> list[str]:
    """Stop argparse from reading ``-i``, ``-1/2`` or ``->`` as options.

    Every option is spelled with ``--`` (apart from ``-h``), so any other
    token with a single leading dash is a value; a leading space hides it.
    """
    return [" " + t if t.startswith("-") and not t.startswith("--") and t != "-h" else t
            for t in argv]


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_shield(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    kind = Kind.from_name(args.algebra)
    handler = COMMANDS[args.command][0]
    try:
        out = handler(args, kind)
    except LiteralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    print(json.dumps(out), file=stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
