"""Seeded generators and independent oracles for the test-suite.

The oracles deliberately avoid the main code paths they check: the
cross-ratio oracle goes through the affine formula, the S4 check
enumerates every pair of permutations, and points on a cycle are
produced by intersecting the conic with rational lines.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cross_ratio import KLEIN_FOUR, Perm4, all_perms, f_rho, gamma, original_cross_ratio
from .cycles import CycleMatrix, affine_equation, on_cycle
from .errors import Exhausted, NonUnitDeterminant
from .hypercomplex import HyperNumber, Kind
from .moebius import MoebiusMatrix, identity, pgl_equal
from .projective import (
    PointClass, ProjPoint, classify_point, embed, essentially_distinct, infinity,
    pairwise_essentially_distinct, project,
)

KINDS = (Kind.ELLIPTIC, Kind.PARABOLIC, Kind.HYPERBOLIC)


@dataclass(frozen=True)
class SampleConfig:
    coefficient_bound: int = 6
    count: int = 100
    seed: int = 0
    max_draws: int = 200

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class OnCycle:
    """Constraint: points on ``cycle``; ``anchor`` is a known finite point on it."""

    cycle: CycleMatrix
    anchor: ProjPoint | None = None


Constraint = Union[str, OnCycle]


def random_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_number(rng: random.Random, kind: Kind, bound: int) -> HyperNumber:
    """Mostly generic numbers, with zero divisors mixed in off the complex numbers."""
    roll = rng.random()
    if kind is not Kind.ELLIPTIC and roll < 0.1:
        r = random_rational(rng, bound)
        if kind is Kind.PARABOLIC:
            return kind.number(0, r)
        return kind.number(r, rng.choice((1, -1)) * r)
    return kind.number(random_rational(rng, bound), random_rational(rng, bound))


def random_unit(rng: random.Random, kind: Kind, bound: int) -> HyperNumber:
    while True:
        z = random_number(rng, kind, bound)
        if z.is_unit():
            return z


def random_point(rng: random.Random, kind: Kind, bound: int) -> ProjPoint:
    roll = rng.random()
    if roll < 0.6:
        return embed(random_number(rng, kind, bound))
    if roll < 0.65:
        return infinity(kind)
    while True:
        x, y = random_number(rng, kind, bound), random_number(rng, kind, bound)
        if x or y:
            return ProjPoint(x, y)


def random_finite_point(rng: random.Random, kind: Kind, bound: int) -> ProjPoint:
    return embed(random_number(rng, kind, bound))


def random_matrix(rng: random.Random, kind: Kind, bound: int, real: bool = False) -> MoebiusMatrix:
    for _ in range(1000):
        if real:
            entries = [kind.number(random_rational(rng, bound)) for _ in range(4)]
        else:
            entries = [random_number(rng, kind, bound) for _ in range(4)]
        try:
            return MoebiusMatrix(*entries)
        except NonUnitDeterminant:
            continue
    raise Exhausted("could not draw an invertible matrix")


def random_cycle(rng: random.Random, kind: Kind, bound: int) -> CycleMatrix:
    while True:
        k, m = random_rational(rng, bound), random_rational(rng, bound)
        L = random_number(rng, kind, bound)
        if k or m or L:
            return CycleMatrix(k, m, L)


def distinct_points(rng: random.Random, kind: Kind, bound: int, n: int,
                    max_draws: int = 200) -> list[ProjPoint]:
    """``n`` pairwise essentially distinct points.

    Points outside S are essentially distinct from nothing, so they are
    never kept.
    """
    out: list[ProjPoint] = []
    draws = 0
    while len(out) < n:
        draws += 1
        if draws > max_draws * n:
            raise Exhausted(f"could not find {n} essentially distinct points")
        p = random_point(rng, kind, bound)
        if classify_point(p) is PointClass.OUTSIDE_S:
            continue
        if all(essentially_distinct(p, q) for q in out):
            out.append(p)
    return out


def _affine(x: Fraction, y: Fraction, kind: Kind) -> ProjPoint:
    return embed(kind.number(x, y))


def points_on_cycle(rng: random.Random, C: CycleMatrix, n: int, anchor: ProjPoint | None = None,
                    bound: int = 6, max_draws: int = 200) -> list[ProjPoint]:
    """``n`` finite rational points on ``C`` (not necessarily distinct).

    Lines through a rational anchor meet the conic again in a rational
    point.  Without an anchor, one is searched for on a grid of x values.
    """
    kind = C.kind
    a, b, c, d, e = affine_equation(C)
    if anchor is None:
        anchor = _find_anchor(rng, C, bound, max_draws)
    z0 = project(anchor)
    x0, y0 = z0.re, z0.im
    if a * x0 * x0 + b * y0 * y0 + c * x0 + d * y0 + e != 0:
        raise ValueError("anchor is not on the cycle")
    gx, gy = 2 * a * x0 + c, 2 * b * y0 + d
    out: list[ProjPoint] = []
    draws = 0
    while len(out) < n:
        draws += 1
        if draws > max_draws * max(n, 1):
            raise Exhausted("could not sample points on the cycle")
        u, v = random_rational(rng, bound), random_rational(rng, bound)
        if not u and not v:
            continue
        quad = a * u * u + b * v * v
        lin = gx * u + gy * v
        if quad == 0:
            if lin != 0:
                continue
            # the whole line lies on the conic
            t = random_rational(rng, bound)
        else:
            t = -lin / quad
        p = _affine(x0 + t * u, y0 + t * v, kind)
        assert on_cycle(p, C)
        out.append(p)
    return out


def _find_anchor(rng: random.Random, C: CycleMatrix, bound: int, max_draws: int) -> ProjPoint:
    a, b, c, d, e = affine_equation(C)
    kind = C.kind
    for _ in range(max_draws):
        x = random_rational(rng, bound)
        # b y^2 + d y + (a x^2 + c x + e) = 0
        rest = a * x * x + c * x + e
        if b == 0:
            if d != 0:
                return _affine(x, -rest / d, kind)
            continue
        disc = d * d - 4 * b * rest
        root = _rational_sqrt(disc)
        if root is not None:
            return _affine(x, (-d + root) / (2 * b), kind)
    raise Exhausted("no rational point found on the cycle")


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, m = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and m * m == q.denominator:
        return Fraction(n, m)
    return None


def _solve_quadratic(A: Fraction, B: Fraction, C: Fraction) -> list[Fraction]:
    """Rational roots of A t^2 + B t + C (all roots if A = 0 and B != 0)."""
    if A == 0:
        return [-C / B] if B != 0 else []
    root = _rational_sqrt(B * B - 4 * A * C)
    if root is None:
        return []
    return sorted({(-B + root) / (2 * A), (-B - root) / (2 * A)})


def cycle_intersections(C1: CycleMatrix, C2: CycleMatrix) -> list[ProjPoint]:
    """Rational points shared by two different cycles, found through affine coordinates.

    Subtracting multiples of the two equations removes the quadratic
    part and leaves a line, which is then cut with one of the cycles.
    Irrational intersections are not returned.
    """
    kind = C1.kind
    e1, e2 = affine_equation(C1), affine_equation(C2)
    out: list[ProjPoint] = []
    if C1.k == 0 and C2.k == 0:
        out.append(infinity(kind))
        (_, _, c1, d1, f1), (_, _, c2, d2, f2) = e1, e2
        det = c1 * d2 - c2 * d1
        if det != 0:
            x = (d1 * f2 - d2 * f1) / det
            y = (c2 * f1 - c1 * f2) / det
            out.append(_affine(x, y, kind))
        return out
    # the combination k2*C1 - k1*C2 has no quadratic part
    c, d, f = (C2.k * u - C1.k * v for u, v in zip(e1[2:], e2[2:]))
    a, b, cq, dq, fq = e1 if C1.k != 0 else e2
    if d != 0:
        # y = al x + be
        al, be = -c / d, -f / d
        xs = _solve_quadratic(a + b * al * al, 2 * b * al * be + cq + dq * al,
                              b * be * be + dq * be + fq)
        out.extend(_affine(x, al * x + be, kind) for x in xs)
    elif c != 0:
        x = -f / c
        ys = _solve_quadratic(b, dq, a * x * x + cq * x + fq)
        out.extend(_affine(x, y, kind) for y in ys)
    return [p for p in out if on_cycle(p, C1) and on_cycle(p, C2)]


def orthogonality_witness(rng: random.Random, C1: CycleMatrix, C2: CycleMatrix,
                          bound: int = 6, max_draws: int = 200):
    """Bounded search for (z1, z2, z3, z4): z1, z4 on both cycles, z2 on C1, z3 on C2."""
    common = cycle_intersections(C1, C2)
    pairs = [(p, q) for n, p in enumerate(common) for q in common[n + 1:] if essentially_distinct(p, q)]
    if not pairs:
        raise Exhausted("no two essentially distinct rational intersection points")
    z1, z4 = pairs[0]
    anchor = z1 if z1.y.is_unit() else z4
    for _ in range(max_draws):
        z2 = points_on_cycle(rng, C1, 1, anchor, bound, max_draws)[0]
        z3 = points_on_cycle(rng, C2, 1, anchor, bound, max_draws)[0]
        if pairwise_essentially_distinct([z1, z2, z3, z4]):
            return z1, z2, z3, z4
    raise Exhausted("no witness found")


def gen_points(cfg: SampleConfig, kind: Kind, constraint: Constraint = "any",
               rng: random.Random | None = None) -> list[ProjPoint]:
    rng = rng or cfg.rng()
    if constraint == "any":
        return [random_point(rng, kind, cfg.coefficient_bound) for _ in range(cfg.count)]
    if constraint == "pairwise_essentially_distinct":
        return distinct_points(rng, kind, cfg.coefficient_bound, cfg.count, cfg.max_draws)
    if isinstance(constraint, OnCycle):
        if constraint.cycle.kind is not kind:
            raise ValueError("cycle from a different algebra")
        return points_on_cycle(rng, constraint.cycle, cfg.count, constraint.anchor,
                               cfg.coefficient_bound, cfg.max_draws)
    raise ValueError(f"unknown constraint {constraint!r}")


def oracle_cross_ratio(z1: ProjPoint, z2: ProjPoint, z3: ProjPoint, z4: ProjPoint) -> ProjPoint:
    """Cross-ratio through the affine quotient formula."""
    return embed(original_cross_ratio(*(project(z) for z in (z1, z2, z3, z4))))


@dataclass(frozen=True)
class S4Report:
    homomorphism: bool
    pairs_checked: int
    image_size: int
    kernel: tuple[str, ...]

    @property
    def ok(self) -> bool:
        expected = {str(Perm4.from_cycles(c)) for c in KLEIN_FOUR}
        return (self.homomorphism and self.pairs_checked == 576 and self.image_size == 6
                and set(self.kernel) == expected)


def s4_report(kind: Kind = Kind.ELLIPTIC) -> S4Report:
    perms = all_perms()
    table = {p: f_rho(p, kind) for p in perms}
    pairs = 0
    hom = True
    for s in perms:
        for r in perms:
            pairs += 1
            hom &= pgl_equal(table[s * r], table[s] @ table[r])
    image: list[MoebiusMatrix] = []
    for m in table.values():
        if not any(pgl_equal(m, g) for g in image):
            image.append(m)
    in_gamma = all(any(pgl_equal(m, g) for g in gamma(kind)) for m in image)
    ident = identity(kind)
    kernel = tuple(str(p) for p in perms if pgl_equal(table[p], ident))
    return S4Report(hom and in_gamma, pairs, len(image), kernel)


def enumerate_s4_check() -> bool:
    return all(s4_report(kind).ok for kind in KINDS)
