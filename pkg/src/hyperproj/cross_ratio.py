"""Projective cross-ratio and the action of S4 on it."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegeneratePair, NotDistinct, NotInvertibleDenominator, SingularValue
from .hypercomplex import HyperNumber, Kind, same_kind
from .moebius import MoebiusMatrix, apply, make, pgl_equal
from .projective import PointClass, ProjPoint, classify_point, equivalent


def cross_pair(z1, z2, z3, z4) -> tuple[HyperNumber, HyperNumber]:
    """The raw pair ``((x1y3-x3y1)(x2y4-x4y2), (x1y2-x2y1)(x3y4-x4y3))``.

    Accepts ProjPoints or bare ``(x, y)`` tuples and checks nothing.
    """
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = (tuple(z) for z in (z1, z2, z3, z4))
    top = (x1 * y3 - x3 * y1) * (x2 * y4 - x4 * y2)
    bottom = (x1 * y2 - x2 * y1) * (x3 * y4 - x4 * y3)
    return top, bottom


@dataclass(frozen=True)
class CrossRatioValue:
    value: ProjPoint
    singular: bool

    @classmethod
    def of(cls, value: ProjPoint) -> "CrossRatioValue":
        return cls(value, classify_point(value) is PointClass.OUTSIDE_S)


def cross_ratio(z1: ProjPoint, z2: ProjPoint, z3: ProjPoint, z4: ProjPoint) -> CrossRatioValue:
    points = (z1, z2, z3, z4)
    same_kind(*(p.x for p in points))
    for i, j in itertools.combinations(range(4), 2):
        if equivalent(points[i], points[j]):
            raise NotDistinct(f"points {i + 1} and {j + 1} coincide")
    top, bottom = cross_pair(*points)
    if not top and not bottom:
        raise DegeneratePair("cross-ratio pair is (0, 0)")
    return CrossRatioValue.of(ProjPoint(top, bottom))


def original_cross_ratio(z1: HyperNumber, z2: HyperNumber, z3: HyperNumber, z4: HyperNumber) -> HyperNumber:
    """``(z1 - z3)(z2 - z4) / ((z1 - z2)(z3 - z4))``."""
    same_kind(z1, z2, z3, z4)
    den = (z1 - z2) * (z3 - z4)
    if not den.is_unit():
        raise NotInvertibleDenominator(f"denominator {den} is not a unit")
    return (z1 - z3) * (z2 - z4) / den


@dataclass(frozen=True)
class Perm4:
    """A permutation of {1, 2, 3, 4}; ``images[k-1]`` is the image of k.

    Products compose right to left: ``(s * r)(k) == s(r(k))``.
    """

    images: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3, 4]:
            raise ValueError(f"not a permutation of 1..4: {self.images}")

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Perm4") -> "Perm4":
        return Perm4(tuple(self(other(k)) for k in range(1, 5)))

    def inverse(self) -> "Perm4":
        inv = [0] * 4
        for k, img in enumerate(self.images, start=1):
            inv[img - 1] = k
        return Perm4(tuple(inv))

    def act(self, items):
        """Reorder four items so slot k holds ``items[rho^-1(k)]``."""
        inv = self.inverse()
        return tuple(items[inv(k) - 1] for k in range(1, 5))

    @classmethod
    def identity(cls) -> "Perm4":
        return cls((1, 2, 3, 4))

    @classmethod
    def from_cycles(cls, text: str) -> "Perm4":
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
        images = [1, 2, 3, 4]
        for cycle in re.findall(r"\(([^)]*)\)", text):
            elems = [int(t) for t in cycle.replace(",", " ").split()]
            for a, b in zip(elems, elems[1:] + elems[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    def __str__(self):
        seen, cycles = set(), []
        for start in range(1, 5):
            if start in seen or self(start) == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(str(k))
                k = self(k)
            cycles.append("(" + " ".join(cyc) + ")")
        return "".join(cycles) or "()"


def all_perms() -> list[Perm4]:
    return [Perm4(p) for p in itertools.permutations((1, 2, 3, 4))]


GAMMA_ROWS = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((-1, 1), (0, 1)),
    ((0, 1), (-1, 1)),
    ((1, -1), (1, 0)),
    ((1, 0), (1, -1)),
)

KLEIN_FOUR = ("()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")


def gamma(kind: Kind = Kind.ELLIPTIC) -> list[MoebiusMatrix]:
    """The six matrices permuting 0, 1 and infinity."""
    return [make(a, b, c, d, kind=kind) for (a, b), (c, d) in GAMMA_ROWS]


@lru_cache(maxsize=None)
def _f_rho_rows(images: tuple[int, ...]) -> tuple:
    rho = Perm4(images)
    kind = Kind.ELLIPTIC
    z, o = kind.zero, kind.one

    def column(lam):
        base = ((z, o), (o, o), lam, (o, z))
        return cross_pair(*rho.act(base))

    # both entries of the pair are linear in lambda
    (a, c), (b, d) = column((o, z)), column((z, o))
    raw = make(a, b, c, d)
    for rows, g in zip(GAMMA_ROWS, gamma(kind)):
        if pgl_equal(raw, g):
            return rows
    raise AssertionError(f"no element of Gamma matches {rho}")


def f_rho(rho: Perm4, kind: Kind = Kind.ELLIPTIC) -> MoebiusMatrix:
    """The element of Gamma relating permuted and original cross-ratios.

    Derived by evaluating the cross-ratio of ``(0, 1, lam, inf)``,
    reordered by ``rho``, at ``lam = [1:0]`` and ``lam = [0:1]``.
    """
    (a, b), (c, d) = _f_rho_rows(rho.images)
    return make(a, b, c, d, kind=kind)


def permute(rho: Perm4, v: CrossRatioValue) -> CrossRatioValue:
    if v.singular:
        raise SingularValue("permutation action is defined on non-singular values")
    return CrossRatioValue.of(apply(f_rho(rho, v.value.kind), v.value))


def permuted_cross_ratio(rho: Perm4, points) -> CrossRatioValue:
    """Cross-ratio of the points reordered as ``z_{rho^-1(k)}``."""
    return cross_ratio(*rho.act(tuple(points)))
