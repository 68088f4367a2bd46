"""The projective line over a hypercomplex algebra.

Points are pairs ``[x : y]`` modulo multiplication by units.  Off the
complex numbers a nonzero scalar need not be a unit, so both the
equivalence test and the canonical representative are decided per
algebra:

* complex: the usual cross-multiplication test;
* double: in idempotent coordinates a unit is a pair of nonzero reals,
  so each coordinate is an independent real projective pair (possibly
  the zero pair);
* dual: a unit has nonzero real part; pairs with no unit entry only
  carry their nilpotent parts.

A point is in the invariant set ``S`` (the GL2-orbit of the finite
points) exactly when its coordinates generate the whole algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateModulus, KindMismatch, NotProjectable
from .hypercomplex import HyperNumber, Kind, coerce, same_kind


class PointClass(enum.Enum):
    FINITE = "finite"
    INFINITY = "infinity"
    EXTRA_BRANCH = "extra_branch"
    OUTSIDE_S = "outside_s"


def _real_proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    """u = t*v for some real t != 0 (both vectors nonzero), or both zero."""
    u_zero = not any(u)
    v_zero = not any(v)
    if u_zero or v_zero:
        return u_zero and v_zero
    return all(a * d == b * c for a, b in zip(u, v) for c, d in zip(u, v))


def unit_multiple(u: Sequence[HyperNumber], v: Sequence[HyperNumber]) -> bool:
    """True iff ``u = lam * v`` componentwise for some unit ``lam``.

    Works for vectors of any length; used for points (length 2) and for
    PGL2 classes of matrices (length 4).
    """
    if len(u) != len(v):
        raise ValueError("length mismatch")
    kind = same_kind(*u, *v)
    if kind is Kind.HYPERBOLIC:
        # lam unit <=> both idempotent coordinates nonzero
        return all(
            _real_proportional([a.split()[s] for a in u], [b.split()[s] for b in v])
            for s in (0, 1)
        )
    pivot = next((i for i, b in enumerate(v) if b.is_unit()), None)
    if pivot is not None:
        lam = u[pivot] / v[pivot]
        return lam.is_unit() and all(a == lam * b for a, b in zip(u, v))
    if kind is Kind.ELLIPTIC:
        # every nonzero complex number is a unit, so v is the zero vector
        return not any(u) and not any(v)
    # dual, v purely nilpotent: lam * (s e) = lam.re * s e
    if any(a.re for a in u):
        return False
    return _real_proportional([a.im for a in u], [b.im for b in v])


def _det(x1, y1, x2, y2) -> HyperNumber:
    return x1 * y2 - y1 * x2


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """A point ``[x : y]``; ``==`` compares equivalence classes."""

    x: HyperNumber
    y: HyperNumber

    def __post_init__(self):
        if isinstance(self.x, HyperNumber):
            kind = self.x.kind
        elif isinstance(self.y, HyperNumber):
            kind = self.y.kind
        else:
            raise TypeError("ProjPoint needs at least one HyperNumber coordinate")
        object.__setattr__(self, "x", coerce(self.x, kind))
        object.__setattr__(self, "y", coerce(self.y, kind))
        if not self.x and not self.y:
            raise ValueError("[0 : 0] is not a projective point")

    @property
    def kind(self) -> Kind:
        return self.x.kind

    @property
    def pair(self) -> tuple[HyperNumber, HyperNumber]:
        return self.x, self.y

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return equivalent(self, other)

    def __hash__(self):
        return hash(canonicalize(self).pair)

    def __iter__(self):
        return iter((self.x, self.y))

    def __repr__(self):
        return f"ProjPoint({self.x!s} : {self.y!s})"

    def conjugate(self) -> "ProjPoint":
        return ProjPoint(self.x.conjugate(), self.y.conjugate())

    def scaled(self, lam: HyperNumber) -> "ProjPoint":
        return ProjPoint(lam * self.x, lam * self.y)


def zero(kind: Kind) -> ProjPoint:
    return ProjPoint(kind.zero, kind.one)


def one(kind: Kind) -> ProjPoint:
    return ProjPoint(kind.one, kind.one)


def infinity(kind: Kind) -> ProjPoint:
    return ProjPoint(kind.one, kind.zero)


def embed(z: HyperNumber) -> ProjPoint:
    return ProjPoint(z, z.kind.one)


def project(p: ProjPoint) -> HyperNumber:
    if not p.y.is_unit():
        raise NotProjectable(f"{p!r}: second coordinate is not a unit")
    return p.x / p.y


def equivalent(p: ProjPoint, q: ProjPoint) -> bool:
    if p.kind is not q.kind:
        raise KindMismatch("points from different algebras")
    if p.kind is Kind.ELLIPTIC:
        return p.x * q.y == q.x * p.y
    return unit_multiple(p.pair, q.pair)


def determinant(p: ProjPoint, q: ProjPoint) -> HyperNumber:
    """``x1*y2 - y1*x2``."""
    return _det(p.x, p.y, q.x, q.y)


def essentially_distinct(p: ProjPoint, q: ProjPoint) -> bool:
    if p.kind is not q.kind:
        raise KindMismatch("points from different algebras")
    return determinant(p, q).is_unit()


def pairwise_essentially_distinct(points: Sequence[ProjPoint]) -> bool:
    return all(
        essentially_distinct(p, q)
        for i, p in enumerate(points)
        for q in points[i + 1:]
    )


def conj_point(p: ProjPoint) -> ProjPoint:
    return p.conjugate()


def modulus_point(p: ProjPoint) -> ProjPoint:
    mx, my = p.x.modulus_sq(), p.y.modulus_sq()
    if mx == 0 and my == 0:
        raise DegenerateModulus(f"both coordinates of {p!r} have zero modulus")
    return ProjPoint(p.kind.number(mx), p.kind.number(my))


def is_unimodular(p: ProjPoint) -> bool:
    """The coordinates generate the unit ideal, i.e. ``p`` lies in S."""
    if p.kind is Kind.ELLIPTIC:
        return True
    if p.kind is Kind.PARABOLIC:
        return p.x.is_unit() or p.y.is_unit()
    xs, ys = p.x.split(), p.y.split()
    return all(xs[s] or ys[s] for s in (0, 1))


def classify_point(p: ProjPoint) -> PointClass:
    if p.y.is_unit():
        return PointClass.FINITE
    if not is_unimodular(p):
        return PointClass.OUTSIDE_S
    if not p.y:
        return PointClass.INFINITY
    return PointClass.EXTRA_BRANCH


def in_S(p: ProjPoint) -> bool:
    return classify_point(p) is not PointClass.OUTSIDE_S


def _normal_real_pair(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    if b:
        return a / b, Fraction(1)
    if a:
        return Fraction(1), Fraction(0)
    return Fraction(0), Fraction(0)


def canonicalize(p: ProjPoint) -> ProjPoint:
    """A fixed representative of the class of ``p``.

    Finite points become ``[z : 1]`` and infinity ``[1 : 0]``.  Dual
    extra-branch points become ``[t : e]`` with real ``t != 0``; double
    extra-branch points take the forms ``[t : 1 +- j]`` or
    ``[1 -+ j : 1 +- j]``.  Points outside S scale their first nonzero
    real coefficient (per idempotent coordinate for double numbers) to 1.
    """
    kind = p.kind
    x, y = p.pair
    if y.is_unit():
        return ProjPoint(x / y, kind.one)
    if kind is Kind.ELLIPTIC:
        return infinity(kind)
    if kind is Kind.PARABOLIC:
        if x.is_unit():
            if not y:
                return infinity(kind)
            return ProjPoint(kind.number(x.re / y.im), kind.unit)
        q, s = _normal_real_pair(x.im, y.im)
        return ProjPoint(kind.number(0, q), kind.number(0, s))
    (xp, xm), (yp, ym) = x.split(), y.split()
    plus, minus = _normal_real_pair(xp, yp), _normal_real_pair(xm, ym)
    if is_unimodular(p):
        if not yp and not ym:
            return infinity(kind)
        if not yp:
            s = minus[0]
            if s:
                return ProjPoint(kind.number(2 * s), kind.number(1, -1))
            return ProjPoint(kind.number(1, 1), kind.number(1, -1))
        r = plus[0]
        if r:
            return ProjPoint(kind.number(2 * r), kind.number(1, 1))
        return ProjPoint(kind.number(1, -1), kind.number(1, 1))
    return ProjPoint(
        HyperNumber.from_split(plus[0], minus[0]),
        HyperNumber.from_split(plus[1], minus[1]),
    )
