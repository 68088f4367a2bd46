"""Möbius-invariant hyperbolic distance on the projective line.

The exact quantity is the tanh-distance
``d(z, w) = P([w, conj z, z, conj w])``, the squared hyperbolic tangent
of half the distance.  Only the distance ``delta`` and the derived
cosh/sinh/tanh forms are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cross_ratio import cross_pair
from .errors import DistanceUndefined, NotEssentiallyDistinct, NotInUpperHalfPlane, NotProjectable
from .hypercomplex import HyperNumber, Kind
from .projective import ProjPoint, essentially_distinct


@dataclass(frozen=True)
class HyperbolicForms:
    cosh_sq: float
    sinh_sq: float
    tanh_sq: float


@dataclass(frozen=True)
class Distance:
    d: Fraction
    delta: float | None

    @property
    def forms(self) -> HyperbolicForms | None:
        return None if self.delta is None else hyperbolic_forms(self.d)


def d_proj(z: ProjPoint, w: ProjPoint) -> Fraction:
    if not essentially_distinct(z, w):
        raise NotEssentiallyDistinct("z and w are not essentially distinct")
    wb = w.conjugate()
    if not essentially_distinct(z, wb):
        raise NotEssentiallyDistinct("z and conj(w) are not essentially distinct")
    top, bottom = cross_pair(w, z.conjugate(), z, wb)
    if not bottom.is_unit():
        raise NotProjectable("second component of the cross-ratio is not a unit")
    value = top / bottom
    # conj-symmetric cross-ratio: the value is always real
    assert value.im == 0, value
    return value.re


def _check_d(d: Fraction) -> None:
    if not 0 <= d < 1:
        raise DistanceUndefined(f"tanh-distance {d} is outside [0, 1)")


def delta_from_d(d: Fraction) -> float:
    """``ln((sqrt d + 1) / (1 - sqrt d))``."""
    _check_d(d)
    t = math.sqrt(d)
    return math.log((t + 1) / (1 - t))


def delta(z: ProjPoint, w: ProjPoint) -> float:
    return delta_from_d(d_proj(z, w))


def hyperbolic_forms(d: Fraction) -> HyperbolicForms:
    """cosh^2, sinh^2 and tanh^2 of half the distance.

    sinh^2 is ``d / (1 - d)``, forced by tanh^2 = d and cosh^2 = 1/(1 - d).
    """
    _check_d(d)
    d = Fraction(d)
    return HyperbolicForms(float(1 / (1 - d)), float(d / (1 - d)), float(d))


def distance(z: ProjPoint, w: ProjPoint) -> Distance:
    d = d_proj(z, w)
    try:
        return Distance(d, delta_from_d(d))
    except DistanceUndefined:
        return Distance(d, None)


def _check_upper(z: HyperNumber) -> None:
    if z.kind is not Kind.ELLIPTIC:
        raise NotInUpperHalfPlane("the classical distance needs complex numbers")
    if z.im <= 0:
        raise NotInUpperHalfPlane(f"{z} is not in the upper half-plane")


def rho_classical(z: HyperNumber, w: HyperNumber) -> float:
    """``ln |(|z - conj w| + |z - w|) / (|z - conj w| - |z - w|)|``."""
    _check_upper(z)
    _check_upper(w)
    far = math.sqrt((z - w.conjugate()).modulus_sq())
    near = math.sqrt((z - w).modulus_sq())
    return math.log(abs((far + near) / (far - near)))


def classical_forms(z: HyperNumber, w: HyperNumber) -> HyperbolicForms:
    """The same three forms via ``|z - w|``, ``|z - conj w|`` and ``Im z Im w``."""
    _check_upper(z)
    _check_upper(w)
    far = (z - w.conjugate()).modulus_sq()
    near = (z - w).modulus_sq()
    den = 4 * z.im * w.im
    return HyperbolicForms(float(far / den), float(near / den), float(near / far))
