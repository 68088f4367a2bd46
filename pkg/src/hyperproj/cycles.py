"""Cycles: zero sets of the form ``conj(z)^T C z`` with

    C = [[k u,  conj(L)],
         [ -L,  m u    ]]

for real ``k, m`` and ``L`` in the algebra (``u`` the imaginary unit).
These are lines and circles for complex numbers, parabolas for dual
numbers and hyperbolas for double numbers.

Two transformation conventions are exposed.  :func:`pullback` is the
literal ``conj(A)^T C A``, whose points are the A-preimages of points
of C; :func:`pushforward` carries points of C forward by A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import _matrix as mx
from .cross_ratio import cross_ratio
from .errors import (
    DegenerateCycle,
    KindMismatch,
    NotEssentiallyDistinct,
    UnsupportedAlgebra,
    WitnessInvalid,
)
from .hypercomplex import HyperNumber, Kind
from .moebius import MoebiusMatrix, to_zero_one_inf, zero_one_inf_rows
from .projective import ProjPoint, equivalent, pairwise_essentially_distinct

_J = ((0, 1), (-1, 0))
_J_PRODUCT = ((0, -1), (1, 0))


@dataclass(frozen=True)
class CycleMatrix:
    k: Fraction
    m: Fraction
    L: HyperNumber

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        object.__setattr__(self, "m", Fraction(self.m))
        if not isinstance(self.L, HyperNumber):
            raise TypeError("L must be a HyperNumber (it fixes the algebra)")
        if not self.k and not self.m and not self.L:
            raise DegenerateCycle("all cycle coefficients are zero")

    @property
    def kind(self) -> Kind:
        return self.L.kind

    @property
    def K(self) -> HyperNumber:
        return self.kind.number(0, self.k)

    @property
    def M(self) -> HyperNumber:
        return self.kind.number(0, self.m)

    @property
    def matrix(self) -> mx.Mat:
        return mx.mat(self.K, self.L.conjugate(), -self.L, self.M)

    @classmethod
    def from_matrix(cls, m: mx.Mat) -> "CycleMatrix":
        """Read (k, L, m) back from a matrix of cycle shape."""
        (p, q), (r, s) = m
        if p.re or s.re or q != -r.conjugate():
            raise ValueError("matrix does not have cycle shape")
        return cls(p.im, s.im, -r)

    def scaled(self, t) -> "CycleMatrix":
        t = Fraction(t)
        return CycleMatrix(t * self.k, t * self.m, self.L * t)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.k, self.m, self.L.re, self.L.im

    def __str__(self):
        return f"cycle(k={self.k}, L={self.L}, m={self.m})"


def real_line(kind: Kind) -> CycleMatrix:
    return CycleMatrix(0, 0, kind.one)


def imaginary_axis(kind: Kind) -> CycleMatrix:
    return CycleMatrix(0, 0, kind.unit)


def unit_circle(kind: Kind) -> CycleMatrix:
    return CycleMatrix(1, -1, kind.zero)


def same_cycle(C1: CycleMatrix, C2: CycleMatrix) -> bool:
    """Equal up to a nonzero real factor."""
    u, v = C1.coefficients(), C2.coefficients()
    return all(a * d == b * c for a, b in zip(u, v) for c, d in zip(u, v))


def membership_form(p: ProjPoint, C: CycleMatrix) -> HyperNumber:
    if p.kind is not C.kind:
        raise KindMismatch("point and cycle from different algebras")
    (K, Lb), (mL, M) = C.matrix
    x, y = p.pair
    return x.conjugate() * (K * x + Lb * y) + y.conjugate() * (mL * x + M * y)


def on_cycle(p: ProjPoint, C: CycleMatrix) -> bool:
    return not membership_form(p, C)


def concyclic(points: Iterable[ProjPoint], C: CycleMatrix) -> bool:
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    return all(on_cycle(p, C) for p in points)


def cycle_through(z1: ProjPoint, z2: ProjPoint, z4: ProjPoint, strict: bool = True) -> CycleMatrix:
    """The cycle ``J adj(conj A) A`` through three points.

    ``A`` sends (z1, z2, z4) to (0, 1, inf) and ``J = ((0, 1), (-1, 0))``.
    This is ``det(conj A) * J conj(A)^-1 A``; the scalar factor is left
    in so the entries stay polynomial in the coordinates.

    With ``strict=False`` the points need only be distinct: the same
    expression is accepted whenever it is a nonzero cycle through all
    three (e.g. 0, 1+j, inf on the line y = x).
    """
    pts = (z1, z2, z4)
    if strict and not pairwise_essentially_distinct(list(pts)):
        raise NotEssentiallyDistinct("the three points must be pairwise essentially distinct")
    if not strict and any(equivalent(p, q) for n, p in enumerate(pts) for q in pts[n + 1:]):
        raise NotEssentiallyDistinct("the three points must be distinct")
    kind = z1.kind
    A = zero_one_inf_rows(*pts)
    Ab = mx.conj(A)
    n = mx.chain(mx.constant(kind, _J), mx.adjugate(Ab), A)
    if all(not x for x in mx.entries(n)):
        raise NotEssentiallyDistinct("the points do not determine a cycle")
    C = CycleMatrix.from_matrix(n)
    if not strict and not all(on_cycle(p, C) for p in pts):
        raise NotEssentiallyDistinct("the points do not determine a cycle")
    return C


def det_identity_check(z1: ProjPoint, z2: ProjPoint, z4: ProjPoint) -> bool:
    """Check ``det(conj(A)^-1 A) == |L|^2 + K M`` for the normalised cycle matrix.

    With the unnormalised cycle from :func:`cycle_through` the identity
    reads ``det(conj(A)^-1 A) * det(conj A)^2 == |L|^2 + K M``.  The
    product-of-determinants closed form is checked too.
    """
    if not pairwise_essentially_distinct([z1, z2, z4]):
        raise NotEssentiallyDistinct("the three points must be pairwise essentially distinct")
    C = cycle_through(z1, z2, z4)
    A = to_zero_one_inf(z1, z2, z4)
    Ab = A.conjugate()
    lhs = (Ab.inverse() @ A).det()
    rhs = (C.L.modulus_sq() + C.K * C.M) / (Ab.det() * Ab.det())
    (x1, y1), (x2, y2), (x4, y4) = z1.pair, z2.pair, z4.pair
    num = (x2 * y1 - x1 * y2) * (x2 * y4 - x4 * y2) * (x1 * y4 - x4 * y1)
    closed = num / num.conjugate()
    return lhs == rhs == closed


def pullback(A: MoebiusMatrix, C: CycleMatrix) -> CycleMatrix:
    """``conj(A)^T C A``: z is on the result iff A z is on C."""
    if A.kind is not C.kind:
        raise KindMismatch("matrix and cycle from different algebras")
    Ab_t = mx.transpose(A.conjugate().rows)
    return CycleMatrix.from_matrix(mx.chain(Ab_t, C.matrix, A.rows))


def pushforward(A: MoebiusMatrix, C: CycleMatrix) -> CycleMatrix:
    """The image cycle: z is on C iff A z is on the result."""
    return pullback(A.inverse(), C)


def cycle_product(C1: CycleMatrix, C2: CycleMatrix) -> HyperNumber:
    """``-tr(J C1 J conj(C2))`` with ``J = ((0, -1), (1, 0))``."""
    if C1.kind is not C2.kind:
        raise KindMismatch("cycles from different algebras")
    J = mx.constant(C1.kind, _J_PRODUCT)
    return -mx.trace(mx.chain(J, C1.matrix, J, mx.conj(C2.matrix)))


def _orthogonality_algebra(kind: Kind) -> None:
    if kind is Kind.PARABOLIC:
        raise UnsupportedAlgebra("orthogonality is only defined for complex and double numbers")


def is_cycle_orthogonal(C1: CycleMatrix, C2: CycleMatrix) -> bool:
    _orthogonality_algebra(C1.kind)
    return not cycle_product(C1, C2)


def is_projective_orthogonal(C1: CycleMatrix, C2: CycleMatrix, z1, z2, z3, z4) -> bool:
    """Check a witness: z1, z4 on both cycles, z2 on C1, z3 on C2.

    The cycles are projective-orthogonal (with this witness) iff the
    cross-ratio ``[z1, z2, z3, z4]`` lies on the imaginary axis.
    """
    _orthogonality_algebra(C1.kind)
    if C2.kind is not C1.kind:
        raise KindMismatch("cycles from different algebras")
    if same_cycle(C1, C2):
        raise WitnessInvalid("the two cycles coincide")
    if not pairwise_essentially_distinct([z1, z2, z3, z4]):
        raise WitnessInvalid("witness points are not pairwise essentially distinct")
    for p, c, label in ((z1, C1, "z1 on C"), (z1, C2, "z1 on C'"), (z4, C1, "z4 on C"),
                        (z4, C2, "z4 on C'"), (z2, C1, "z2 on C"), (z3, C2, "z3 on C'")):
        if not on_cycle(p, c):
            raise WitnessInvalid(f"{label} fails")
    value = cross_ratio(z1, z2, z3, z4).value
    return on_cycle(value, imaginary_axis(C1.kind))


def affine_equation(C: CycleMatrix) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """Coefficients of the real equation of C at affine points ``[x + y u : 1]``.

    Returns ``(a, b, c, d, e)`` for ``a x^2 + b y^2 + c x + d y + e = 0``.
    """
    s = C.kind.square
    p, q = C.L.re, C.L.im
    # membership form / u = k|z|^2 + m - 2 Im(L z)
    return C.k, -s * C.k, -2 * q, -2 * p, C.m


def contains_infinity(C: CycleMatrix) -> bool:
    return C.k == 0
