"""PGL2 matrices acting on the projective line."""

from __future__ import annotations

from dataclasses import dataclass

from . import _matrix as mx
from .errors import KindMismatch, NonUnitDeterminant, NotEssentiallyDistinct
from .hypercomplex import HyperNumber, Kind, coerce, same_kind
from .projective import ProjPoint, pairwise_essentially_distinct, unit_multiple


@dataclass(frozen=True)
class MoebiusMatrix:
    """``((a, b), (c, d))`` with a unit determinant.

    ``==`` compares entries exactly; use :func:`pgl_equal` for the
    projective class.
    """

    a: HyperNumber
    b: HyperNumber
    c: HyperNumber
    d: HyperNumber

    def __post_init__(self):
        same_kind(self.a, self.b, self.c, self.d)
        if not self.det().is_unit():
            raise NonUnitDeterminant(f"determinant {self.det()} is not a unit")

    @property
    def kind(self) -> Kind:
        return self.a.kind

    @property
    def rows(self) -> mx.Mat:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def entries(self) -> tuple[HyperNumber, ...]:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def from_rows(cls, rows) -> "MoebiusMatrix":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def det(self) -> HyperNumber:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other):
        if isinstance(other, MoebiusMatrix):
            if other.kind is not self.kind:
                raise KindMismatch("matrices from different algebras")
            return MoebiusMatrix.from_rows(mx.mul(self.rows, other.rows))
        if isinstance(other, ProjPoint):
            return apply(self, other)
        return NotImplemented

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return apply(self, p)

    def inverse(self) -> "MoebiusMatrix":
        return MoebiusMatrix.from_rows(mx.scale(self.det().inverse(), mx.adjugate(self.rows)))

    def conjugate(self) -> "MoebiusMatrix":
        return MoebiusMatrix.from_rows(mx.conj(self.rows))

    def scaled(self, lam: HyperNumber) -> "MoebiusMatrix":
        return MoebiusMatrix.from_rows(mx.scale(lam, self.rows))

    def normalized(self) -> "MoebiusMatrix":
        """Representative of the class with the first unit among d, c, b, a set to 1."""
        for e in (self.d, self.c, self.b, self.a):
            if e.is_unit():
                return self.scaled(e.inverse())
        return self


def make(a, b, c, d, kind: Kind | None = None) -> MoebiusMatrix:
    """Build a matrix; plain ints/Fractions are promoted to ``kind``."""
    if kind is None:
        kinds = {e.kind for e in (a, b, c, d) if isinstance(e, HyperNumber)}
        if len(kinds) != 1:
            raise KindMismatch("cannot infer a single algebra; pass kind=")
        kind = kinds.pop()
    return MoebiusMatrix(*(coerce(e, kind) for e in (a, b, c, d)))


def identity(kind: Kind) -> MoebiusMatrix:
    return make(1, 0, 0, 1, kind=kind)


def apply(A: MoebiusMatrix, p: ProjPoint) -> ProjPoint:
    if A.kind is not p.kind:
        raise KindMismatch("matrix and point from different algebras")
    x, y = p.pair
    return ProjPoint(A.a * x + A.b * y, A.c * x + A.d * y)


def inverse(A: MoebiusMatrix) -> MoebiusMatrix:
    return A.inverse()


def pgl_equal(A: MoebiusMatrix, B: MoebiusMatrix) -> bool:
    if A.kind is not B.kind:
        raise KindMismatch("matrices from different algebras")
    return unit_multiple(A.entries, B.entries)


def to_zero_one_inf(z1: ProjPoint, z2: ProjPoint, z3: ProjPoint) -> MoebiusMatrix:
    """The matrix sending z1, z2, z3 to 0, 1, infinity.

    Entries are the explicit polynomial ones; its determinant is
    ``(x2 y1 - x1 y2)(x1 y3 - x3 y1)(x2 y3 - x3 y2)``.
    """
    if not pairwise_essentially_distinct([z1, z2, z3]):
        raise NotEssentiallyDistinct("the three points must be pairwise essentially distinct")
    return MoebiusMatrix.from_rows(zero_one_inf_rows(z1, z2, z3))


def zero_one_inf_rows(z1: ProjPoint, z2: ProjPoint, z3: ProjPoint):
    """Rows of the same matrix without any checks (it may be singular)."""
    (x1, y1), (x2, y2), (x3, y3) = z1.pair, z2.pair, z3.pair
    d23 = x2 * y3 - x3 * y2
    d21 = x2 * y1 - x1 * y2
    return ((d23 * y1, -d23 * x1), (d21 * y3, -d21 * x3))


def three_point_map(z1, z2, z3, w1, w2, w3) -> MoebiusMatrix:
    """The unique PGL2 class sending each z_i to w_i."""
    A = to_zero_one_inf(z1, z2, z3)
    B = to_zero_one_inf(w1, w2, w3).inverse()
    return B @ A
