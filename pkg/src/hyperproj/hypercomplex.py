"""Exact arithmetic in the three two-dimensional real unital algebras.

A :class:`HyperNumber` is ``re + im*u`` where the imaginary unit ``u``
squares to -1 (complex), 0 (dual) or +1 (double).  Coefficients are
:class:`fractions.Fraction`, so deciding whether a number is a zero
divisor is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import KindMismatch, NotUnit, WrongKind

Scalar = Union[int, Fraction]


class Kind(enum.Enum):
    ELLIPTIC = -1
    PARABOLIC = 0
    HYPERBOLIC = 1

    @property
    def square(self) -> int:
        """The value of the imaginary unit squared."""
        return self.value

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def algebra(self) -> str:
        return _NAMES[self]

    @classmethod
    def from_name(cls, name: str) -> "Kind":
        try:
            return _BY_NAME[name.lower()]
        except KeyError:
            raise ValueError(f"unknown algebra {name!r}") from None

    def number(self, re: Scalar = 0, im: Scalar = 0) -> "HyperNumber":
        return HyperNumber(self, re, im)

    @property
    def zero(self) -> "HyperNumber":
        return HyperNumber(self, 0, 0)

    @property
    def one(self) -> "HyperNumber":
        return HyperNumber(self, 1, 0)

    @property
    def unit(self) -> "HyperNumber":
        """The imaginary unit i, e or j."""
        return HyperNumber(self, 0, 1)


_SYMBOLS = {Kind.ELLIPTIC: "i", Kind.PARABOLIC: "e", Kind.HYPERBOLIC: "j"}
_NAMES = {Kind.ELLIPTIC: "complex", Kind.PARABOLIC: "dual", Kind.HYPERBOLIC: "double"}
_BY_NAME = {
    "complex": Kind.ELLIPTIC,
    "elliptic": Kind.ELLIPTIC,
    "dual": Kind.PARABOLIC,
    "parabolic": Kind.PARABOLIC,
    "double": Kind.HYPERBOLIC,
    "split": Kind.HYPERBOLIC,
    "hyperbolic": Kind.HYPERBOLIC,
}

COMPLEX = Kind.ELLIPTIC
DUAL = Kind.PARABOLIC
DOUBLE = Kind.HYPERBOLIC


class NumberClass(enum.Enum):
    ZERO = "zero"
    ZERO_DIVISOR = "zero_divisor"
    UNIT = "unit"


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True, eq=False)
class HyperNumber:
    kind: Kind
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def _raw(cls, kind: Kind, re: Fraction, im: Fraction) -> "HyperNumber":
        # internal constructor for values that are already Fractions
        z = object.__new__(cls)
        object.__setattr__(z, "kind", kind)
        object.__setattr__(z, "re", re)
        object.__setattr__(z, "im", im)
        return z

    def _coerce(self, other) -> "HyperNumber":
        if isinstance(other, HyperNumber):
            if other.kind is not self.kind:
                raise KindMismatch(f"{self.kind.algebra} vs {other.kind.algebra}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return HyperNumber(self.kind, other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HyperNumber._raw(self.kind, self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return HyperNumber._raw(self.kind, -self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return HyperNumber._raw(self.kind, self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        kind = self.kind
        if kind is Kind.ELLIPTIC:
            real = a * c - b * d
        elif kind is Kind.HYPERBOLIC:
            real = a * c + b * d
        else:
            real = a * c
        return HyperNumber._raw(kind, real, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __eq__(self, other):
        if isinstance(other, HyperNumber):
            return self.kind is other.kind and self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"HyperNumber({self.kind.algebra}, {self.re}, {self.im})"

    def __str__(self):
        from .literals import format_number

        return format_number(self)

    def conjugate(self) -> "HyperNumber":
        return HyperNumber._raw(self.kind, self.re, -self.im)

    def modulus_sq(self) -> Fraction:
        # z * conj(z) has no imaginary part
        return self.re * self.re - self.kind.square * self.im * self.im

    def classify(self) -> NumberClass:
        if not self:
            return NumberClass.ZERO
        if not self.is_unit():
            return NumberClass.ZERO_DIVISOR
        return NumberClass.UNIT

    def is_unit(self) -> bool:
        # same as modulus_sq() != 0, without the multiplications
        if self.kind is Kind.ELLIPTIC:
            return bool(self.re) or bool(self.im)
        if self.kind is Kind.PARABOLIC:
            return bool(self.re)
        return abs(self.re) != abs(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def inverse(self) -> "HyperNumber":
        n = self.modulus_sq()
        if n == 0:
            raise NotUnit(f"{self} is not a unit in the {self.kind.algebra} numbers")
        return HyperNumber(self.kind, self.re / n, -self.im / n)

    def split(self) -> tuple[Fraction, Fraction]:
        """Coordinates in the idempotent basis (1 + j)/2, (1 - j)/2."""
        if self.kind is not Kind.HYPERBOLIC:
            raise WrongKind("idempotent splitting needs double numbers")
        return self.re + self.im, self.re - self.im

    @classmethod
    def from_split(cls, plus: Scalar, minus: Scalar) -> "HyperNumber":
        plus, minus = _frac(plus), _frac(minus)
        return cls(Kind.HYPERBOLIC, (plus + minus) / 2, (plus - minus) / 2)


def coerce(value, kind: Kind) -> HyperNumber:
    """Promote an int/Fraction to ``kind``; check the kind of a HyperNumber."""
    if isinstance(value, HyperNumber):
        if value.kind is not kind:
            raise KindMismatch(f"{value.kind.algebra} vs {kind.algebra}")
        return value
    return HyperNumber(kind, _frac(value), 0)


def same_kind(*values: HyperNumber) -> Kind:
    kinds = {v.kind for v in values}
    if len(kinds) != 1:
        raise KindMismatch("operands from different algebras")
    return kinds.pop()


def add(a: HyperNumber, b: HyperNumber) -> HyperNumber:
    same_kind(a, b)
    return a + b


def mul(a: HyperNumber, b: HyperNumber) -> HyperNumber:
    same_kind(a, b)
    return a * b


def conj(z: HyperNumber) -> HyperNumber:
    return z.conjugate()


def modulus_sq(z: HyperNumber) -> Fraction:
    return z.modulus_sq()


def classify(z: HyperNumber) -> NumberClass:
    return z.classify()


def invert(z: HyperNumber) -> HyperNumber:
    return z.inverse()


def split_double(z: HyperNumber) -> tuple[Fraction, Fraction]:
    return z.split()
