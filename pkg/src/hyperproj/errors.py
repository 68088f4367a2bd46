"""Exception hierarchy.

Every domain error derives from :class:`GeometryError`.  Violated
preconditions (non-units, degenerate configurations, ...) derive from
:class:`PreconditionError`; the CLI maps those to exit code 3.
"""


class GeometryError(Exception):
    pass


class KindMismatch(GeometryError, TypeError):
    """Operands belong to different hypercomplex algebras."""


class WrongKind(GeometryError, TypeError):
    """Operation is only defined for a particular algebra."""


class PreconditionError(GeometryError, ValueError):
    pass


class NotUnit(PreconditionError, ZeroDivisionError):
    """Inversion of zero or of a zero divisor."""


class NotProjectable(PreconditionError):
    pass


class DegenerateModulus(PreconditionError):
    pass


class NonUnitDeterminant(PreconditionError):
    pass


class NotDistinct(PreconditionError):
    pass


class NotEssentiallyDistinct(PreconditionError):
    pass


class DegeneratePair(PreconditionError):
    """The cross-ratio formula produced the pair (0, 0)."""


class NotInvertibleDenominator(PreconditionError):
    pass


class SingularValue(PreconditionError):
    pass


class UnsupportedAlgebra(PreconditionError):
    pass


class WitnessInvalid(PreconditionError):
    pass


class DegenerateCycle(PreconditionError):
    pass


class DistanceUndefined(PreconditionError):
    pass


class NotInUpperHalfPlane(PreconditionError):
    pass


class Exhausted(GeometryError, RuntimeError):
    """Rejection sampling gave up."""
