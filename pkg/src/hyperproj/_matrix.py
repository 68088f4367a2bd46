"""Bare 2x2 matrices over one algebra, as nested tuples ``((a, b), (c, d))``.

Cycle matrices are not invertible in general, so the arithmetic lives
here rather than on :class:`~hyperproj.moebius.MoebiusMatrix`.
"""

from __future__ import annotations

from .hypercomplex import HyperNumber

Mat = tuple[tuple[HyperNumber, HyperNumber], tuple[HyperNumber, HyperNumber]]


def mat(a, b, c, d) -> Mat:
    return ((a, b), (c, d))


def mul(p: Mat, q: Mat) -> Mat:
    (a, b), (c, d) = p
    (e, f), (g, h) = q
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def chain(*ms: Mat) -> Mat:
    out = ms[0]
    for m in ms[1:]:
        out = mul(out, m)
    return out


def det(m: Mat) -> HyperNumber:
    (a, b), (c, d) = m
    return a * d - b * c


def trace(m: Mat) -> HyperNumber:
    return m[0][0] + m[1][1]


def adjugate(m: Mat) -> Mat:
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))


def conj(m: Mat) -> Mat:
    return tuple(tuple(e.conjugate() for e in row) for row in m)


def transpose(m: Mat) -> Mat:
    (a, b), (c, d) = m
    return ((a, c), (b, d))


def scale(lam, m: Mat) -> Mat:
    return tuple(tuple(lam * e for e in row) for row in m)


def entries(m: Mat) -> tuple[HyperNumber, ...]:
    return (*m[0], *m[1])


def constant(kind, rows) -> Mat:
    """Integer matrix promoted into ``kind``."""
    (a, b), (c, d) = rows
    return mat(kind.number(a), kind.number(b), kind.number(c), kind.number(d))
