import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperproj import cycles as cy
from hyperproj.cross_ratio import cross_ratio
from hyperproj.errors import (
    DegenerateCycle, NotEssentiallyDistinct, UnsupportedAlgebra, WitnessInvalid,
)
from hyperproj.hypercomplex import COMPLEX, DOUBLE, DUAL
from hyperproj.moebius import apply, identity, make
from hyperproj.projective import (
    embed, essentially_distinct, infinity, one, pairwise_essentially_distinct, zero,
)
from hyperproj.testkit import points_on_cycle

from .strategies import cycles, kinds, matrices, nonzero_rationals, points, units

i, e, j = COMPLEX.unit, DUAL.unit, DOUBLE.unit


def triples(kind):
    return st.tuples(points(kind), points(kind), points(kind)).filter(pairwise_essentially_distinct)


def test_degenerate_cycle_rejected():
    with pytest.raises(DegenerateCycle):
        cy.CycleMatrix(0, 0, COMPLEX.zero)


def test_on_cycle_examples():
    C = COMPLEX
    R, U = cy.real_line(C), cy.unit_circle(C)
    assert cy.on_cycle(embed(C.number(Fraction(7, 3))), R)
    assert not cy.on_cycle(embed(i), R)
    assert cy.on_cycle(infinity(C), R)
    assert not cy.on_cycle(infinity(C), U)
    assert cy.on_cycle(embed(i), U)
    assert not cy.on_cycle(embed(C.number(2)), U)
    assert cy.membership_form(embed(C.number(2)), U) == 3 * i


def test_cycle_through_examples():
    for K in (COMPLEX, DUAL, DOUBLE):
        a = K.number(Fraction(5, 2))
        C = cy.cycle_through(zero(K), embed(a), infinity(K))
        assert C.k == 0 and C.m == 0 and C.L.im == 0 and C.L != 0
        assert cy.same_cycle(C, cy.real_line(K))
    # a·ε is a zero divisor, so the imaginary-axis triple only exists off the dual numbers
    for K in (COMPLEX, DOUBLE):
        a = K.number(Fraction(5, 2))
        C = cy.cycle_through(zero(K), embed(a * K.unit), infinity(K))
        assert C.k == 0 and C.m == 0 and C.L.re == 0 and C.L != 0
        assert cy.same_cycle(C, cy.imaginary_axis(K))
    C = cy.cycle_through(one(COMPLEX), embed(i), embed(-COMPLEX.one))
    assert C.L == 0 and C.m == -C.k and C.k != 0
    with pytest.raises(NotEssentiallyDistinct):
        cy.cycle_through(one(DUAL), embed(1 + e), infinity(DUAL))


def test_concyclic_examples():
    C = COMPLEX
    U = cy.unit_circle(C)
    pts = [embed(z) for z in (C.one, i, -C.one, -i)]
    assert cy.concyclic(pts, U)
    assert not cy.concyclic(pts + [embed(C.number(2))], U)
    v = cross_ratio(*pts).value
    assert cy.on_cycle(v, cy.real_line(C))


def test_pullback_examples():
    C = COMPLEX
    R = cy.real_line(C)
    assert cy.pullback(identity(C), R) == R
    T = make(1, 1, 0, 1, kind=C)
    assert cy.pullback(T, R).matrix == R.matrix
    assert cy.pushforward(identity(C), R) == R
    assert cy.pushforward(T, R).matrix == R.matrix
    assert cy.on_cycle(apply(T, one(C)), cy.pushforward(T, R))


def test_cycle_product_examples():
    C = COMPLEX
    R, I, U = cy.real_line(C), cy.imaginary_axis(C), cy.unit_circle(C)
    assert cy.cycle_product(R, I) == 0
    assert cy.cycle_product(R, R) == -2
    assert cy.is_cycle_orthogonal(R, I)
    assert not cy.is_cycle_orthogonal(R, R)
    assert cy.is_cycle_orthogonal(U, R)
    with pytest.raises(UnsupportedAlgebra):
        cy.is_cycle_orthogonal(cy.real_line(DUAL), cy.imaginary_axis(DUAL))


def test_projective_orthogonal_examples():
    for K in (COMPLEX, DOUBLE):
        R, I = cy.real_line(K), cy.imaginary_axis(K)
        # 1 - j is a zero divisor, so the double witness uses 2j
        z3 = embed(K.unit if K is COMPLEX else 2 * K.unit)
        assert cy.is_projective_orthogonal(R, I, zero(K), one(K), z3, infinity(K))
        with pytest.raises(WitnessInvalid):
            cy.is_projective_orthogonal(R, I, zero(K), one(K), one(K), infinity(K))
    with pytest.raises(UnsupportedAlgebra):
        D = DUAL
        cy.is_projective_orthogonal(cy.real_line(D), cy.imaginary_axis(D),
                                    zero(D), one(D), embed(e), infinity(D))


def test_det_identity_examples():
    assert cy.det_identity_check(zero(COMPLEX), one(COMPLEX), infinity(COMPLEX))
    assert cy.det_identity_check(embed(1 + i), embed(Fraction(1, 2) - 2 * i), embed(3 + 0 * i))
    assert cy.det_identity_check(embed(1 + 2 * j), embed(j / 3), embed(DOUBLE.number(5)))


def test_affine_equation_unit_circle():
    assert cy.affine_equation(cy.unit_circle(COMPLEX)) == (1, 1, 0, 0, -1)
    assert cy.affine_equation(cy.unit_circle(DOUBLE)) == (1, -1, 0, 0, -1)


@given(kinds.flatmap(lambda k: st.tuples(points(k), cycles(k), units(k), nonzero_rationals)))
def test_membership_scale_invariance(t):
    p, C, lam, r = t
    form = cy.membership_form(p, C)
    assert form.re == 0
    assert cy.on_cycle(p, C) == cy.on_cycle(p.scaled(lam), C) == cy.on_cycle(p, C.scaled(r))


@given(kinds.flatmap(triples))
def test_cycle_through_contains_points(zs):
    C = cy.cycle_through(*zs)
    assert cy.concyclic(zs, C)
    assert cy.det_identity_check(*zs)


@given(kinds.flatmap(lambda k: st.tuples(matrices(k), cycles(k), points(k))))
def test_pullback_and_pushforward_contracts(t):
    A, C, z = t
    assert cy.on_cycle(apply(A, z), C) == cy.on_cycle(z, cy.pullback(A, C))
    assert cy.on_cycle(z, C) == cy.on_cycle(apply(A, z), cy.pushforward(A, C))
    assert cy.pushforward(A, cy.pullback(A, C)) == C


@given(kinds.flatmap(lambda k: st.tuples(matrices(k), matrices(k), cycles(k))))
def test_pullback_composes(t):
    A, B, C = t
    assert cy.pullback(A @ B, C) == cy.pullback(B, cy.pullback(A, C))


@given(kinds.flatmap(lambda k: st.tuples(matrices(k), cycles(k), cycles(k))))
def test_cycle_product_transforms_by_det_modulus(t):
    A, C1, C2 = t
    lhs = cy.cycle_product(cy.pullback(A, C1), cy.pullback(A, C2))
    assert lhs == A.det().modulus_sq() * cy.cycle_product(C1, C2)


@given(kinds.flatmap(lambda k: st.tuples(cycles(k), cycles(k))))
def test_cycle_product_expanded(t):
    C1, C2 = t
    s = C1.kind.square
    expected = -2 * (C1.L * C2.L.conjugate()).re - s * (C1.m * C2.k + C1.k * C2.m)
    assert cy.cycle_product(C1, C2) == expected
    assert cy.cycle_product(C1, C2) == cy.cycle_product(C2, C1)


@pytest.mark.parametrize("kind", [COMPLEX, DUAL, DOUBLE])
def test_membership_via_conjugate_cross_ratio(kind):
    rng = random.Random(7)
    checked = 0
    while checked < 40:
        zs = [embed(kind.number(Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
                                Fraction(rng.randint(-5, 5), rng.randint(1, 3)))) for _ in range(3)]
        if not pairwise_essentially_distinct(zs):
            continue
        C = cy.cycle_through(*zs)
        on = points_on_cycle(rng, C, 1, anchor=zs[0])[0]
        off = embed(kind.number(rng.randint(-5, 5), rng.randint(-5, 5)))
        for z in (on, off):
            if not all(essentially_distinct(z, w) for w in zs):
                continue
            z1, z2, z4 = zs
            value = cross_ratio(z1, z2, z, z4).value
            assert cy.on_cycle(z, C) == (value == value.conjugate())
            checked += 1
