import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from hyperproj import lobachevsky as lo
from hyperproj.cross_ratio import cross_pair
from hyperproj.errors import DistanceUndefined, NotEssentiallyDistinct, NotInUpperHalfPlane
from hyperproj.hypercomplex import COMPLEX, DOUBLE, DUAL
from hyperproj.moebius import apply
from hyperproj.projective import ProjPoint, embed, essentially_distinct

from .strategies import kinds, matrices, points, upper_half_plane

i, e, j = COMPLEX.unit, DUAL.unit, DOUBLE.unit


def defined(z, w):
    return essentially_distinct(z, w) and essentially_distinct(z, w.conjugate())


def test_d_proj_examples():
    assert lo.d_proj(embed(i), embed(2 * i)) == Fraction(1, 9)
    assert lo.d_proj(embed(i), embed(1 + i)) == Fraction(1, 5)
    assert lo.d_proj(embed(2 * i), embed(i)) == Fraction(1, 9)
    with pytest.raises(NotEssentiallyDistinct):
        lo.d_proj(embed(i), embed(i))
    with pytest.raises(NotEssentiallyDistinct):
        lo.d_proj(embed(i), embed(-i))


def test_delta_examples():
    assert math.isclose(lo.delta(embed(i), embed(2 * i)), math.log(2), rel_tol=1e-12)
    assert lo.delta_from_d(Fraction(0)) == 0
    expected = math.log((math.sqrt(5) + 1) / (math.sqrt(5) - 1))
    assert math.isclose(lo.delta(embed(i), embed(1 + i)), expected, rel_tol=1e-12)
    assert math.isclose(expected, 0.962424, abs_tol=1e-6)
    with pytest.raises(DistanceUndefined):
        lo.delta_from_d(Fraction(1))
    with pytest.raises(DistanceUndefined):
        lo.delta_from_d(Fraction(-1, 2))


@pytest.mark.parametrize("d, forms", [
    (Fraction(0), (1, 0, 0)),
    (Fraction(1, 9), (Fraction(9, 8), Fraction(1, 8), Fraction(1, 9))),
    (Fraction(1, 5), (Fraction(5, 4), Fraction(1, 4), Fraction(1, 5))),
])
def test_hyperbolic_forms_examples(d, forms):
    got = lo.hyperbolic_forms(d)
    assert (got.cosh_sq, got.sinh_sq, got.tanh_sq) == tuple(float(f) for f in forms)


def test_rho_classical_examples():
    assert math.isclose(lo.rho_classical(i, 2 * i), math.log(2), rel_tol=1e-12)
    assert lo.rho_classical(i, i) == 0
    assert math.isclose(lo.rho_classical(i, 1 + i), lo.delta(embed(i), embed(1 + i)), rel_tol=1e-12)
    with pytest.raises(NotInUpperHalfPlane):
        lo.rho_classical(-i, i)
    with pytest.raises(NotInUpperHalfPlane):
        lo.rho_classical(j, j)


def test_double_distance_may_be_undefined():
    dist = lo.distance(embed(j), embed(2 * j))
    assert dist.d == lo.d_proj(embed(j), embed(2 * j))
    assert (dist.delta is None) == (not 0 <= dist.d < 1)


@given(kinds.flatmap(lambda k: st.tuples(points(k), points(k))))
def test_symmetry_and_conjugation_identities(t):
    z, w = t
    assume(defined(z, w))
    d = lo.d_proj(z, w)
    assert isinstance(d, Fraction)
    assert lo.d_proj(w, z) == d
    assert lo.d_proj(z.conjugate(), w.conjugate()) == d
    assume(d != 0 and defined(z.conjugate(), w))
    assert lo.d_proj(z.conjugate(), w) == 1 / d


@given(kinds.flatmap(lambda k: st.tuples(points(k), points(k))))
def test_reality_from_klein_permutation(t):
    z, w = t
    assume(defined(z, w))
    zb, wb = z.conjugate(), w.conjugate()
    # z may be real (z = conj z), so compare the raw pairs rather than the checked cross-ratio
    assert ProjPoint(*cross_pair(wb, z, zb, w)) == ProjPoint(*cross_pair(w, zb, z, wb))


@given(kinds.flatmap(lambda k: st.tuples(points(k), points(k), matrices(k, real=True))))
def test_real_matrix_invariance(t):
    z, w, A = t
    assume(defined(z, w))
    assert lo.d_proj(apply(A, z), apply(A, w)) == lo.d_proj(z, w)


@given(upper_half_plane(), upper_half_plane())
def test_agrees_with_classical(z, w):
    assume(z != w)
    d = lo.d_proj(embed(z), embed(w))
    assert 0 < d < 1
    assert math.isclose(lo.delta_from_d(d), lo.rho_classical(z, w), rel_tol=1e-9)
    ours, classical = lo.hyperbolic_forms(d), lo.classical_forms(z, w)
    for a, b in zip((ours.cosh_sq, ours.sinh_sq, ours.tanh_sq),
                    (classical.cosh_sq, classical.sinh_sq, classical.tanh_sq)):
        assert math.isclose(a, b, rel_tol=1e-12)


@given(st.fractions(min_value=0, max_value=Fraction(99, 100), max_denominator=1000))
def test_form_identities(d):
    f = lo.hyperbolic_forms(d)
    assert abs(f.cosh_sq - f.sinh_sq - 1) < 1e-12
    assert math.isclose(f.tanh_sq, f.sinh_sq / f.cosh_sq, rel_tol=1e-12, abs_tol=1e-15)
    assert math.isclose(math.tanh(lo.delta_from_d(d) / 2) ** 2, float(d), rel_tol=1e-12, abs_tol=1e-15)


