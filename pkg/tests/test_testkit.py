import random

import pytest

from hyperproj.cross_ratio import cross_ratio
from hyperproj.cycles import (
    CycleMatrix, imaginary_axis, is_cycle_orthogonal, is_projective_orthogonal, on_cycle,
    real_line, unit_circle,
)
from hyperproj.errors import Exhausted, NotProjectable, PreconditionError
from hyperproj.hypercomplex import COMPLEX, DOUBLE, DUAL
from hyperproj.projective import embed, infinity, pairwise_essentially_distinct
from hyperproj.testkit import (
    KINDS, OnCycle, SampleConfig, cycle_intersections, enumerate_s4_check, gen_points,
    oracle_cross_ratio, orthogonality_witness, s4_report,
)


@pytest.mark.parametrize("kind", KINDS)
def test_pairwise_essentially_distinct(kind):
    pts = gen_points(SampleConfig(count=8, seed=3), kind, "pairwise_essentially_distinct")
    assert len(pts) == 8 and pairwise_essentially_distinct(pts)


@pytest.mark.parametrize("kind", KINDS)
def test_on_real_line(kind):
    pts = gen_points(SampleConfig(count=30, seed=1), kind, OnCycle(real_line(kind)))
    assert all(p.y == 1 and p.x.im == 0 for p in pts)


@pytest.mark.parametrize("kind", [COMPLEX, DOUBLE])
def test_on_unit_circle(kind):
    C = unit_circle(kind)
    assert all(on_cycle(p, C) for p in gen_points(SampleConfig(count=30), kind, OnCycle(C)))


def test_determinism():
    cfg = SampleConfig(count=20, seed=11)
    for kind in KINDS:
        assert [p.pair for p in gen_points(cfg, kind)] == [p.pair for p in gen_points(cfg, kind)]
    assert gen_points(cfg, COMPLEX) != gen_points(SampleConfig(count=20, seed=12), COMPLEX)


def test_exhausted():
    with pytest.raises(Exhausted):
        # at most three points of the dual line are pairwise essentially distinct over ±1
        gen_points(SampleConfig(count=40, coefficient_bound=1, max_draws=5),
                   DUAL, "pairwise_essentially_distinct")
    with pytest.raises(Exhausted):
        # k |z|^2 + m = 0 with k = m = 1 has no points in the complex numbers
        gen_points(SampleConfig(count=1, max_draws=20), COMPLEX,
                   OnCycle(CycleMatrix(1, 1, COMPLEX.zero)))


def test_unknown_constraint():
    with pytest.raises(ValueError):
        gen_points(SampleConfig(), COMPLEX, "nope")


def test_oracle_examples():
    pts = [embed(COMPLEX.number(n)) for n in range(4)]
    assert oracle_cross_ratio(*pts) == embed(COMPLEX.number(4))
    with pytest.raises(NotProjectable):
        oracle_cross_ratio(*pts[:3], infinity(COMPLEX))


@pytest.mark.parametrize("kind, n", [(COMPLEX, 1000), (DUAL, 300), (DOUBLE, 300)])
def test_oracle_agreement(kind, n):
    pts = gen_points(SampleConfig(count=4 * n, seed=5), kind)
    checked = 0
    for q in zip(*[iter(pts)] * 4):
        try:
            expected = oracle_cross_ratio(*q)
        except PreconditionError:
            continue
        if len(set(q)) < 4:
            continue
        assert cross_ratio(*q).value == expected
        checked += 1
    assert checked > n // 4


def test_s4():
    assert enumerate_s4_check()
    r = s4_report(COMPLEX)
    assert r.pairs_checked == 576 and r.image_size == 6 and len(r.kernel) == 4




def test_cycle_intersections():
    R, U = real_line(COMPLEX), unit_circle(COMPLEX)
    assert sorted(p.x.re for p in cycle_intersections(R, U)) == [-1, 1]
    I = imaginary_axis(COMPLEX)
    assert set(cycle_intersections(R, I)) == {embed(COMPLEX.zero), infinity(COMPLEX)}
    # x^2 + y^2 = 2 meets the real line at ±sqrt 2: nothing rational
    assert cycle_intersections(R, CycleMatrix(1, -2, COMPLEX.zero)) == []
    H = unit_circle(DOUBLE)
    assert sorted(p.x.re for p in cycle_intersections(real_line(DOUBLE), H)) == [-1, 1]


@pytest.mark.parametrize("kind", [COMPLEX, DOUBLE])
def test_orthogonality_witness_search(kind):
    rng = random.Random(2)
    R = real_line(kind)
    slanted = CycleMatrix(0, 0, kind.number(1, 2))  # the line through 0 at an angle
    for C2, expected in [(imaginary_axis(kind), True), (unit_circle(kind), True), (slanted, False)]:
        witness = orthogonality_witness(rng, R, C2)
        assert is_projective_orthogonal(R, C2, *witness) is expected
        assert is_cycle_orthogonal(R, C2) is expected
