"""Projective tanh-distance against the classical upper half-plane distance.

Samples complex pairs in the upper half-plane and reports the largest
relative gap between delta from the exact tanh-distance and the
logarithmic formula, and between the cosh^2/sinh^2/tanh^2 forms.
"""

import argparse
import math
import random
from fractions import Fraction

from hyperproj import lobachevsky as lo
from hyperproj.hypercomplex import COMPLEX
from hyperproj.projective import embed


def upper(rng, bound):
    return COMPLEX.number(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                          Fraction(rng.randint(1, 4 * bound), rng.randint(1, bound)))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--bound", type=int, default=6)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    worst_delta = worst_forms = 0.0
    done = 0
    while done < args.samples:
        z, w = upper(rng, args.bound), upper(rng, args.bound)
        if z == w:
            continue
        d = lo.d_proj(embed(z), embed(w))
        rho = lo.rho_classical(z, w)
        worst_delta = max(worst_delta, abs(lo.delta_from_d(d) - rho) / rho)
        ours, theirs = lo.hyperbolic_forms(d), lo.classical_forms(z, w)
        for a, b in zip((ours.cosh_sq, ours.sinh_sq, ours.tanh_sq),
                        (theirs.cosh_sq, theirs.sinh_sq, theirs.tanh_sq)):
            worst_forms = max(worst_forms, abs(a - b) / abs(b))
        done += 1
    print(f"pairs:                    {done}")
    print(f"max rel. gap delta/rho:   {worst_delta:.3e}")
    print(f"max rel. gap in forms:    {worst_forms:.3e}")
    i = COMPLEX.unit
    d = lo.d_proj(embed(i), embed(2 * i))
    print(f"d(i, 2i) = {d}, delta = {lo.delta_from_d(d):.12f}, ln 2 = {math.log(2):.12f}")


if __name__ == "__main__":
    main()
