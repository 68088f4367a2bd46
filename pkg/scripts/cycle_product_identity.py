"""Compare two candidate transformation rules for the cycle product.

For random A, C, C' this counts how often

    <C, C'> == det(A)^2 <conj(A)^T C A, conj(A)^T C' A>          (det squared)
    <conj(A)^T C A, conj(A)^T C' A> == |det A|^2 <C, C'>          (modulus)

hold exactly.  The second follows from A J A^T = det(A) J.
"""

import argparse
import random

from hyperproj.cycles import cycle_product, pullback
from hyperproj.testkit import KINDS, random_cycle, random_matrix


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--bound", type=int, default=6)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'algebra':<8} {'det^2 rule':>10} {'|det|^2 rule':>10} {'det(A)^2 real':>14}")
    for kind in KINDS:
        det_sq = modulus = real_sq = 0
        for _ in range(args.samples):
            A = random_matrix(rng, kind, args.bound)
            C1, C2 = random_cycle(rng, kind, args.bound), random_cycle(rng, kind, args.bound)
            before = cycle_product(C1, C2)
            after = cycle_product(pullback(A, C1), pullback(A, C2))
            det = A.det()
            det_sq += before == det * det * after
            modulus += after == det.modulus_sq() * before
            real_sq += (det * det).im == 0
        n = args.samples
        print(f"{kind.algebra:<8} {det_sq:>5}/{n:<4} {modulus:>7}/{n:<4} {real_sq:>8}/{n}")


if __name__ == "__main__":
    main()
