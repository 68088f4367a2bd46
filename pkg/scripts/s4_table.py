"""Print the matrix F_rho for every permutation of four points.

    python scripts/s4_table.py [--algebra complex|dual|double]
"""

import argparse

from hyperproj.cross_ratio import GAMMA_ROWS, all_perms, f_rho, gamma
from hyperproj.hypercomplex import Kind
from hyperproj.moebius import pgl_equal
from hyperproj.testkit import s4_report


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--algebra", default="complex", choices=["complex", "dual", "double"])
    kind = Kind.from_name(parser.parse_args().algebra)

    names = [str(rows) for rows in GAMMA_ROWS]
    print(f"{'rho':<14} {'images':<14} F_rho")
    for rho in sorted(all_perms(), key=lambda p: (len(str(p)), str(p))):
        F = f_rho(rho, kind)
        index = next(n for n, g in enumerate(gamma(kind)) if pgl_equal(F, g))
        print(f"{str(rho):<14} {str(rho.images):<14} {names[index]}")

    report = s4_report(kind)
    print()
    print(f"pairs checked:  {report.pairs_checked}")
    print(f"homomorphism:   {report.homomorphism}")
    print(f"image size:     {report.image_size}")
    print(f"kernel:         {', '.join(report.kernel)}")


if __name__ == "__main__":
    main()
