#!/usr/bin/env python3
"""Print the five-case fiber-removal table for one parameter, then scan the
whole family for parameters where the disk-base degree equations have
solutions.

Example:
    python3 scripts/case_table.py --n 1 --dmax 1000
"""

import argparse
import sys
from fractions import Fraction

from prismvol import (
    AffineRatio,
    bounded_diophantine,
    fiber_surface,
    frac_str,
    prism_case_analysis,
)


def print_case_table(n: int) -> None:
    fiber = fiber_surface()
    print(f"five-case analysis for n = {n} (fiber: genus 2, one boundary circle)")
    header = f"{'case':>4}  {'base orbifold':<40}  {'chi_orb':>8}  {'degrees':<10}  chi-only"
    print(header)
    for r in prism_case_analysis(n, fiber):
        b = r.orbifold
        kind = "orientable" if b.orientable else "non-orientable"
        cones = ",".join(map(str, b.cones)) if b.cones else "-"
        base = f"{kind} g={b.genus} b={b.boundary} cones {cones}"
        degrees = ",".join(map(str, r.degrees)) or "-"
        chi_only = ",".join(map(str, r.chi_only_degrees)) or "-"
        print(f"{r.case:>4}  {base:<40}  {frac_str(r.chi_orb):>8}  {degrees:<10}  {chi_only}")


def scan_family(dmax: int) -> None:
    in_family = lambda n: abs(4 * n - 1) >= 3
    branches = [
        ("three-cone disk, positive branch", AffineRatio(2, -3, 4, -12)),
        ("three-cone disk, negative branch", AffineRatio(0, -3, 4, -12)),
        ("two-cone disk, positive branch", AffineRatio(3, -6, 4, -24)),
        ("two-cone disk, negative branch", AffineRatio(Fraction(-1), -6, 4, -24)),
    ]
    print(f"\nfamily scan over degrees d in [1, {dmax}] (chi equation only):")
    for label, ratio in branches:
        hits = bounded_diophantine(ratio, range(1, dmax + 1), value_filter=in_family)
        shown = ", ".join(f"(d={d}, n={n})" for d, n in hits) if hits else "no solutions"
        print(f"  {label:<34} {shown}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1, help="family parameter")
    parser.add_argument("--dmax", type=int, default=1000, help="degree scan bound")
    args = parser.parse_args(argv)
    print_case_table(args.n)
    scan_family(args.dmax)
    return 0


if __name__ == "__main__":
    sys.exit(main())
