#!/usr/bin/env python3
"""Audit a window of the prism family and summarize the verdicts.

Example:
    python3 scripts/verify_family.py --from -5 --to 25
"""

import argparse
import sys

from prismvol import prism_verify, upper_bound_value


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="n_from", type=int, default=-5)
    parser.add_argument("--to", dest="n_to", type=int, default=25)
    args = parser.parse_args(argv)

    result = prism_verify(args.n_from, args.n_to)
    reports = result["reports"]
    by_status: dict[str, list[int]] = {}
    for row in reports:
        by_status.setdefault(row["status"], []).append(row["n"])

    print(f"parameters audited: {len(reports)} (n from {args.n_from} to {args.n_to})")
    print(f"upper bound per parameter: 2*V0 = {upper_bound_value():.12f}")
    for status in ("conditional", "candidate-exceptional", "excluded"):
        values = by_status.get(status, [])
        shown = ", ".join(map(str, values)) if values else "none"
        print(f"  {status:<22} {len(values):>4}  {shown}")

    for n in result["candidate_exceptional"]:
        row = next(r for r in reports if r["n"] == n)
        degrees = sorted(
            d for case in row["case_analysis"]["cases"] for d in case["degrees"]
        )
        print(f"candidate n = {n}: horizontal fiber degrees {degrees}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
