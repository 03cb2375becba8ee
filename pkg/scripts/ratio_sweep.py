#!/usr/bin/env python3
"""Sweep the approximation ratio of the tight families across covering radii.

Runs the range-dispatched approximation against the exact oracle on the
triangle-hub families and subdivided stars, then prints a per-regime table
of worst empirical ratios next to the claimed factors.

Usage: python scripts/ratio_sweep.py [--kmax 6] [--budget-secs 10] [--csv out.csv]
"""

import argparse
import sys
from fractions import Fraction

from deltacover.bench import run_row, summarize, write_csv
from deltacover.families import gen_star_subdivision, gen_triangles_center, gen_triangles_paths
from deltacover.io import format_rational
from deltacover.solver import Budget

DELTAS = ["2/5", "4/7", "3/5", "2/3", "5/7", "3/4", "4/5", "1", "9/8", "7/6", "5/4", "4/3", "3/2"]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=6)
    ap.add_argument("--budget-secs", type=float, default=10.0)
    ap.add_argument("--csv", default="ratio_sweep.csv")
    args = ap.parse_args()

    budget = Budget(max_seconds=args.budget_secs)
    instances = []
    for k in range(3, args.kmax + 1):
        instances.append((f"hub_k{k}", "triangles_center", gen_triangles_center(k).graph))
    instances.append(("paths_k3", "triangles_paths",
                      gen_triangles_paths(3, "per_vertex").graph))
    instances.append(("connector_k3", "triangles_paths",
                      gen_triangles_paths(3, "per_triangle").graph))
    for x, k in ((2, 3), (3, 3)):
        instances.append((f"star_x{x}_k{k}", "star_subdivision",
                          gen_star_subdivision(x, k).graph))

    rows = []
    for iid, family, g in instances:
        for d in DELTAS:
            delta = Fraction(d)
            row = run_row(iid, family, g, delta, budget)
            rows.append(row)
            ratio = "-" if row.ratio is None else format_rational(row.ratio)
            print(f"{iid:>14} n={row.n:<3} delta={d:<4} regime={row.regime:<15} "
                  f"size={row.cover_size:<3} oracle={row.oracle_size if row.oracle_optimal else '?':<3} "
                  f"ratio={ratio:<7} claimed={format_rational(row.claimed_factor)}")
    write_csv(args.csv, rows)
    print(f"\nwrote {args.csv}")
    print("\nper-regime summary:")
    for regime, agg in sorted(summarize(rows)["regimes"].items()):
        print(f"  {regime:<15} rows={agg['rows']:<4} max_ratio={agg['max_ratio']} "
              f"violations={agg['violations']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
