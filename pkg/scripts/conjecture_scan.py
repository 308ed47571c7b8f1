#!/usr/bin/env python3
"""Scan the extrapolation regime of the middle-run family.

For shapes {0} u [a,b] u {d} the proved formulas stop at extrapolation
index r = ceil((a-1)/(b-a)) <= 2. This script sweeps every pair with
r >= --min-r, compares the extrapolated value ceil((r*a+d-1)/b) against
the computed reduction number, and writes one row per pair.

Example:
    python3 scripts/conjecture_scan.py --max-degree 60 --out rows.csv
"""

import argparse
import csv
import json
import sys

from redreg.cli import conjecture_campaign

FIELDS = ["d", "a", "b", "r", "conjecture", "rq_oracle", "agrees"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=60)
    parser.add_argument("--min-r", type=int, default=3)
    parser.add_argument("--out", type=str, default=None, help="default stdout")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    args = parser.parse_args()
    if args.max_degree < 4:
        parser.error("--max-degree must be at least 4")

    rows = conjecture_campaign(args.max_degree, min_r=args.min_r)
    agree = sum(1 for r in rows if r["agrees"])
    summary = {
        "rows": len(rows),
        "agreements": agree,
        "disagreements": len(rows) - agree,
        "max_degree": args.max_degree,
        "min_r": args.min_r,
    }

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.DictWriter(out, fieldnames=FIELDS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        else:
            for row in rows:
                out.write(json.dumps(row) + "\n")
    finally:
        if args.out:
            out.close()
    print(json.dumps(summary), file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
