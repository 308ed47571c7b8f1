#!/usr/bin/env python3
"""Hunt for curves whose regularity exceeds their reduction number.

Sweeps the full three-run range [0,a] u [b,c] u [e,d] admissible for the
four-term maximum formula (e <= 2b and 2c <= a+d) up to --max-degree and
reports every curve with reg != r_Q. Exits 0 whether or not any are
found; the point is the report.

Example:
    python3 scripts/gap_hunt.py --max-degree 50
"""

import argparse
import json
import sys

from redreg.cli import regularity_gap_campaign


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=50)
    parser.add_argument("--out", type=str, default=None, help="default stdout")
    args = parser.parse_args()
    if args.max_degree < 5:
        parser.error("--max-degree must be at least 5")

    checked, gaps = regularity_gap_campaign(args.max_degree)
    report = {
        "max_degree": args.max_degree,
        "curves_checked": checked,
        "gap_count": len(gaps),
        "gaps": gaps,
    }
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as out:
            out.write(text)
    else:
        sys.stdout.write(text)
    print(
        f"checked {checked} curves, found {len(gaps)} with reg != rq",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
