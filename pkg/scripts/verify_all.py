"""Run the degree-by-degree restriction check on every shipped pair.

    python3 scripts/verify_all.py --max-degree 6
"""

import argparse
import json
import sys
from dataclasses import replace

from superchevalley.config import SHIPPED, CheckConfig
from superchevalley.invariants import verify_chevalley
from superchevalley.sympair import build_family


def main() -> int:
    cfg = CheckConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=cfg.max_degree)
    ap.add_argument("--json", action="store_true", help="print full reports instead of a table")
    args = ap.parse_args()
    cfg = replace(cfg, max_degree=args.max_degree)

    reports = []
    for spec in SHIPPED:
        rep = verify_chevalley(build_family(spec.family, spec.params), cfg.max_degree)
        reports.append(rep)
        if not args.json:
            dims = " ".join(str(r.dim_restriction_image) for r in rep.degrees)
            print(f"{spec.tag:28s} {'ok' if rep.ok else 'MISMATCH':9s} image dims: {dims}")
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
