"""Even-type verdicts for the block families over a parameter grid.

Compares each verdict with the sign rule (p-q)(r-s) >= 0 and prints the
cells where they disagree.
"""

import argparse
import sys
from itertools import product

from superchevalley.sympair import build_gl_block, build_osp_block, validate_cartan


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=4, help="each parameter runs over 0..size-1")
    args = ap.parse_args()

    rows, bad = 0, []
    for p, q, r, s in product(range(args.size), repeat=4):
        if p + q + r + s == 0:
            continue
        expect = (p - q) * (r - s) >= 0
        families = [("gl-block", build_gl_block)]
        if r % 2 == 0 and s % 2 == 0:
            families.append(("osp-block", build_osp_block))
        for name, build in families:
            rows += 1
            got = validate_cartan(build(p, q, r, s)).is_even_type
            if got != expect:
                bad.append(f"{name}({p},{q},{r},{s}): got {got}, sign rule says {expect}")
    print(f"{rows} pairs checked, {len(bad)} disagreements")
    for line in bad:
        print("  " + line)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
