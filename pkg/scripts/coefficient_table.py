"""Print the coefficients b(s, l) and a(j, k), or dump them as JSON."""

import argparse
import json

from superchevalley.radial import CoeffTable


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=6)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    table = CoeffTable(args.size)
    if args.json:
        print(json.dumps(table.to_json(), indent=2))
        return
    b = table.b()
    print("b(s, l), one row per l")
    for l in range(1, args.size + 1):
        print(f"  l={l:2d}: " + " ".join(str(b[s, l]) for s in range(l)))
    a = table.a()
    print("a(j, k), j = 1..2k")
    for k in range(1, args.size + 1):
        print(f"  k={k:2d}: " + " ".join(str(a[j, k]) for j in range(1, 2 * k + 1)))


if __name__ == "__main__":
    main()
