"""Command-line front end.  Every invocation prints exactly one JSON document.

Exit codes: 0 success, 2 usage error, 3 unusable pair (not of even type or
malformed), 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .invariants import invariants_degree, pair_tag, restriction_image_degree, verify_chevalley
from .radial import (
    IndexOutOfRange,
    RadialError,
    as_cartan_poly,
    bessel_theta,
    coeff_a,
    coeff_b,
    gamma_h,
    odd_monomial,
    radial_closed_form,
)
from .roots import ODD, RootError, restricted_roots, super_regular_points, weyl_group
from .superlie import SuperLieError
from .superpoly import adapted_basis, restrict_to_a
from .sympair import FAMILIES, PairError, SymmetricSuperpair, build_family, validate_cartan

EXIT_OK, EXIT_USAGE, EXIT_PAIR, EXIT_MISMATCH = 0, 2, 3, 4


class UsageError(Exception):
    pass


class BadPair(Exception):
    pass


def emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def parse_params(items) -> dict:
    params = {}
    for item in items or []:
        for tok in item.split(","):
            tok = tok.strip()
            if not tok:
                continue
            if "=" not in tok:
                raise UsageError(f"parameter {tok!r} is not of the form k=v")
            k, v = tok.split("=", 1)
            try:
                params[k.strip()] = int(v)
            except ValueError:
                raise UsageError(f"parameter {k} must be an integer") from None
    return params


def load_pair(path: str) -> SymmetricSuperpair:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return SymmetricSuperpair.from_json(data)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise BadPair(f"cannot read pair from {path}: {exc}") from None


def require_even_type(pair: SymmetricSuperpair) -> None:
    report = validate_cartan(pair)
    if not report.is_even_type:
        failed = [k for k, v in report.checks.items() if not v]
        raise BadPair(f"pair {pair_tag(pair)} is not of even type (failed: {', '.join(failed)})")


def parse_weight(text: str) -> tuple:
    try:
        return tuple(Fraction(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad weight {text!r}") from None


# --- verbs ----------------------------------------------------------------------------


def cmd_build(args) -> int:
    try:
        pair = build_family(args.family, parse_params(args.params))
    except (PairError, SuperLieError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    report = validate_cartan(pair)
    if not report.is_even_type:
        warn(f"{pair_tag(pair)} is not even type")
    data = pair.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2)
            fh.write("\n")
        emit({"pair": pair_tag(pair), "dim": pair.alg.dim, "even_type": report.is_even_type, "out": args.out})
    else:
        emit(data)
    return EXIT_OK


def cmd_roots(args) -> int:
    pair = load_pair(args.pair)
    require_even_type(pair)
    rd = restricted_roots(pair)
    emit({"roots": [r.to_json() for r in rd.roots], "weyl_order": weyl_group(rd).order})
    return EXIT_OK


def cmd_invariants(args) -> int:
    pair = load_pair(args.pair)
    if args.degree < 0:
        raise UsageError("degree must be non-negative")
    require_even_type(pair)
    ab = adapted_basis(pair)
    inv = invariants_degree(pair, args.degree)
    image = restriction_image_degree(pair, args.degree, inv)
    emit(
        {
            "pair": pair_tag(pair),
            "degree": args.degree,
            "dim": inv.dim,
            "basis": [p.to_json() for p in inv.basis],
            "restrictions": [restrict_to_a(ab, p).to_json() for p in inv.basis],
            "dim_image": image.dim,
        }
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    pair = load_pair(args.pair)
    if args.max_degree < 0:
        raise UsageError("max degree must be non-negative")
    require_even_type(pair)
    report = verify_chevalley(pair, args.max_degree)
    emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_coeffs(args) -> int:
    try:
        if args.b is not None:
            emit(str(coeff_b(*args.b)))
        elif args.a is not None:
            emit(str(coeff_a(*args.a)))
        else:
            emit([str(c) for c in bessel_theta(args.bessel)])
    except IndexOutOfRange as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_radial(args) -> int:
    pair = load_pair(args.pair)
    require_even_type(pair)
    rd = restricted_roots(pair)
    weight = parse_weight(args.root)
    try:
        root = rd.find(weight, ODD)
        D = radial_closed_form(rd, root, args.k)
    except (RootError, RadialError) as exc:
        raise UsageError(str(exc)) from None
    ab = adapted_basis(pair, rd)
    checks = []
    idx = tuple(range(args.k))
    for h in super_regular_points(rd, args.seed_points):
        g = as_cartan_poly(ab, gamma_h(ab, odd_monomial(ab, root.weight, idx, idx), h))
        checks.append({"h": [str(x) for x in h], "agree": g == D.at(h)})
    emit({"operator": D.to_json(), "checks": checks, "ok": all(c["agree"] for c in checks)})
    return EXIT_OK if all(c["agree"] for c in checks) else EXIT_MISMATCH


# --- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superchevalley", description=__doc__.splitlines()[0])
    ap.add_argument("--seed-points", type=int, default=3, help="number of regular evaluation points for cross-checks")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="construct a symmetric superpair")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--params", nargs="*", default=[], help="k=v pairs, comma or space separated")
    p.add_argument("--out", help="write the pair JSON here instead of standard output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("roots", help="restricted root data of a pair")
    p.add_argument("pair")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("invariants", help="invariant polynomials of one degree")
    p.add_argument("pair")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="compare restriction image with the radial description")
    p.add_argument("pair")
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("coeffs", help="coefficient tables")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--b", nargs=2, type=int, metavar=("S", "L"))
    g.add_argument("--a", nargs=2, type=int, metavar=("J", "K"))
    g.add_argument("--bessel", type=int, metavar="N")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("radial", help="closed-form radial operator of an odd root")
    p.add_argument("pair")
    p.add_argument("--root", required=True, help="comma-separated weight, e.g. 1,-1")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_radial)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.seed_points < 1:
        print("error: --seed-points must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BadPair, RootError, PairError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PAIR


if __name__ == "__main__":
    sys.exit(main())
