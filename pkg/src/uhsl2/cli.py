"""Command-line front end.

Subcommands:
  star        evaluate an expression and print the element
  coeff       print one structural coefficient
  verify      closed formula vs rewrite oracle, exhaustive sweep
  species     labelled counts vs series coefficients for a functor pair
  identities  run the catalog of known identities

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from itertools import product

from . import algebra, rewrite, species
from .algebra import mono_star_mono, normal_order_zx, star
from .combinatorics import shifted_elem, vam3_lhs, vam3_rhs
from .expressions import EvalError, ParseError, contains_exp, evaluate, parse
from .serialize import element_to_json, pretty

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _exponents(text: str) -> tuple[int, int, int, int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4 or not all(p.isdigit() for p in parts):
        raise argparse.ArgumentTypeError(f"expected a,b,c,d naturals, got {text!r}")
    return tuple(int(p) for p in parts)


def _natural(text: str) -> int:
    if not text.strip().isdigit():
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return int(text)


def _functor(text: str) -> species.FunctorSpec:
    text = text.strip().lower()
    if text in ("x", "y", "z", "h"):
        return species.Singleton(text)
    if text.startswith("exp(") and text.endswith(")"):
        color = text[4:-1].strip()
        if color in ("x", "y", "z", "h"):
            return species.Exponential(color)
    if text.startswith("dp(") and text.endswith(")"):
        parts = text[3:-1].split(",")
        if len(parts) == 4 and all(p.strip().isdigit() for p in parts):
            return species.DividedPower(*(int(p) for p in parts))
    raise argparse.ArgumentTypeError(
        f"expected x|y|z|h, exp(<gen>) or dp(a,b,c,d), got {text!r}"
    )


def cmd_star(args) -> int:
    try:
        expression = parse(args.expr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.cap is None and contains_exp(expression):
        print("error: exp(...) requires --cap", file=sys.stderr)
        return EXIT_USAGE
    try:
        element = evaluate(expression, args.cap)
    except EvalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(element_to_json(element))
    else:
        print(pretty(element))
    return EXIT_OK


def cmd_coeff(args) -> int:
    print(algebra.structural_coefficient(args.left, args.right, args.out))
    return EXIT_OK


def cmd_verify(args) -> int:
    top = args.max_exp
    monos = list(product(range(top + 1), repeat=4))
    pairs = mismatches = violations = 0
    for m1 in monos:
        for m2 in monos:
            pairs += 1
            closed = mono_star_mono(m1, m2)
            oracle = rewrite.oracle_star(m1, m2)
            if closed != oracle:
                mismatches += 1
                print(f"MISMATCH {m1} * {m2}")
            for coeff in oracle.terms.values():
                if Fraction(coeff).denominator != 1:
                    violations += 1
                    print(f"NON-INTEGER coefficient in {m1} * {m2}: {coeff}")
    print(f"verified {pairs} monomial pairs with exponents <= {top}: "
          f"{mismatches} mismatches, {violations} integrality violations")
    return EXIT_OK if mismatches == 0 and violations == 0 else EXIT_MISMATCH


def cmd_species(args) -> int:
    report = species.species_coefficient_check(args.left, args.right, args.max_total)
    for miss in report.mismatches:
        print(f"MISMATCH at sizes {miss.sizes}: species {miss.species_count}, "
              f"series {miss.series_coefficient}")
    print(f"checked {report.checked} size tuples for {report.left} * {report.right} "
          f"(total <= {report.max_total}): {len(report.mismatches)} mismatches")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _identity_catalog():
    x, y, z, h = (algebra.Element.monomial(m) for m in
                  ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    xy_2xh = algebra.Element({(1, 1, 0, 0): 1, (1, 0, 0, 1): 2})
    xz_yh = algebra.Element({(1, 0, 1, 0): 1, (0, 1, 0, 1): -1})
    yz_2zh = algebra.Element({(0, 1, 1, 0): 1, (0, 0, 1, 1): 2})
    z_xx = algebra.Element({(2, 0, 1, 0): 1, (1, 1, 0, 1): -1, (1, 0, 0, 2): -2})
    five_term = algebra.Element({(2, 0, 2, 0): 1, (1, 1, 1, 1): -1, (1, 0, 1, 2): -4,
                                 (0, 2, 0, 2): 2, (0, 1, 0, 3): 3})

    def species_element(F, G, max_total):
        terms = {}
        for sizes in species.size_tuples(max_total):
            v = species.star_species(F, G, sizes)
            if v:
                terms[sizes] = v
        return algebra.Element(terms)

    yield "defining relation y*x = xy + 2xh", lambda: star(y, x) == xy_2xh
    yield "defining relation z*x = xz - yh", lambda: star(z, x) == xz_yh
    yield "defining relation z*y = yz + 2zh", lambda: star(z, y) == yz_2zh
    yield "worked example z * m(2,0,0,0), closed formula", \
        lambda: mono_star_mono((0, 0, 1, 0), (2, 0, 0, 0)) == z_xx
    yield "worked example z * m(2,0,0,0), rewrite oracle", \
        lambda: rewrite.oracle_star((0, 0, 1, 0), (2, 0, 0, 0)) == z_xx
    yield "worked example z * m(2,0,0,0), species counts", \
        lambda: species_element(species.Singleton("z"), species.DividedPower(2, 0, 0, 0), 3) == z_xx
    yield "five-term identity m(0,0,2,0) * m(2,0,0,0), closed formula", \
        lambda: mono_star_mono((0, 0, 2, 0), (2, 0, 0, 0)) == five_term
    yield "five-term identity m(0,0,2,0) * m(2,0,0,0), rewrite oracle", \
        lambda: rewrite.oracle_star((0, 0, 2, 0), (2, 0, 0, 0)) == five_term
    yield "five-term identity m(0,0,2,0) * m(2,0,0,0), species counts", \
        lambda: species_element(species.DividedPower(0, 0, 2, 0), species.DividedPower(2, 0, 0, 0), 4) == five_term
    yield "symbol recursion (a)^s_n", lambda: all(
        shifted_elem(a, s, n) == shifted_elem(a, s, n - 1) + (a + n - 1) * shifted_elem(a, s - 1, n - 1)
        for a in range(-5, 11) for n in range(1, 8) for s in range(1, n + 1)
    )
    yield "cubic evaluation (a)^3_4", lambda: all(
        shifted_elem(a, 3, 4) == 4 * a**3 + 18 * a**2 + 22 * a + 6 for a in range(11)
    )
    yield "shifted product expansion, a in -4..8, n in 0..6", lambda: all(
        vam3_lhs(a, n) == vam3_rhs(a, n) for a in range(-4, 9) for n in range(7)
    )
    yield "z-x normal ordering matches the oracle up to 4", lambda: all(
        normal_order_zx(a, b) == rewrite.oracle_star((0, 0, a, 0), (b, 0, 0, 0))
        for a in range(5) for b in range(5)
    )


def cmd_identities(_args) -> int:
    failed = 0
    for name, check in _identity_catalog():
        ok = check()
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failed += 1
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uhsl2",
        description="Exact star products in the divided-power PBW basis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_star = sub.add_parser("star", help="evaluate an expression")
    p_star.add_argument("--expr", required=True)
    p_star.add_argument("--cap", type=int, default=None,
                        help="degree cap (required for exp(...))")
    p_star.add_argument("--format", choices=("json", "pretty"), default="pretty")
    p_star.set_defaults(func=cmd_star)

    p_coeff = sub.add_parser("coeff", help="one structural coefficient")
    p_coeff.add_argument("--left", type=_exponents, required=True)
    p_coeff.add_argument("--right", type=_exponents, required=True)
    p_coeff.add_argument("--out", type=_exponents, required=True)
    p_coeff.set_defaults(func=cmd_coeff)

    p_verify = sub.add_parser("verify", help="closed formula vs rewrite oracle")
    p_verify.add_argument("--max-exp", type=_natural, required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_species = sub.add_parser("species", help="labelled counts vs coefficients")
    p_species.add_argument("--left", type=_functor, required=True)
    p_species.add_argument("--right", type=_functor, required=True)
    p_species.add_argument("--max-total", type=_natural, required=True)
    p_species.set_defaults(func=cmd_species)

    p_ident = sub.add_parser("identities", help="run the identity catalog")
    p_ident.set_defaults(func=cmd_identities)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
