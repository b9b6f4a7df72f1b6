"""Command-line front end.

Subcommands:

    eval    evaluate an expression and print its canonical form
    verify  run encoded identity checks and print a report
    fuzz    random differential testing of the star engine vs. the oracle
    table   print reference tables (currently: --brackets)

Exit codes: 0 success, 2 usage/parse/unknown-id errors, 3 evaluation
domain errors, 4 engine/oracle divergence, 5 fuzz counterexample found.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from random import Random

from .errors import (DomainError, OracleDivergenceError, ParseError,
                     UnknownIdentityError)
from . import oracle as _oracle
from . import verify as _verify
from .expr import evaluate_text
from .star import PAIRS, StarConfig, ThetaSpec
from .star import star as _engine_star

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_DIVERGENCE = 4
EXIT_COUNTEREXAMPLE = 5


def _parse_theta(text: str) -> ThetaSpec:
    if text == "formal":
        return ThetaSpec.formal()
    if text == "zero":
        return ThetaSpec.zero()
    values = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValueError(
                f"bad theta assignment {chunk!r}; expected pair=value")
        name, _, value = chunk.partition("=")
        name = name.strip()
        if name not in PAIRS:
            raise ValueError(
                f"unknown index pair {name!r}; choose from {', '.join(PAIRS)}")
        try:
            values[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational value {value.strip()!r} for {name}")
    return ThetaSpec.numeric(values)


def _parse_nu(text: str):
    if text == "formal":
        return "formal"
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad rational value {text!r} for --nu")


def _config_from_args(args) -> StarConfig:
    return StarConfig(theta=_parse_theta(args.theta),
                      nu=_parse_nu(args.nu),
                      order_cap=args.order_cap)


def _add_config_flags(parser):
    parser.add_argument("--theta", default="formal",
                        help="'formal', 'zero', or assignments like 'ab=1,cd=-2'")
    parser.add_argument("--nu", default="formal",
                        help="'formal' or a rational value like 1/2")
    parser.add_argument("--order-cap", type=int, default=None,
                        help="truncate star corrections above this order")


def _cmd_eval(args) -> int:
    config = _config_from_args(args)
    value = evaluate_text(args.expression, config=config, backend=args.backend)
    print(value.canonical_text())
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.id is not None:
        records = _verify.run_matching(args.id)
        report = _verify.DiscrepancyReport(_verify.ENGINE_VERSION, records)
    else:
        report = _verify.run_all()
    rendered = _verify.render_report(report, format=args.format)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(rendered)
            if not rendered.endswith("\n"):
                handle.write("\n")
    else:
        print(rendered)
    return EXIT_OK


def _shrink_counterexample(f, g, config):
    """Drop terms from f and g while the engine/oracle disagreement persists."""
    def disagrees(x, y):
        return _engine_star(x, y, config) != _oracle.star_oracle(x, y, config)

    changed = True
    while changed:
        changed = False
        for side in (0, 1):
            current = (f, g)[side]
            for mono, coeff in current.terms():
                trimmed = current - _module_poly(mono, coeff)
                candidate = (trimmed, g) if side == 0 else (f, trimmed)
                if disagrees(*candidate):
                    f, g = candidate
                    changed = True
                    break
            if changed:
                break
    return f, g


def _module_poly(mono, coeff):
    from .poly import QPolynomial
    return QPolynomial({mono: coeff})


def _cmd_fuzz(args) -> int:
    config = _config_from_args(args)
    rng = Random(args.seed)
    for trial in range(args.trials):
        f = _oracle.random_qpoly(rng, max_position_degree=args.max_degree,
                                 max_terms=4, include_params=args.params)
        g = _oracle.random_qpoly(rng, max_position_degree=args.max_degree,
                                 max_terms=4, include_params=args.params)
        engine = _engine_star(f, g, config)
        oracle = _oracle.star_oracle(f, g, config)
        if engine != oracle:
            f2, g2 = _shrink_counterexample(f, g, config)
            print(f"counterexample at trial {trial}:")
            print(f"  f = {f2.canonical_text()}")
            print(f"  g = {g2.canonical_text()}")
            print(f"  engine: {_engine_star(f2, g2, config).canonical_text()}")
            print(f"  oracle: {_oracle.star_oracle(f2, g2, config).canonical_text()}")
            return EXIT_COUNTEREXAMPLE
        if config.nu == "formal" and config.theta.is_formal():
            zeroth = engine.coefficient_of_nu_power(0) - (f * g)
            if f.nu_degree() < 1 and g.nu_degree() < 1 and not zeroth.is_zero():
                print(f"counterexample at trial {trial}: "
                      f"order-0 term differs from the plain product")
                print(f"  f = {f.canonical_text()}")
                print(f"  g = {g.canonical_text()}")
                return EXIT_COUNTEREXAMPLE
    print(f"ok: {args.trials} trials, engine and oracle agree")
    return EXIT_OK


def _cmd_table(args) -> int:
    if not args.brackets:
        print("nothing to print; try --brackets", file=sys.stderr)
        return EXIT_USAGE
    operands = (("q", "q"), ("qbar", "qbar"), ("q", "qbar"), ("qbar", "q"))
    rows = []
    for x, y in operands:
        for pair in PAIRS:
            value = evaluate_text(f"pb_{pair}({x}, {y})")
            rows.append((f"{{{x}, {y}}}_{pair}", value.canonical_text()))
    width = max(len(label) for label, _ in rows)
    for label, text in rows:
        print(f"{label:<{width}}  =  {text}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatstar",
        description="Exact star products and Poisson brackets for "
                    "quaternion-valued polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expression")
    p_eval.add_argument("--backend", choices=("engine", "oracle"),
                        default="engine")
    _add_config_flags(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="run encoded identity checks")
    p_verify.add_argument("--id", default=None,
                          help="run one identity or one group prefix (e.g. V8.1 or V5)")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", default=None,
                          help="write the report to a file instead of stdout")
    p_verify.set_defaults(func=_cmd_verify)

    p_fuzz = sub.add_parser("fuzz", help="differential-test the star engine")
    p_fuzz.add_argument("--trials", type=int, default=200)
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--max-degree", type=int, default=4)
    p_fuzz.add_argument("--params", action="store_true",
                        help="let random operands include nu and Theta factors")
    _add_config_flags(p_fuzz)
    p_fuzz.set_defaults(func=_cmd_fuzz)

    p_table = sub.add_parser("table", help="print reference tables")
    p_table.add_argument("--brackets", action="store_true",
                         help="print all brackets of q and qbar")
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownIdentityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OracleDivergenceError as exc:
        print(f"internal divergence: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE


if __name__ == "__main__":
    sys.exit(main())
