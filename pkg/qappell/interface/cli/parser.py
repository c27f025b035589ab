"""
Command-line parser: the table, verify and eval commands.
"""
import argparse

from qappell.config.settings import Config

FAMILY_CHOICES = ["bernoulli", "euler", "genocchi", "custom"]
VARS_CHOICES = ["x", "xy", "xyz"]
SUITE_CHOICES = [
    "qcore", "leibniz", "derivatives", "characterization", "asequence", "addition",
    "operators", "genfun", "mehler", "rogers", "setalgebra", "all",
]


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=FAMILY_CHOICES, required=True, help="Determining function")
    parser.add_argument("--base", help="Custom base coefficients c0,c1,... of t^n/[n]_q!")
    parser.add_argument("--custom", metavar="FILE", help="Custom family descriptor (JSON)")
    parser.add_argument("--alpha", type=int, help="Integer order alpha (default: 1, or the descriptor's)")
    parser.add_argument("--n", type=int, required=True, help="Polynomial index n")
    parser.add_argument("--q", default="1/2", help="Rational q, written p/q (default: 1/2)")
    parser.add_argument("--u", default="1", help="Rational deformation u (default: 1)")
    parser.add_argument("--vars", choices=VARS_CHOICES, default="x",
                        help="x: P_n(x;u); xy: P_n(x,y;u); xyz: Q_n(x,y,z;u)")
    parser.add_argument("--quasi", action="store_true", help="Quasi polynomial Q_n (needs --vars xy or xyz)")
    parser.add_argument("--order", type=int, help="Truncation order N (default: n)")


def build_parser(config: Config) -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Args:
        config: Configuration supplying defaults

    Returns:
        Parser with table, verify and eval subcommands
    """
    parser = argparse.ArgumentParser(
        prog="qappell",
        description="Exact deformed q-Appell polynomials and identity verification",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", help="Print the terms of one polynomial")
    _add_family_arguments(table)
    table.add_argument("--format", choices=["json", "csv"], default="json", help="Output format (default: json)")

    verify = commands.add_parser("verify", help="Run identity suites over a grid")
    verify.add_argument("--suite", choices=SUITE_CHOICES, action="append",
                        help="Suite to run; repeatable (default: all)")
    verify.add_argument("--max-n", type=int, default=config.DEFAULT_MAX_N,
                        help=f"Largest polynomial index (default: {config.DEFAULT_MAX_N})")
    verify.add_argument("--order", type=int, default=config.DEFAULT_ORDER,
                        help=f"Series truncation order (default: {config.DEFAULT_ORDER})")
    verify.add_argument("--grid", default="default", help="Grid JSON file, or 'default'")
    verify.add_argument("--mehler-order", type=int, default=config.MEHLER_ORDER)
    verify.add_argument("--rogers-order", type=int, default=config.ROGERS_ORDER)
    verify.add_argument("--genfun-order", type=int, default=config.GENFUN_ORDER)
    verify.add_argument("--leibniz-pairs", type=int, default=config.LEIBNIZ_PAIRS)
    verify.add_argument("--workers", type=int, default=config.MAX_WORKERS, help="Threads for grid points")

    evaluate = commands.add_parser("eval", help="Evaluate one polynomial at a rational point")
    _add_family_arguments(evaluate)
    evaluate.add_argument("--at", required=True, help='Assignments such as "x=1/2,y=3"')

    return parser
