"""Command line front end.

Exit status is 0 on success, 1 on usage errors and 2 on domain errors
(unless ``--nan-on-domain-error`` is given, in which case ``nan`` is printed).
Arguments accept ``-1/e`` and ``-1/e+OFFSET`` besides plain numbers.
"""

from __future__ import annotations

import argparse
import csv
import re
import sys

from .applications import (
    GaisserHillasParams,
    Side,
    gh_full,
    gh_full_inverse,
    gh_reduced,
    gh_reduced_inverse,
    moyal,
    moyal_inverse,
)
from .branch import INV_E, DomainError
from .core import lambert_w
from .oracle import EVALUATORS, STEPS, Grid, measure_order, sweep

EXIT_USAGE = 1
EXIT_DOMAIN = 2

_NUMBER = re.compile(r"^-(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?$|^-1/e([-+].*)?$|^-(inf|nan)$", re.IGNORECASE)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)
        # let "-1e-300" and "-1/e" through as values rather than options
        self._negative_number_matcher = _NUMBER

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_real(text: str) -> float:
    t = text.strip().replace(" ", "")
    for token, value in (("-1/e", -INV_E), ("1/e", INV_E)):
        if t.startswith(token):
            rest = t[len(token):]
            try:
                return value + (float(rest) if rest else 0.0)
            except ValueError:
                break
    try:
        return float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def _branch(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = None
    if value not in (0, -1):
        raise argparse.ArgumentTypeError(f"branch must be 0 or -1, got {text!r}")
    return value


def fmt(value: float) -> str:
    """Shortest round-trip text for ``value``; integral values lose the ``.0``."""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def _gh_params(args) -> GaisserHillasParams | None:
    full = (args.X0, args.Xmax, args.lam)
    if all(v is None for v in full):
        if args.xmax is None:
            raise _UsageError("give --xmax, or all of --X0 --Xmax --lambda")
        return None
    if any(v is None for v in full) or args.xmax is not None:
        raise _UsageError("--X0, --Xmax and --lambda go together and exclude --xmax")
    return GaisserHillasParams(*full)


def cmd_eval(args, out):
    print(fmt(lambert_w(args.branch, args.x).value), file=out)


def cmd_sweep(args, out):
    grid = Grid(args.grid, args.lo, args.hi, args.n)
    samples = sweep(args.branch, args.evaluator, grid)
    if args.output and args.output != "-":
        with open(args.output, "w", newline="", encoding="utf-8") as fh:
            _write_csv(samples, fh)
    else:
        _write_csv(samples, out)


def _write_csv(samples, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["x", "approx", "reference", "delta"])
    for s in samples:
        writer.writerow([fmt(s.x), fmt(s.approx), fmt(s.reference), fmt(s.delta)])


def cmd_order(args, out):
    rep = measure_order(args.method, args.x, branch=args.branch)
    print(f"method {rep.method}, x = {fmt(rep.x)}, root = {fmt(rep.root)}", file=out)
    for d, e in zip(rep.perturbations, rep.errors):
        print(f"  perturbation {d:.0e} -> error {e:.6e}", file=out)
    print(f"fitted exponent {rep.exponent:.4f}", file=out)
    print(f"step at the root moves {rep.fixed_point_ulps:g} ulp", file=out)


def cmd_gh(args, out):
    params = _gh_params(args)
    if params is None:
        print(fmt(gh_reduced(args.x, args.xmax)), file=out)
    else:
        print(fmt(gh_full(args.x, params)), file=out)


def cmd_gh_inverse(args, out):
    params = _gh_params(args)
    if params is None:
        roots = gh_reduced_inverse(args.a, args.xmax)
        forward = [gh_reduced(r, args.xmax) for r in roots]
    else:
        roots = gh_full_inverse(args.a, params)
        forward = [gh_full(r, params) for r in roots]
    print(" ".join(fmt(r) for r in roots), file=out)
    if args.verify:
        print(" ".join(fmt(v) for v in forward), file=out)


def cmd_moyal(args, out):
    print(fmt(moyal(args.x)), file=out)


def cmd_moyal_inverse(args, out):
    sides = [Side.PLUS, Side.MINUS] if args.side == "both" else [Side[args.side.upper()]]
    xs = [moyal_inverse(args.y, s) for s in sides]
    print(" ".join(fmt(x) for x in xs), file=out)
    if args.verify:
        print(" ".join(fmt(moyal(x)) for x in xs), file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lambertw", description="Real branches of the Lambert W function.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    common = _Parser(add_help=False)
    common.add_argument(
        "--nan-on-domain-error",
        action="store_true",
        help="print nan instead of failing when an argument is outside the domain",
    )

    p = sub.add_parser("eval", parents=[common], help="evaluate W at one point")
    p.add_argument("--branch", type=_branch, default=0, help="0 or -1 (default 0)")
    p.add_argument("x", type=parse_real)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", parents=[common], help="accuracy sweep as CSV")
    p.add_argument("--branch", type=_branch, default=0)
    p.add_argument("--evaluator", choices=sorted(EVALUATORS), default="full")
    p.add_argument("--grid", choices=("linear", "log"), default="linear")
    p.add_argument("--lo", type=parse_real, required=True)
    p.add_argument("--hi", type=parse_real, required=True)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--output", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("order", parents=[common], help="measure the convergence order of one step")
    p.add_argument("--method", choices=sorted(STEPS), required=True)
    p.add_argument("--x", type=parse_real, default=1.0)
    p.add_argument("--branch", type=_branch, default=0)
    p.set_defaults(func=cmd_order)

    def gh_options(p):
        p.add_argument("--xmax", type=parse_real, help="rescaled depth of the maximum")
        p.add_argument("--X0", type=parse_real)
        p.add_argument("--Xmax", type=parse_real)
        p.add_argument("--lambda", dest="lam", type=parse_real)

    p = sub.add_parser("gh", parents=[common], help="Gaisser-Hillas profile value")
    p.add_argument("--x", type=parse_real, required=True, help="depth (rescaled, or X with --X0/--Xmax/--lambda)")
    gh_options(p)
    p.set_defaults(func=cmd_gh)

    p = sub.add_parser("gh-inverse", parents=[common], help="both depths where the profile equals a level")
    p.add_argument("--a", type=parse_real, required=True)
    gh_options(p)
    p.add_argument("--verify", action="store_true", help="also print the profile at both roots")
    p.set_defaults(func=cmd_gh_inverse)

    p = sub.add_parser("moyal", parents=[common], help="Moyal function value")
    p.add_argument("--x", type=parse_real, required=True)
    p.set_defaults(func=cmd_moyal)

    p = sub.add_parser("moyal-inverse", parents=[common], help="Moyal preimages of a level")
    p.add_argument("--y", type=parse_real, required=True)
    p.add_argument("--side", choices=("plus", "minus", "both"), default="both")
    p.add_argument("--verify", action="store_true", help="also print the Moyal function at the preimages")
    p.set_defaults(func=cmd_moyal_inverse)

    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"lambertw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # DomainError, and invalid grids or parameters
        if isinstance(exc, DomainError) and args.nan_on_domain_error:
            print("nan", file=out)
            return 0
        print(f"lambertw: {exc}", file=sys.stderr)
        return EXIT_DOMAIN if isinstance(exc, DomainError) else EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
