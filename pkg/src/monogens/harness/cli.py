"""Command line interface: ``monogens <command> ...``.

Exit codes: 0 success, 1 a checked statement failed, 2 usage or parse
error, 3 a resource ceiling was hit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from pathlib import Path

from .. import artinian, fiber, planar
from ..core import intersect, mu, power, product
from ..errors import HypothesisError, InputError, ResourceCeilingError
from . import report as rep
from .parsing import RedundantGeneratorWarning, parse_ideal
from .search import PREDICATES, SPACES, SearchConfig, counterexample_search
from .suites import DEFAULT_SEED, SUITES, ALIASES, RunConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CEILING = 0, 1, 2, 3


def _emit(record: dict, fmt: str, out) -> None:
    """Print a flat record in the requested format."""
    if fmt == "json":
        out.write(json.dumps(record, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(record))
        w.writerow([json.dumps(v) if isinstance(v, (list, dict)) else v for v in record.values()])
        out.write(buf.getvalue())
    else:
        width = max(len(k) for k in record)
        for k, v in record.items():
            out.write(f"{k.ljust(width)}  {v}\n")


def _ideal(args, text):
    return parse_ideal(text, getattr(args, "arity", None))


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like a:b, got {text!r}") from None
    return lo, hi


# -- commands -------------------------------------------------------------------

def cmd_mu(args, out):
    I = _ideal(args, args.ideal)
    P = power(I, args.power) if args.power != 1 else I
    _emit({"ideal": str(P), "rows": P.rows(), "mu": mu(P), "power": args.power}, args.format, out)
    return EXIT_OK


def _binary(args, out, op, name):
    I, J = _ideal(args, args.first), _ideal(args, args.second)
    R = op(I, J)
    _emit({name: str(R), "rows": R.rows(), "mu": mu(R)}, args.format, out)
    return EXIT_OK


def cmd_series(args, out):
    I = _ideal(args, args.ideal)
    s = fiber.mu_series(I, args.kmax, args.max_generators)
    if args.plot:
        from .plotting import plot_mu_series
        plot_mu_series(list(s.values), args.plot, str(I))
    _emit({"ideal": str(I), "mu": list(s.values)}, args.format, out)
    return EXIT_OK


def cmd_hvector(args, out):
    I = _ideal(args, args.ideal)
    hv = fiber.h_vector(I, args.kmax, args.tail, max_generators=args.max_generators)
    _emit({"ideal": str(I), "spread": hv.spread, "h": list(hv.h), "stabilized": hv.stabilized}, args.format, out)
    return EXIT_OK


def cmd_spread(args, out):
    I = _ideal(args, args.ideal)
    if args.estimate:
        lo, hi = args.window
        est = fiber.analytic_spread_estimate(I, lo, hi, args.max_generators)
        _emit({"ideal": str(I), "spread": est.spread, "confident": est.confident,
               "method": "estimate", "window": f"{lo}:{hi}"}, args.format, out)
        return EXIT_OK
    ell = fiber.analytic_spread(I)
    if ell is None:
        raise HypothesisError("exact analytic spread needs an equigenerated or two-variable ideal; use --estimate")
    _emit({"ideal": str(I), "spread": ell, "method": "exact"}, args.format, out)
    return EXIT_OK


def cmd_type(args, out):
    I = _ideal(args, args.ideal)
    soc = artinian.socle(I, args.box_ceiling)
    _emit({"ideal": str(I), "type": len(soc), "socle": [list(u) for u in soc]}, args.format, out)
    return EXIT_OK


def cmd_decompose(args, out):
    I = _ideal(args, args.ideal)
    comps = artinian.irreducible_decomposition(I, args.box_ceiling)
    _emit({"ideal": str(I), "components": [str(c.to_ideal()) for c in comps], "type": len(comps)},
          args.format, out)
    return EXIT_OK


def cmd_triangle(args, out):
    I = _ideal(args, args.ideal)
    cells = planar.triangle(I)
    if args.plot:
        from .plotting import plot_triangle
        plot_triangle(I, args.plot)
    if args.format == "table":
        m = mu(I)
        for i in range(1, m + 1):
            row = [" " * 10 * (i - 1)]
            for p in cells:
                if p.i == i:
                    label = f"({p.monomial[0]},{p.monomial[1]})"
                    row.append((f"*{label}" if p.marked else f" {label}").ljust(10))
            out.write("".join(row).rstrip() + "\n")
        out.write(f"* marks G(I^2); mu(I^2) = {sum(p.marked for p in cells)}\n")
        return EXIT_OK
    records = [{"i": p.i, "j": p.j, "monomial": list(p.monomial), "marked": p.marked} for p in cells]
    if args.format == "json":
        out.write(json.dumps({"ideal": str(I), "cells": records}, indent=2) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["i", "j", "x", "y", "marked"])
        for r in records:
            w.writerow([r["i"], r["j"], *r["monomial"], r["marked"]])
    return EXIT_OK


def cmd_check(args, out):
    config = RunConfig(
        suite=args.suite, max_gens=args.max_gens, max_exp=args.max_exp, arity=args.arity,
        k_max=args.kmax, tail_window=args.tail, samples=args.samples, seed=args.seed,
        workers=args.workers, format=args.format, exhaustive=not args.no_exhaustive,
        max_generators=args.max_generators, box_ceiling=args.box_ceiling, all_verdicts=args.all_verdicts)
    report = run_suite(args.suite, config)
    out.write(rep.render_report(report, args.format))
    if args.report_dir:
        rep.write_report_dir(report, args.report_dir, args.format, figures=not args.no_figures)
    return report.exit_code


def cmd_search(args, out):
    cfg = SearchConfig(predicate=args.predicate, space=args.space,
                       max_gens=args.max_gens if args.max_gens is not None else 7,
                       max_exp=args.max_exp if args.max_exp is not None else 12,
                       workers=args.workers, max_cases=args.max_cases)
    result = counterexample_search(cfg)
    out.write(rep.render_search(result, args.format))
    if args.report_dir:
        d = Path(args.report_dir)
        d.mkdir(parents=True, exist_ok=True)
        ext = {"table": "txt", "json": "json", "csv": "csv"}[args.format]
        (d / f"search-{args.predicate}.{ext}").write_text(rep.render_search(result, args.format))
        w = result.witness
        if w and not args.no_figures and len(w) == 1 and w[0].arity == 2:
            from .plotting import plot_triangle
            plot_triangle(w[0], d / f"search-{args.predicate}.png")
    return result.exit_code


# -- parser -------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=rep.FORMATS, default="table")
    p.add_argument("--arity", type=int, default=None, help="number of variables (default: inferred)")
    p.add_argument("--max-generators", type=int, default=fiber.DEFAULT_MAX_GENERATORS,
                   help="ceiling on generators of any computed power")
    p.add_argument("--box-ceiling", type=int, default=artinian.DEFAULT_BOX_CEILING,
                   help="ceiling on the pure-power box volume for socle enumeration")


def _corpus_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=None, help="random cases (suite default if omitted)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-exp", type=int, default=None)
    p.add_argument("--max-gens", type=int, default=None)
    p.add_argument("--report-dir", default=None, help="also write the report and figures here")
    p.add_argument("--no-figures", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monogens", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", help="number of minimal generators")
    p.add_argument("ideal")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_mu)

    for name, op, help_ in (("product", product, "product of two ideals"),
                            ("intersect", intersect, "intersection of two ideals")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("first")
        p.add_argument("second")
        p.set_defaults(func=lambda a, o, op=op, name=name: _binary(a, o, op, name))

    p = sub.add_parser("series", help="mu(I^k) for k = 0..K")
    p.add_argument("ideal")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--plot", default=None, help="write a PNG of the series")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("hvector", help="h-vector of the fiber ring")
    p.add_argument("ideal")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--tail", type=int, default=3)
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("spread", help="analytic spread")
    p.add_argument("ideal")
    p.add_argument("--estimate", action="store_true")
    p.add_argument("--window", type=_window, default=(2, 8))
    p.set_defaults(func=cmd_spread)

    for name, func, help_ in (("type", cmd_type, "Cohen-Macaulay type of S/I (artinian I)"),
                              ("decompose", cmd_decompose, "irreducible decomposition (artinian I)")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("ideal")
        p.set_defaults(func=func)

    p = sub.add_parser("triangle", help="products u_i u_j with the generators of I^2 marked")
    p.add_argument("ideal")
    p.add_argument("--plot", default=None)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("check", help="run a theorem suite")
    p.add_argument("suite", choices=sorted(set(SUITES) | set(ALIASES)))
    _corpus_flags(p)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--tail", type=int, default=3)
    p.add_argument("--no-exhaustive", action="store_true", help="skip the exhaustive layer")
    p.add_argument("--all-verdicts", action="store_true", help="list passing cases too")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="bounded counterexample search")
    p.add_argument("predicate", choices=sorted(PREDICATES))
    p.add_argument("--space", choices=SPACES, default="staircases")
    p.add_argument("--max-cases", type=int, default=50_000_000)
    _corpus_flags(p)
    p.set_defaults(func=cmd_search)

    for sp in sub.choices.values():
        _common(sp)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always", RedundantGeneratorWarning)
            warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
            return args.func(args, out)
    except ResourceCeilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except HypothesisError as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
