"""Command-line interface (``sgmdi``).

Subcommands::

    integrate   one integral by any method
    bench       run an experiment suite to CSV
    fit         power-law fit of timings from a bench CSV
    grid dump   merged sparse grid as CSV x_1,...,x_d,weight
    rule dump   1-d rule (or delta rule) as CSV level,node,weight

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 resource cap.
"""

import argparse
import csv
import json
import sys
import time

from .. import __version__
from ..baselines import (McConfig, identify_family, mc_integrate, reference_integral,
                         tp_integrate, PRNG_NAME)
from ..errors import CapExceeded, NonFiniteIntegrand, SgmdiError
from ..expr import parse
from ..mdi import MdiConfig, mdi_integrate
from ..quad1d import RuleFamily, node_count, rule_csv
from ..sparsegrid import (SparseGridSpec, budget_for_level, count_nodes, merged_grid,
                          sg_combination, sg_delta)
from .fit import MODELS, fit_power_law
from .records import emit_csv, read_csv
from .suites import METHODS, SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _range(text):
    """``a..b`` (inclusive) or a comma list into a tuple of ints."""
    try:
        if ".." in text:
            a, b = text.split("..")
            return tuple(range(int(a), int(b) + 1))
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or a,b,c, got {text!r}") from None


def _overrides(text):
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise argparse.ArgumentTypeError(f"expected k=v, got {item!r}")
        k, v = item.split("=", 1)
        k = k.strip()
        if k in ("d", "levels", "m", "s", "rules"):
            out[k] = _range(v.replace(";", ","))
        elif k in ("rule", "samples", "seed", "level"):
            out[k] = int(v)
        elif k == "methods":
            out[k] = tuple(v.split(";"))
        else:
            out[k] = v
    return out


def _budget(args, d):
    if args.q is not None:
        return args.q
    if args.level is not None:
        return budget_for_level(args.level, d)
    raise SgmdiError("one of --q or --level is required")


def _add_budget(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--q", type=int, help="total level budget (sum of 1-d levels)")
    g.add_argument("--level", type=int,
                   help="table-style accuracy level; budget = level + d - 1")


def _cmd_integrate(args):
    d = args.dim
    f = parse(args.expr, d)
    family = RuleFamily.parse(args.rule)
    out = {"method": args.method, "d": d, "rule": int(family)}
    t0 = time.perf_counter()
    if args.method == "mc":
        est, err = mc_integrate(f, d, McConfig(args.samples, args.seed))
        value = est
        out.update(stderr=err, samples=args.samples, seed=args.seed, prng=PRNG_NAME)
    elif args.method == "tp":
        if args.level is None:
            raise SgmdiError("tp needs --level (1-d rule level)")
        value = tp_integrate(f, d, family, args.level)
        out["nodes"] = node_count(family, args.level) ** d
    else:
        q = _budget(args, d)
        spec = SparseGridSpec(d, q, family)
        out.update(q=q, level=q - d + 1, N=spec.max_nodes,
                   merged_nodes=count_nodes(spec, True),
                   unmerged_nodes=count_nodes(spec, False))
        if args.method == "mdi":
            trace = [] if args.trace else None
            value = mdi_integrate(f, d, MdiConfig(family, q, args.m, args.s), trace=trace)
            for step in trace or ():
                print(step, file=sys.stderr)
            out.update(m=args.m, s=args.s)
        elif args.method == "sg-combination":
            value = sg_combination(spec, f)
        else:
            value = sg_delta(spec, f)
    out["time"] = time.perf_counter() - t0
    out["value"] = value
    ref = None
    if args.ref == "auto":
        name = identify_family(f, d)
        if name is not None:
            ref = reference_integral(name, d)
            out["family"] = name
    elif args.ref is not None:
        ref = float(args.ref)
    if ref is not None:
        out["reference"] = ref
        out["rel_error"] = abs(value - ref) / abs(ref) if ref else abs(value)
    for k, v in out.items():
        print(f"{k}: {format(v, '.17g') if isinstance(v, float) else v}")
    return EXIT_OK


def _cmd_bench(args):
    overrides = dict(args.overrides)
    if args.d_range:
        overrides["d"] = args.d_range
    if args.expr is not None:
        overrides["expr"] = args.expr

    def progress(rec):
        err = "" if rec.rel_error is None else f" rel_error={rec.rel_error:.4e}"
        t = "" if rec.wall_time is None else f" time={rec.wall_time:.4g}s"
        print(f"{rec.method} {rec.integrand} r={rec.rule} d={rec.d} level={rec.level} "
              f"m={rec.m} s={rec.s} {rec.status}{(' ' + rec.reason) if rec.reason else ''}"
              f"{err}{t}", file=sys.stderr)

    records = run_suite(args.suite, overrides, out=args.out, timeout=args.timeout,
                        reference=args.ref, progress=progress)
    if args.out is None:
        emit_csv(records, sys.stdout)
    failed = [r for r in records if r.status != "ok"]
    if failed and all(r.reason in ("timeout", "memory-cap", "sample-cap") for r in failed):
        return EXIT_CAP if len(failed) == len(records) else EXIT_OK
    return EXIT_OK


def _filter(records, args):
    out = records
    if args.method:
        out = [r for r in out if r.method == args.method]
    if args.integrand:
        out = [r for r in out if r.integrand == args.integrand]
    if args.rule is not None:
        out = [r for r in out if r.rule == int(RuleFamily.parse(args.rule))]
    if args.m is not None:
        out = [r for r in out if r.m == args.m]
    if args.s is not None:
        out = [r for r in out if r.s == args.s]
    if args.dim is not None:
        out = [r for r in out if r.d == args.dim]
    return out


def _cmd_fit(args):
    records = _filter(read_csv(args.input), args)
    res = fit_power_law(records, args.model)
    print(json.dumps({"model": res.model, "coefficient": res.coefficient,
                      "exponent": res.exponent, "r_square": res.r_square,
                      "n": res.n, "formula": res.formula()}))
    return EXIT_OK


def _cmd_grid(args):
    q = _budget(args, args.dim)
    points, weights = merged_grid(SparseGridSpec(args.dim, q, args.rule))
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([f"x_{i + 1}" for i in range(args.dim)] + ["weight"])
        for p, wt in zip(points, weights):
            w.writerow([format(x, ".17g") for x in p] + [format(wt, ".17g")])
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


def _cmd_rule(args):
    text = rule_csv(args.rule, args.levels, delta=args.delta)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="sgmdi", description="Sparse-grid quadrature with MDI.")
    p.add_argument("--version", action="version", version=f"sgmdi {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    ip = sub.add_parser("integrate", help="compute one integral")
    ip.add_argument("--expr", required=True, help="integrand text")
    ip.add_argument("--dim", type=int, required=True)
    ip.add_argument("--method", choices=METHODS, default="mdi")
    ip.add_argument("--rule", default="3", help="1-4 or tz/cc/gp/gl")
    _add_budget(ip)
    ip.add_argument("--m", type=int, default=1)
    ip.add_argument("--s", type=int, default=1)
    ip.add_argument("--ref", default="auto", help="auto, none or a number")
    ip.add_argument("--seed", type=int, default=0)
    ip.add_argument("--samples", type=int, default=10 ** 5)
    ip.add_argument("--trace", action="store_true", help="print elimination steps")
    ip.set_defaults(run=_cmd_integrate)

    bp = sub.add_parser("bench", help="run an experiment suite")
    bp.add_argument("--suite", required=True, choices=sorted(SUITES))
    bp.add_argument("--out", help="CSV path (resumed if it exists)")
    bp.add_argument("--d-range", type=_range, help="a..b or a,b,c")
    bp.add_argument("--overrides", type=_overrides, default={},
                    help="k=v,... e.g. levels=4;6;8,m=10")
    bp.add_argument("--expr", help="integrand text for the custom suite")
    bp.add_argument("--ref", type=float, help="reference value for custom integrands")
    bp.add_argument("--timeout", type=float, default=600.0, help="seconds per row")
    bp.set_defaults(run=_cmd_bench)

    fp = sub.add_parser("fit", help="fit a power law to bench timings")
    fp.add_argument("--in", dest="input", required=True)
    fp.add_argument("--model", choices=MODELS, required=True)
    fp.add_argument("--method")
    fp.add_argument("--integrand")
    fp.add_argument("--rule")
    fp.add_argument("--m", type=int)
    fp.add_argument("--s", type=int)
    fp.add_argument("--dim", type=int)
    fp.set_defaults(run=_cmd_fit)

    gp = sub.add_parser("grid", help="sparse-grid utilities")
    gsub = gp.add_subparsers(dest="action", parser_class=_Parser)
    gsub.required = True
    gd = gsub.add_parser("dump", help="merged grid as CSV")
    gd.add_argument("--dim", type=int, required=True)
    _add_budget(gd)
    gd.add_argument("--rule", default="3")
    gd.add_argument("--out")
    gd.set_defaults(run=_cmd_grid)

    rp = sub.add_parser("rule", help="1-d rule utilities")
    rsub = rp.add_subparsers(dest="action", parser_class=_Parser)
    rsub.required = True
    rd = rsub.add_parser("dump", help="rule nodes and weights as CSV")
    rd.add_argument("--rule", default="3")
    rd.add_argument("--levels", type=_range, default=(1, 2, 3))
    rd.add_argument("--delta", action="store_true", help="dump delta rules")
    rd.add_argument("--out")
    rd.set_defaults(run=_cmd_rule)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "ref", None) == "none":
        args.ref = None
    try:
        return args.run(args)
    except CapExceeded as exc:
        print(f"sgmdi: resource cap hit ({exc.reason}): {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NonFiniteIntegrand, ArithmeticError) as exc:
        print(f"sgmdi: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (SgmdiError, ValueError, KeyError, OSError) as exc:
        msg = exc if not isinstance(exc, KeyError) else exc.args[0]
        print(f"sgmdi: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
