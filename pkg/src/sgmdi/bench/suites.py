"""Experiment suites.

Each suite expands to an ordered list of :class:`Point` parameter points;
:func:`run_suite` runs them serially and returns one
:class:`~sgmdi.bench.records.BenchRecord` per point. Levels are given in
the table-style accuracy level and converted to the total budget with
``q = level + d - 1``.

Failures (caps, timeouts, non-finite values) become ``failed`` rows and
never stop the suite. With ``out`` set, rows are appended to the CSV as
they finish and points already present in it are skipped, so an
interrupted run can be resumed.

Timing uses ``time.perf_counter``. The integrand is parsed and every 1-d
rule the point needs is built before the clock starts. Rows faster than
one second are repeated three times and the median is reported.
"""

import datetime
import os
import statistics
import time
from dataclasses import dataclass

from .. import __version__
from ..baselines import (McConfig, get_family, identify_family,
                         mc_integrate, reference_integral, tp_integrate)
from ..errors import CapExceeded, NonFiniteIntegrand, SgmdiError
from ..expr import parse
from ..mdi import MdiConfig, mdi_integrate
from ..quad1d import RuleFamily, make_delta_rule, make_rule, node_count
from ..sparsegrid import SparseGridSpec, count_nodes, sg_combination, sg_delta
from .records import BenchRecord, append_csv, read_csv, record_key

__all__ = ["Point", "SUITES", "suite_points", "run_point", "run_suite",
           "METHODS"]

METHODS = ("sg-combination", "sg-delta", "mdi", "mc", "tp")


@dataclass(frozen=True)
class Point:
    method: str
    integrand: str
    d: int
    level: int
    rule: int = 3
    m: int = None
    s: int = None
    samples: int = None
    seed: int = None
    expr: str = None  # integrand text for custom points

    @property
    def q(self):
        return self.level + self.d - 1


_HIGH_D = (10, 30, 50, 70, 90, 100)


def _low_d(p, d, table):
    out = []
    for name, levels in table:
        if "integrand" in p and name != p["integrand"]:
            continue
        for level in p.get("levels", levels):
            for method in p.get("methods", ("mdi", "sg-delta")):
                out.append(Point(method, name, d, level, 3, 1, 1))
    return out


def _test1(p):
    return _low_d(p, 2, (("exp_sq", (6, 7, 9, 10, 13, 14)),
                         ("sin_quad", (9, 10, 13, 14, 16, 20))))


def _test2(p):
    return _low_d(p, 3, (("exp_sq", (9, 10, 11, 13, 14, 15, 16)),
                         ("sin_mixed", (12, 13, 15, 16, 17, 19, 20))))


def _test3(p):
    out = []
    for level, dims in ((10, (2, 4, 8, 10, 12, 14, 15)), (12, (2, 4, 6, 8, 10, 12, 13))):
        if "levels" in p and level not in p["levels"]:
            continue
        for d in p.get("d", dims):
            for method in p.get("methods", ("mdi", "sg-delta")):
                out.append(Point(method, "gaussian", d, level, 3, 1, 1))
    return out


def _test4(p):
    out = []
    for name in ("rational", "gaussian"):
        for d in p.get("d", (5, 10, 20, 30, 35, 40, 60, 80, 100)):
            out.append(Point("mdi", name, d, 10, 3, 10, 1))
            out.append(Point("mc", name, d, 10, samples=p.get("samples", 10 ** 6),
                             seed=p.get("seed", 0)))
    return out


def _test5(p):
    return [Point("mdi", name, d, 10, 3, 10, 1)
            for name in ("exp_alt_scaled", "rational")
            for d in p.get("d", (10, 100, 300, 500, 700, 900, 1000))]


def _test6(p):
    return [Point("mdi", name, d, 10, r, 10, 1)
            for name in ("exp_alt", "rational")
            for r in p.get("rules", (1, 2, 3, 4))
            for d in p.get("d", _HIGH_D)]


def _test7(p):
    return [Point("mdi", name, d, 10, 3, m, 1)
            for name in ("rational", "gaussian")
            for m in p.get("m", (5, 10, 15))
            for d in p.get("d", _HIGH_D)]


def _n_study(p):
    return [Point("mdi", name, d, N, p.get("rule", 4), 1, 1)
            for name in ("exp_alt", "cos_sum", "rational")
            for d in p.get("d", (5, 10))
            for N in p.get("levels", (4, 6, 8, 10, 12, 14))]


def _test8(p):
    out = [Point("mdi", "rational", d, 10, 3, 10, s)
           for s in p.get("s", (1, 2, 3))
           for d in p.get("d", _HIGH_D)]
    return out + _n_study(p)


def _test10(p):
    combos = (
        ("f1", 1, 10, 1), ("f1", 2, 10, 1), ("f1", 3, 10, 1), ("f1", 4, 10, 1),
        ("f2", 1, 10, 1), ("f2", 2, 10, 1), ("f2", 3, 5, 1), ("f2", 3, 10, 1),
        ("f2", 3, 15, 1), ("f2", 3, 15, 2), ("f2", 3, 15, 3),
        ("f3", 4, 10, 1), ("f3", 3, 5, 1), ("f3", 3, 10, 1),
        ("f4", 3, 15, 1), ("f4", 3, 10, 1),
        ("f5", 3, 10, 1),
    )
    out = []
    for name, r, m, s in combos:
        if "integrand" in p and name != p["integrand"]:
            continue
        if "rule" in p and r != p["rule"]:
            continue
        if "m" in p and m not in p["m"]:
            continue
        for d in p.get("d", (10, 20, 40, 60, 80, 100)):
            out.append(Point("mdi", name, d, p.get("level", 10), r, m, s))
    return out


def _custom(p):
    text = p.get("expr", "1")
    out = []
    for d in p.get("d", (2,)):
        for level in p.get("levels", (5,)):
            for method in p.get("methods", ("sg-delta", "mdi")):
                out.append(Point(method, "custom", d, level, p.get("rule", 3),
                                 p.get("m", 1), p.get("s", 1),
                                 samples=p.get("samples", 10 ** 5) if method == "mc" else None,
                                 seed=p.get("seed", 0) if method == "mc" else None,
                                 expr=text))
    return out


SUITES = {
    "test1": _test1, "test2": _test2, "test3": _test3, "test4": _test4,
    "test5": _test5, "test6": _test6, "test7": _test7, "test8": _test8,
    "test9": _n_study, "test10": _test10, "custom": _custom,
}


def suite_points(name, overrides=None):
    """Parameter points of suite ``name`` with ``overrides`` applied.

    Recognised overrides (all optional): ``d`` (sequence), ``levels``,
    ``methods``, ``rules``, ``rule``, ``m``, ``s``, ``integrand``,
    ``samples``, ``seed``, ``expr`` (custom only).
    """
    try:
        build = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return build(dict(overrides or {}))


# ---------------------------------------------------------------- running

def _integrand(point):
    if point.integrand == "custom":
        f = parse(point.expr, point.d)
        return f, identify_family(f, point.d)
    return get_family(point.integrand).expr(point.d), point.integrand


def _warm_rules(family, top):
    for l in range(1, top + 1):
        make_rule(family, l)
        make_delta_rule(family, l)


def _compute(point, f, deadline, max_points, max_samples):
    family = RuleFamily.parse(point.rule)
    if point.method in ("sg-combination", "sg-delta"):
        spec = SparseGridSpec(point.d, point.q, family)
        if count_nodes(spec, merged=False) > max_points:
            raise CapExceeded("sparse grid exceeds the evaluation cap")
        run = sg_combination if point.method == "sg-combination" else sg_delta
        return run(spec, f, deadline=deadline)
    if point.method == "mdi":
        cfg = MdiConfig(family, point.q, point.m or 1, point.s or 1)
        return mdi_integrate(f, point.d, cfg, deadline=deadline)
    if point.method == "tp":
        return tp_integrate(f, point.d, family, point.level, cap=max_points)
    if point.method == "mc":
        cfg = McConfig(point.samples or 10 ** 5, point.seed or 0)
        return mc_integrate(f, point.d, cfg, deadline=deadline,
                            max_samples=max_samples)[0]
    raise ValueError(f"unknown method {point.method!r}")


def run_point(point, timeout=600.0, max_points=2 * 10 ** 7, max_samples=10 ** 8,
              reference=None, repetitions=None):
    """Run one parameter point and return its record (never raises on caps).

    ``repetitions=None`` applies the default policy (three runs below one
    second, otherwise one); an integer forces that many timed runs.
    """
    family = RuleFamily.parse(point.rule)
    rec = BenchRecord(
        method=point.method, integrand=point.integrand, rule=int(family),
        d=point.d, q=point.q, level=point.level, m=point.m, s=point.s,
        seed=point.seed, samples=point.samples,
        timestamp=datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds"),
        version=__version__,
    )
    try:
        f, known = _integrand(point)
        if reference is None and known is not None:
            reference = reference_integral(known, point.d)
        rec.reference = reference
        if point.method == "tp":
            rec.N = node_count(family, point.level)
            rec.unmerged_nodes = rec.merged_nodes = rec.N ** point.d
        else:
            spec = SparseGridSpec(point.d, point.q, family)
            rec.N = spec.max_nodes
            rec.merged_nodes = count_nodes(spec, merged=True)
            rec.unmerged_nodes = count_nodes(spec, merged=False)
        _warm_rules(family, point.level)
        times = []
        value = None
        while True:
            deadline = time.monotonic() + timeout
            t0 = time.perf_counter()
            value = _compute(point, f, deadline, max_points, max_samples)
            times.append(time.perf_counter() - t0)
            if repetitions is not None:
                if len(times) >= repetitions:
                    break
            elif len(times) == 3 or times[0] >= 1.0:
                break
        rec.value = float(value)
        rec.wall_time = statistics.median(times)
        rec.repetitions = len(times)
        if reference is not None:
            rec.rel_error = (abs(value - reference) / abs(reference) if reference != 0
                             else abs(value))
    except CapExceeded as exc:
        rec.status, rec.reason = "failed", exc.reason
    except (NonFiniteIntegrand, OverflowError):
        rec.status, rec.reason = "failed", "non-finite"
    except (SgmdiError, ValueError, MemoryError) as exc:
        rec.status = "failed"
        rec.reason = "memory-cap" if isinstance(exc, MemoryError) else f"error: {exc}"
    return rec


def run_suite(name, overrides=None, out=None, timeout=600.0, max_points=2 * 10 ** 7,
              max_samples=10 ** 8, reference=None, progress=None, repetitions=None):
    """Run every point of a suite and return the records in suite order.

    Parameters
    ----------
    name : str
        ``test1`` ... ``test10`` or ``custom``.
    overrides : dict, optional
        See :func:`suite_points`.
    out : str, optional
        CSV path. Existing rows are kept and their points skipped; new rows
        are appended as they complete.
    timeout : float
        Wall-time cap per row in seconds.
    max_points : int
        Cap on sparse-grid or tensor evaluations per row.
    max_samples : int
        Cap on Monte Carlo samples per row.
    reference : float, optional
        Reference value for custom integrands that match no named family.
    progress : callable, optional
        Called with each finished record.
    repetitions : int, optional
        Force this many timed runs per row (median reported).
    """
    points = suite_points(name, overrides)
    done = {}
    if out is not None and os.path.exists(out) and os.path.getsize(out) > 0:
        for rec in read_csv(out):
            done[record_key(rec)] = rec
    records = []
    for point in points:
        key = (point.method, point.integrand, int(RuleFamily.parse(point.rule)),
               point.d, point.q, point.m, point.s, point.seed, point.samples)
        if key in done:
            records.append(done[key])
            continue
        rec = run_point(point, timeout, max_points, max_samples, reference, repetitions)
        records.append(rec)
        if out is not None:
            append_csv(rec, out)
        if progress is not None:
            progress(rec)
    return records
