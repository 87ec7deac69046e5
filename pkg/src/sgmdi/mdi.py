"""Multilevel dimension iteration (MDI) for sparse-grid quadrature.

MDI evaluates exactly the delta-form sparse-grid sum
``sum_{|l| <= q} (Δ^{l_1} ⊗ ... ⊗ Δ^{l_d}) f``, but instead of evaluating
``f`` at every grid point it eliminates coordinates symbolically: the
integrand is partially evaluated at the 1-d nodes of one coordinate, the
weighted copies are merged into one residual expression, and the process
repeats on the surviving coordinates.

Budget stratification
---------------------
The residual after eliminating some coordinates depends on how much of
the level budget they consumed. The driver therefore carries a map
``b -> F_b`` from consumed budget to residual expression. Eliminating
coordinate ``j`` turns ``F_b`` into contributions to ``F_{b + l}`` for
each admissible level ``l``; a stratum is dropped as soon as the
survivors could not all receive level 1. The value equals ``sg_delta``
by construction, for any grouping of the coordinates.

Stages
------
Stage 1 runs ``floor(d / m)`` blocks of ``m`` coordinates. Stage 2
eliminates ``s`` coordinates at a time while more than three remain;
the last one to three coordinates are finished by the base cases
(:func:`mdi_3d`, :func:`mdi_2d`, and a numerical 1-d rule). Inside each
block coordinates are processed one at a time, which is equivalent to the
block tensor sum and much cheaper; ``method="tensor"`` in
:func:`eliminate_block` keeps the literal block sum as a cross-check.

Threading
---------
With ``workers > 1`` the strata of one elimination step are processed
concurrently (the expression intern table is lock-guarded). Results are
reduced in increasing ``b`` and are identical to the serial run.
"""

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BudgetTooSmall, CapExceeded, NonFiniteIntegrand
from .expr import (ONE, Expr, compile_numpy, constant_split, node_count, parse,
                   substitute, weighted_sum)
from .expr.core import ADD, split_coeff
from .quad1d import RuleFamily, make_delta_rule, make_rule, max_level
from .sparsegrid import Band, enumerate_levels

__all__ = [
    "MdiConfig", "TraceStep", "eliminate_block", "mdi_integrate",
    "mdi_2d", "mdi_3d",
]


@dataclass(frozen=True)
class MdiConfig:
    """Algorithm parameters.

    ``q`` is the total level budget (same convention as
    :class:`~sgmdi.sparsegrid.SparseGridSpec`), ``m`` the stage-1 block
    size and ``s`` the stage-2 block size.
    """

    family: RuleFamily = RuleFamily.GAUSS_PATTERSON
    q: int = 1
    m: int = 1
    s: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", RuleFamily.parse(self.family))
        if self.q < 1:
            raise ValueError("q must be >= 1")
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if not 1 <= self.s <= 3:
            raise ValueError("s must be 1, 2 or 3")


@dataclass(frozen=True)
class TraceStep:
    stage: str
    coords: tuple
    strata: int
    nodes: int

    def __str__(self):
        names = ",".join(f"x{c + 1}" for c in self.coords)
        return (f"stage={self.stage} coords={names} strata={self.strata} "
                f"nodes={self.nodes}")


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise CapExceeded("wall-time cap exceeded", reason="timeout")


def _node_weights(family, level):
    """``[(node, weight)]`` of the level-``level`` delta rule, zeros dropped."""
    rule = make_delta_rule(family, level)
    return [(x, w) for x, w in zip(rule.nodes.tolist(), rule.weights.tolist())
            if w != 0.0]


def _grid_nodes(family, top):
    """Distinct nodes used by the delta rules of levels 1..top."""
    if family.nested:
        return make_rule(family, top).nodes.tolist()
    nodes = set()
    for l in range(1, top + 1):
        nodes.update(make_rule(family, l).nodes.tolist())
    return sorted(nodes)


def _top_level(family, avail):
    top = max_level(family)
    if top is not None and avail > top:
        make_rule(family, avail)  # raises UnsupportedLevel
    return avail


def _monomials(e, memo):
    """``[(k, M)]`` with ``e == sum(k * M)`` once constants are split off."""
    e = constant_split(e, memo)
    out = []
    for t in (e.args if e.kind == ADD else (e,)):
        k, rest = split_coeff(t)
        out.append((k, ONE if rest is None else rest))
    return out


def _eliminate_coord(strata, coord, family, budget, tail, workers=1):
    """One sweep step: apply the delta rules along ``coord`` to each stratum.

    ``budget`` is the total budget, ``tail`` the number of coordinates
    that still need at least level 1 after this one.

    Strata are split into monomials ``k * M``; each distinct ``M`` is
    substituted once per node, and the weighted contributions are
    accumulated as plain coefficients per resulting monomial. For
    separable and linear-phase integrands every stratum shares the same one
    or two monomials, so the expression work does not grow with the number
    of strata.
    """
    reach = {b: budget - b - tail for b in strata if budget - b - tail >= 1}
    if not reach:
        return {}
    top = _top_level(family, max(reach.values()))
    # one substitution memo per node value, shared by every stratum
    memos = {x: {} for x in _grid_nodes(family, top)}
    split_memo = {}
    parts = {b: _monomials(strata[b], split_memo) for b in sorted(reach)}
    need = {}
    for b, monos in parts.items():
        for _, mono in monos:
            need[mono] = max(need.get(mono, 0), reach[b])

    def expand(mono):
        return {x: _monomials(substitute(mono, {coord: x}, memos[x]), split_memo)
                for x in _grid_nodes(family, need[mono])}

    order = list(need)
    if workers > 1 and len(order) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            done = dict(zip(order, pool.map(expand, order)))
    else:
        done = {mono: expand(mono) for mono in order}

    targets = {}
    for b, monos in parts.items():
        for l in range(1, reach[b] + 1):
            nw = _node_weights(family, l)
            if not nw:
                continue
            acc = targets.setdefault(b + l, {})
            for c, mono in monos:
                subs = done[mono]
                for x, w in nw:
                    cw = c * w
                    for k, out_mono in subs[x]:
                        acc.setdefault(out_mono, []).append(cw * k)
    ws_memo = {}
    out = {}
    for b in sorted(targets):
        terms = [(math.fsum(v), mono) for mono, v in targets[b].items()]
        e = weighted_sum(terms, ws_memo)
        if not (e.kind == "const" and e.value == 0.0):
            out[b] = e
    return out


def _sweep(strata, coords, family, budget, tail, deadline=None, workers=1):
    for j, c in enumerate(coords):
        _check_deadline(deadline)
        strata = _eliminate_coord(strata, c, family, budget,
                                  tail + len(coords) - j - 1, workers)
    return strata


def _tensor_block(f, coords, family, max_budget):
    """Literal block sum over inner multi-indices (reference method)."""
    m = len(coords)
    out = {}
    for b in range(m, max_budget + 1):
        terms = []
        for levels in enumerate_levels(m, Band(b, b)):
            rules = [_node_weights(family, l) for l in levels]
            if any(not r for r in rules):
                continue
            for combo in itertools.product(*rules):
                w = 1.0
                for _, wx in combo:
                    w *= wx
                point = {c: x for c, (x, _) in zip(coords, combo)}
                terms.append((w, substitute(f, point)))
        if terms:
            e = weighted_sum(terms)
            if not (e.kind == "const" and e.value == 0.0):
                out[b] = e
    return out


def eliminate_block(f, coords, family, max_budget, method="sweep"):
    """Eliminate ``coords`` from ``f`` with stratified delta rules.

    Parameters
    ----------
    f : Expr
    coords : sequence of int
        Coordinates to eliminate (0-based).
    family : RuleFamily or int
    max_budget : int
        Largest total inner level ``sum_i l_i`` allowed in the block
        (the overall budget minus one level per surviving coordinate).
    method : {"sweep", "tensor"}
        ``sweep`` eliminates one coordinate at a time; ``tensor`` forms the
        literal sum over inner multi-indices. Both give the same strata.

    Returns
    -------
    dict
        ``{b: F_b}`` for inner total level ``b``; strata whose
        contribution cancels exactly to zero are omitted.
    """
    family = RuleFamily.parse(family)
    coords = tuple(coords)
    if max_budget < len(coords):
        raise BudgetTooSmall(
            f"block of {len(coords)} coordinates needs budget >= {len(coords)}")
    if method == "tensor":
        return _tensor_block(f, coords, family, max_budget)
    if method != "sweep":
        raise ValueError(f"unknown method {method!r}")
    return _sweep({0: f}, coords, family, max_budget, 0)


def _integrate_last(strata, coord, family, budget):
    """Finish the last coordinate numerically: J^{budget-b} on each F_b."""
    parts = []
    for b in sorted(strata):
        level = budget - b
        if level < 1:
            continue
        rule = make_rule(family, level)
        g = strata[b]
        X = np.zeros((len(rule), coord + 1))
        X[:, coord] = rule.nodes
        values = compile_numpy(g)(X)
        if not np.all(np.isfinite(values)):
            raise NonFiniteIntegrand("integrand is not finite at a grid point")
        parts.append(math.fsum(rule.weights * values))
    return math.fsum(parts)


def _constant_total(strata):
    parts = []
    for b in sorted(strata):
        g = strata[b]
        if g.kind != "const" or g.free:
            raise AssertionError("residual still depends on a coordinate")
        parts.append(g.value)
    return math.fsum(parts)


def _base(strata, coords, family, budget, trace, deadline, workers):
    """Base cases: one to three coordinates left (or none)."""
    coords = list(coords)
    stage = {3: "base-3d", 2: "base-2d", 1: "base-1d"}.get(len(coords))
    while len(coords) > 1:
        strata = _sweep(strata, coords[:1], family, budget, len(coords) - 1,
                        deadline, workers)
        _record(trace, stage, coords[:1], strata)
        coords = coords[1:]
    if not coords:
        return _constant_total(strata)
    _check_deadline(deadline)
    value = _integrate_last(strata, coords[0], family, budget)
    _record(trace, stage, coords, strata)
    return value


def _record(trace, stage, coords, strata):
    if trace is None:
        return
    nodes = sum(node_count(e) for e in strata.values())
    trace.append(TraceStep(stage, tuple(coords), len(strata), nodes))


def _prepare(f, d, cfg):
    if isinstance(f, str):
        f = parse(f, d)
    if not isinstance(f, Expr):
        raise TypeError("mdi needs an Expr (or integrand text) to work symbolically")
    if f.free and max(f.free) >= d:
        raise ValueError(f"integrand uses x{max(f.free) + 1} but d={d}")
    if cfg.q < d:
        raise BudgetTooSmall(f"budget q={cfg.q} < dimension d={d}")
    return f


def mdi_integrate(f, d, cfg, trace=None, deadline=None, workers=1):
    """Sparse-grid integral of ``f`` over [-1, 1]^d by MDI.

    Parameters
    ----------
    f : Expr or str
    d : int
    cfg : MdiConfig
    trace : list, optional
        Receives one :class:`TraceStep` per elimination step.
    deadline : float, optional
        ``time.monotonic()`` value after which CapExceeded is raised.
    workers : int
        Threads used for the strata of each step.

    Returns
    -------
    float
        Equal to ``sg_delta(SparseGridSpec(d, cfg.q, cfg.family), f)`` up
        to rounding.
    """
    f = _prepare(f, d, cfg)
    family, budget = cfg.family, cfg.q
    coords = list(range(d))
    strata = {0: f}
    m = cfg.m
    for _ in range(d // m):
        block = coords[:m]
        coords = coords[m:]
        strata = _sweep(strata, block, family, budget, len(coords), deadline, workers)
        _record(trace, "1", block, strata)
    while len(coords) > 3:
        block = coords[:cfg.s]
        coords = coords[cfg.s:]
        strata = _sweep(strata, block, family, budget, len(coords), deadline, workers)
        _record(trace, "2", block, strata)
    if not strata:
        return 0.0
    return _base(strata, coords, family, budget, trace, deadline, workers)


def mdi_2d(f, cfg, trace=None, deadline=None):
    """Two-dimensional MDI: eliminate ``x1`` symbolically, then ``x2``."""
    f = _prepare(f, 2, cfg)
    return _base({0: f}, [0, 1], cfg.family, cfg.q, trace, deadline, 1)


def mdi_3d(f, cfg, trace=None, deadline=None):
    """Three-dimensional MDI: eliminate ``x1``, hand the rest to the 2-d case."""
    f = _prepare(f, 3, cfg)
    return _base({0: f}, [0, 1, 2], cfg.family, cfg.q, trace, deadline, 1)
