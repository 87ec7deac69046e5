"""Smolyak sparse grids on [-1, 1]^d.

Budget convention
-----------------
``q`` is the *total level budget*: the admissible level multi-indices are
``{l : l_i >= 1, |l| <= q}``. The combination form sums tensor rules over
the band ``q - d + 1 <= |l| <= q`` with coefficients
``(-1)**(q - |l|) * C(d - 1, q - |l|)``; the delta form sums
``Δ^{l_1} ⊗ ... ⊗ Δ^{l_d}`` over every admissible ``l``. Both give the same
quadrature.

Published tables usually quote an *accuracy level* instead, counted so that
level 1 is the single centre point in any dimension. Convert with
:func:`budget_for_level` (``q = level + d - 1``).
"""

import itertools
import math
import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BudgetTooSmall, CapExceeded, Infeasible, NonFiniteIntegrand
from .quad1d import RuleFamily, make_delta_rule, make_rule, node_count

__all__ = [
    "ExactSum",
    "SumAtMost",
    "Band",
    "SparseGridSpec",
    "WeightedPoint",
    "budget_for_level",
    "level_for_budget",
    "enumerate_levels",
    "combination_weights",
    "stream_points",
    "merged_grid",
    "sg_combination",
    "sg_delta",
    "count_nodes",
]


@dataclass(frozen=True)
class ExactSum:
    s: int


@dataclass(frozen=True)
class SumAtMost:
    q: int


@dataclass(frozen=True)
class Band:
    lo: int
    hi: int


def budget_for_level(level, d):
    """Total level budget for a table-style accuracy level in ``d`` dims."""
    return level + d - 1


def level_for_budget(q, d):
    return q - d + 1


@dataclass(frozen=True)
class SparseGridSpec:
    d: int
    q: int
    family: RuleFamily = RuleFamily.GAUSS_PATTERSON

    def __post_init__(self):
        object.__setattr__(self, "family", RuleFamily.parse(self.family))
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        if self.q < self.d:
            raise BudgetTooSmall(f"budget q={self.q} < dimension d={self.d}")

    @property
    def max_level(self):
        """Largest 1-d level any coordinate reaches."""
        return self.q - self.d + 1

    @property
    def max_nodes(self):
        """``N``: the most nodes used along one coordinate direction."""
        return node_count(self.family, self.max_level)


class WeightedPoint(NamedTuple):
    point: tuple
    weight: float


def _compositions(d, lo, hi):
    """Multi-indices with l_i >= 1 and lo <= |l| <= hi, lexicographic."""
    if d == 1:
        for a in range(max(lo, 1), hi + 1):
            yield (a,)
        return
    for a in range(1, hi - (d - 1) + 1):
        for rest in _compositions(d - 1, lo - a, hi - a):
            yield (a,) + rest


def enumerate_levels(d, constraint):
    """All level multi-indices of length ``d`` meeting ``constraint``.

    ``constraint`` is an :class:`ExactSum`, :class:`SumAtMost` or
    :class:`Band`. The result is lexicographically ordered.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if isinstance(constraint, ExactSum):
        lo = hi = constraint.s
    elif isinstance(constraint, SumAtMost):
        lo, hi = d, constraint.q
    elif isinstance(constraint, Band):
        lo, hi = max(constraint.lo, d), constraint.hi
    else:
        raise TypeError(f"unsupported constraint {constraint!r}")
    out = list(_compositions(d, lo, hi)) if hi >= d else []
    if not out:
        raise Infeasible(f"no level multi-index of length {d} satisfies {constraint}")
    return out


def combination_weights(d, q):
    """Map ``|l| -> (-1)**(q-|l|) C(d-1, q-|l|)`` over the nonzero band."""
    if q < d:
        raise BudgetTooSmall(f"budget q={q} < dimension d={d}")
    return {
        s: (-1) ** (q - s) * math.comb(d - 1, q - s)
        for s in range(max(d, q - d + 1), q + 1)
    }


def _as_vectorized(f, d):
    """Turn an Expr or a callable into ``F(X) -> values`` on (n, d) arrays."""
    from .expr import Expr, compile_numpy

    if isinstance(f, Expr):
        return compile_numpy(f, d)
    return f


def _tensor(rules):
    grids = np.meshgrid(*[r.nodes for r in rules], indexing="ij")
    points = np.stack([g.ravel() for g in grids], axis=1)
    w = rules[0].weights
    for r in rules[1:]:
        w = np.multiply.outer(w, r.weights)
    return points, np.ravel(w)


def _tensor_sum(F, rules):
    points, weights = _tensor(rules)
    values = np.asarray(F(points), dtype=float)
    if values.shape != (len(points),):
        values = np.broadcast_to(values, (len(points),))
    if not np.all(np.isfinite(values)):
        raise NonFiniteIntegrand("integrand is not finite at a grid point")
    return math.fsum(weights * values)


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise CapExceeded("wall-time cap exceeded", reason="timeout")


def stream_points(spec):
    """Yield the combination-form points with their signed weights.

    Points shared between multi-indices are yielded once per multi-index
    (weights are not merged). Memory use is bounded by a single tensor
    block, rows are generated lazily.
    """
    coeffs = combination_weights(spec.d, spec.q)
    for levels in _compositions(spec.d, spec.q - spec.d + 1, spec.q):
        c = coeffs[sum(levels)]
        rules = [make_rule(spec.family, l) for l in levels]
        for combo in itertools.product(*[zip(r.nodes.tolist(), r.weights.tolist())
                                         for r in rules]):
            w = float(c)
            point = []
            for x, wx in combo:
                point.append(x)
                w *= wx
            yield WeightedPoint(tuple(point), w)


def merged_grid(spec):
    """Distinct sparse-grid points with accumulated weights.

    Duplicates are detected on exact node values, which nested families
    reuse bit-for-bit between levels. Returns ``(points, weights)`` with
    points of shape ``(n, d)`` in lexicographic order.
    """
    acc = {}
    for p, w in stream_points(spec):
        acc[p] = acc.get(p, 0.0) + w
    keys = sorted(acc)
    points = np.array(keys, dtype=float).reshape(len(keys), spec.d)
    return points, np.array([acc[k] for k in keys])


def sg_combination(spec, f, deadline=None):
    """Sparse-grid quadrature by the combination formula.

    ``f`` is an :class:`~sgmdi.expr.Expr` or a vectorised callable taking an
    ``(n, d)`` array. Each tensor block is summed exactly rounded, blocks
    are reduced in lexicographic multi-index order.
    """
    F = _as_vectorized(f, spec.d)
    coeffs = combination_weights(spec.d, spec.q)
    partials = []
    for levels in enumerate_levels(spec.d, Band(spec.q - spec.d + 1, spec.q)):
        _check_deadline(deadline)
        rules = [make_rule(spec.family, l) for l in levels]
        partials.append(coeffs[sum(levels)] * _tensor_sum(F, rules))
    return math.fsum(partials)


def sg_delta(spec, f, deadline=None):
    """Sparse-grid quadrature as a sum of tensor products of delta rules."""
    F = _as_vectorized(f, spec.d)
    partials = []
    for levels in enumerate_levels(spec.d, SumAtMost(spec.q)):
        rules = [make_delta_rule(spec.family, l) for l in levels]
        if any(r.is_zero for r in rules):
            continue
        _check_deadline(deadline)
        partials.append(_tensor_sum(F, rules))
    return math.fsum(partials)


def _new_node_counts(family, top):
    """Nodes first appearing at each level 1..top (exact value identity)."""
    seen = set()
    out = []
    for l in range(1, top + 1):
        nodes = set(make_rule(family, l).nodes.tolist())
        out.append(len(nodes - seen))
        seen |= nodes
    return out


def _excess_dp(d, per_level, excess):
    """Coefficients of t^k, k <= excess, in (sum_k per_level[k] t^k)^d."""
    poly = [1] + [0] * excess
    for _ in range(d):
        nxt = [0] * (excess + 1)
        for i, a in enumerate(poly):
            if a:
                for k in range(excess + 1 - i):
                    nxt[i + k] += a * per_level[k]
        poly = nxt
    return poly


def _merged_non_nested(spec):
    """Distinct points of the band union for a non-nested family.

    Each 1-d node value is tagged with the set of levels containing it; a
    point belongs to the grid when some choice of one level per coordinate
    sums into the band. The DP tracks the set of reachable partial sums.
    """
    lo, hi = spec.q - spec.d + 1, spec.q
    top = spec.q - spec.d + 1
    levels_of = {}
    for l in range(1, top + 1):
        for x in make_rule(spec.family, l).nodes.tolist():
            levels_of.setdefault(x, set()).add(l)
    sig = {}
    for ls in levels_of.values():
        key = frozenset(ls)
        sig[key] = sig.get(key, 0) + 1
    states = {frozenset([0]): 1}
    for i in range(spec.d):
        rest = spec.d - i - 1  # coordinates still to place, each >= 1
        nxt = {}
        for sums, count in states.items():
            for ls, n in sig.items():
                new = frozenset(a + b for a in sums for b in ls if a + b + rest <= hi)
                if new:
                    nxt[new] = nxt.get(new, 0) + count * n
        states = nxt
    return sum(c for sums, c in states.items() if any(lo <= t <= hi for t in sums))


def count_nodes(spec, merged):
    """Exact node count without evaluating anything.

    ``merged=False`` gives the sum of tensor-block sizes over the
    combination band; ``merged=True`` the number of distinct points.
    Returned as a Python int (arbitrary size).
    """
    excess = spec.q - spec.d
    if merged and not spec.family.nested:
        return _merged_non_nested(spec)
    if merged:
        per_level = _new_node_counts(spec.family, excess + 1)
        return sum(_excess_dp(spec.d, per_level, excess))
    per_level = [node_count(spec.family, k + 1) for k in range(excess + 1)]
    poly = _excess_dp(spec.d, per_level, excess)
    lo = max(0, excess - spec.d + 1)
    return sum(poly[lo:])
