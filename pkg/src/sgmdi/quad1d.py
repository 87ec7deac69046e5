"""One-dimensional quadrature rules on [-1, 1] and their difference rules.

Four families are provided, selected by the integer ``r`` used throughout
the package:

    r = 1  trapezoidal        n_1 = 1, n_l = 2**(l-1) + 1
    r = 2  Clenshaw-Curtis    n_1 = 1, n_l = 2**(l-1) + 1
    r = 3  Gauss-Patterson    delayed growth, see below
    r = 4  Gauss-Legendre     n_l = l

Level 1 of the trapezoidal and Clenshaw-Curtis families is the one-point
midpoint rule (node 0, weight 2), so that every family nests its level-1
node into level 2.

Gauss-Patterson uses delayed growth: level ``l`` takes the smallest
embedded Patterson rule whose polynomial exactness is at least ``2l - 1``.
The Patterson rules with 1, 3, 7, 15, 31, 63, 127, 255 points are exact to
degree 1, 5, 11, 23, 47, 95, 191, 383, which gives the counts

    level   1   2-3   4-6   7-12   13-24   25-48   49-96   97-192
    n_l     1    3     7     15      31      63     127      255

Levels above 192 raise :class:`~sgmdi.errors.UnsupportedLevel`.

The delta rule of level ``l`` is ``J^l - J^(l-1)`` (with ``J^0 = 0``).
For nested families it lives on the level-``l`` nodes; for Gauss-Legendre
its support is the union of both node sets.

Rules are immutable, built once per ``(family, level)`` and cached.
"""

import enum
import functools
import io
import math
from dataclasses import dataclass

import numpy as np

from ._patterson_tables import PATTERSON_HALF
from .errors import UnsupportedLevel

__all__ = [
    "RuleFamily",
    "Rule1D",
    "DeltaRule1D",
    "node_count",
    "make_rule",
    "make_delta_rule",
    "max_level",
    "rule_csv",
]


class RuleFamily(enum.IntEnum):
    TRAPEZOIDAL = 1
    CLENSHAW_CURTIS = 2
    GAUSS_PATTERSON = 3
    GAUSS_LEGENDRE = 4

    @property
    def nested(self):
        return self is not RuleFamily.GAUSS_LEGENDRE

    @classmethod
    def parse(cls, value):
        """Accept a member, the integer ``r``, or a name/alias like ``"gp"``."""
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            key = value.strip().lower().replace("-", "_")
            if key.isdigit():
                return cls(int(key))
            aliases = {
                "tz": cls.TRAPEZOIDAL, "trap": cls.TRAPEZOIDAL,
                "trapezoidal": cls.TRAPEZOIDAL,
                "cc": cls.CLENSHAW_CURTIS, "clenshaw_curtis": cls.CLENSHAW_CURTIS,
                "clenshawcurtis": cls.CLENSHAW_CURTIS,
                "gp": cls.GAUSS_PATTERSON, "patterson": cls.GAUSS_PATTERSON,
                "gauss_patterson": cls.GAUSS_PATTERSON,
                "gausspatterson": cls.GAUSS_PATTERSON,
                "gl": cls.GAUSS_LEGENDRE, "legendre": cls.GAUSS_LEGENDRE,
                "gauss_legendre": cls.GAUSS_LEGENDRE,
                "gausslegendre": cls.GAUSS_LEGENDRE,
            }
            try:
                return aliases[key]
            except KeyError:
                raise ValueError(f"unknown rule family {value!r}") from None
        return cls(int(value))


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Rule1D:
    family: RuleFamily
    level: int
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return len(self.nodes)

    def apply(self, g):
        """Apply the rule to a vectorised univariate callable."""
        return math.fsum(self.weights * np.asarray(g(self.nodes), dtype=float))


@dataclass(frozen=True, eq=False)
class DeltaRule1D:
    family: RuleFamily
    level: int
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return len(self.nodes)

    @property
    def is_zero(self):
        """True when both constituent rules coincide (delayed Patterson)."""
        return not self.weights.any()

    def apply(self, g):
        return math.fsum(self.weights * np.asarray(g(self.nodes), dtype=float))


# Patterson rule sizes and their polynomial exactness.
_PATTERSON_EXACTNESS = ((1, 1), (3, 5), (7, 11), (15, 23), (31, 47),
                        (63, 95), (127, 191), (255, 383))
_PATTERSON_MAX_LEVEL = (383 + 1) // 2


# Largest level for which a rule can be built; None means unbounded.
def max_level(family):
    family = RuleFamily.parse(family)
    if family is RuleFamily.GAUSS_PATTERSON:
        return _PATTERSON_MAX_LEVEL
    if family is RuleFamily.GAUSS_LEGENDRE:
        return None
    # 2**(l-1) + 1 nodes; the Clenshaw-Curtis weight formula is O(n^2)
    return 14 if family is RuleFamily.CLENSHAW_CURTIS else 20


def node_count(family, level):
    """Number of nodes ``n_l`` of ``family`` at ``level`` (``level >= 1``)."""
    family = RuleFamily.parse(family)
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    if family is RuleFamily.GAUSS_LEGENDRE:
        return level
    if family is RuleFamily.GAUSS_PATTERSON:
        need = 2 * level - 1
        for n, exact in _PATTERSON_EXACTNESS:
            if exact >= need:
                return n
        raise UnsupportedLevel(
            f"Gauss-Patterson level {level} needs more than 255 nodes")
    return 1 if level == 1 else 2 ** (level - 1) + 1


def _check_level(family, level):
    top = max_level(family)
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    if top is not None and level > top:
        raise UnsupportedLevel(f"{family.name} level {level} exceeds {top}")


def _mirror(half, center):
    """Full symmetric array from the strictly positive half (ascending)."""
    half = np.asarray(half, dtype=float)
    if center is None:
        return np.concatenate([-half[::-1], half])
    return np.concatenate([-half[::-1], [center], half])


def _trapezoidal(level):
    if level == 1:
        return np.array([0.0]), np.array([2.0])
    n = 2 ** (level - 1) + 1
    h = 2.0 ** (2 - level)
    nodes = np.arange(n) * h - 1.0
    weights = np.full(n, h)
    weights[0] = weights[-1] = h / 2
    return nodes, weights


def _clenshaw_curtis(level):
    if level == 1:
        return np.array([0.0]), np.array([2.0])
    if level == 2:
        coarse = _rule(RuleFamily.CLENSHAW_CURTIS, 1).nodes
        nodes = np.array([-1.0, coarse[0], 1.0])
    else:
        coarse = _rule(RuleFamily.CLENSHAW_CURTIS, level - 1).nodes
        n = 2 ** (level - 1) + 1
        nodes = np.empty(n)
        nodes[::2] = coarse
        half = (n - 1) // 2
        for j in range(1, half, 2):
            x = -math.cos(math.pi * j / (n - 1))
            nodes[j] = x
            nodes[n - 1 - j] = -x
    n = len(nodes)
    weights = np.empty(n)
    weights[0] = weights[-1] = 1.0 / (n * (n - 2))
    kmax = (n - 1) // 2
    k = np.arange(1, kmax + 1)
    halving = np.ones(kmax)
    halving[-1] = 0.5
    coef = halving / (1.0 - 4.0 * k * k)
    for j in range(1, (n + 1) // 2):
        s = math.fsum(coef * np.cos(2.0 * math.pi * j * k / (n - 1)))
        weights[j] = 2.0 / (n - 1) * (1.0 + 2.0 * s)
        weights[n - 1 - j] = weights[j]
    return nodes, weights


def _patterson(level):
    n = node_count(RuleFamily.GAUSS_PATTERSON, level)
    xs, ws = PATTERSON_HALF[n]
    # stored from 0 upward; index 0 is the centre node
    nodes = _mirror(xs[1:], xs[0])
    weights = np.concatenate([np.asarray(ws[1:])[::-1], [ws[0]], ws[1:]])
    return nodes, weights


def _legendre_positive_roots(n, tol=1e-15, maxiter=100):
    """Nonnegative roots of P_n (descending) and P_n' there."""
    m = (n + 1) // 2
    k = np.arange(1, m + 1)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))

    def legendre(x):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for j in range(2, n + 1):
            p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        return p1, dp

    for _ in range(maxiter):
        p, dp = legendre(x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) <= tol:
            break
    if n % 2:
        x[-1] = 0.0
    _, dp = legendre(x)
    return x, dp


def _gauss_legendre(level):
    n = level
    if n == 1:
        return np.array([0.0]), np.array([2.0])
    x, dp = _legendre_positive_roots(n)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    # ascending positive half
    x, w = x[::-1], w[::-1]
    if n % 2:
        nodes = _mirror(x[1:], 0.0)
        weights = np.concatenate([w[1:][::-1], [w[0]], w[1:]])
    else:
        nodes = _mirror(x, None)
        weights = np.concatenate([w[::-1], w])
    return nodes, weights


_BUILDERS = {
    RuleFamily.TRAPEZOIDAL: _trapezoidal,
    RuleFamily.CLENSHAW_CURTIS: _clenshaw_curtis,
    RuleFamily.GAUSS_PATTERSON: _patterson,
    RuleFamily.GAUSS_LEGENDRE: _gauss_legendre,
}


@functools.lru_cache(maxsize=None)
def _rule(family, level):
    nodes, weights = _BUILDERS[family](level)
    return Rule1D(family, level, _frozen(nodes), _frozen(weights))


def make_rule(family, level):
    """The level-``level`` rule of ``family`` (cached, read-only arrays)."""
    family = RuleFamily.parse(family)
    _check_level(family, level)
    return _rule(family, level)


@functools.lru_cache(maxsize=None)
def _delta(family, level):
    fine = _rule(family, level)
    if level == 1:
        return DeltaRule1D(family, 1, fine.nodes, fine.weights)
    coarse = _rule(family, level - 1)
    acc = dict(zip(fine.nodes.tolist(), fine.weights.tolist()))
    for x, w in zip(coarse.nodes.tolist(), coarse.weights.tolist()):
        if family.nested and x not in acc:
            raise AssertionError(f"{family.name} level {level} is not nested")
        acc[x] = acc.get(x, 0.0) - w
    nodes = sorted(acc)
    weights = [acc[x] for x in nodes]
    return DeltaRule1D(family, level, _frozen(nodes), _frozen(weights))


def make_delta_rule(family, level):
    """The difference rule ``J^level - J^(level-1)`` of ``family``."""
    family = RuleFamily.parse(family)
    _check_level(family, level)
    return _delta(family, level)


def rule_csv(family, levels, delta=False):
    """CSV text ``level,node,weight`` (17 significant digits) for ``levels``."""
    out = io.StringIO()
    out.write("level,node,weight\n")
    build = make_delta_rule if delta else make_rule
    for level in levels:
        rule = build(family, level)
        for x, w in zip(rule.nodes, rule.weights):
            out.write(f"{level},{x:.17g},{w:.17g}\n")
    return out.getvalue()
