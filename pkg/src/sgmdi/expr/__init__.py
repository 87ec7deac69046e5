"""Expression IR for integrands.

Nodes are immutable and hash-consed (see :mod:`sgmdi.expr.core`); the
rewrite engine in :mod:`sgmdi.expr.rewrite` turns weighted sums of
partially substituted copies of an integrand into expressions whose size
does not grow with the number of terms.
"""

from .core import (
    Expr, ONE, ZERO, add, canonicalize, const, cos, div, exp, is_const, mul,
    neg, node_count, powi, recip, reset_transcendental_calls, sin, sqrt, sub,
    transcendental_calls, var,
)
from .evaluate import compile_numpy, evaluate
from .rewrite import (
    collect, constant_split, exp_split, factor_common, linearize_trig,
    substitute, weighted_sum,
)
from .text import parse, to_text

__all__ = [
    "Expr", "ONE", "ZERO", "add", "canonicalize", "collect", "compile_numpy",
    "const", "constant_split", "cos", "div", "evaluate", "exp", "exp_split",
    "factor_common", "is_const", "linearize_trig", "mul", "neg", "node_count",
    "parse", "powi", "recip", "reset_transcendental_calls", "sin", "sqrt",
    "sub", "substitute", "to_text", "transcendental_calls", "var",
    "weighted_sum",
]
