"""Scalar and vectorised evaluation of expressions."""

import math

import numpy as np

from . import core
from .core import ADD, CONST, COS, EXP, MUL, POW, RECIP, SIN, SQRT, VAR
from ..errors import NonFiniteIntegrand

__all__ = ["evaluate", "compile_numpy"]

_SCALAR = {EXP: math.exp, SIN: math.sin, COS: math.cos, SQRT: math.sqrt}


def evaluate(e, assignment):
    """IEEE double value of ``e`` under ``assignment``.

    ``assignment`` maps 0-based variable indices to values (a dict or a
    sequence). Operands are combined left to right in canonical order, so
    the result is reproducible. Raises NonFiniteIntegrand on overflow,
    NaN, or a variable without a value.
    """
    memo = {}

    def go(n):
        k = n.kind
        if k == CONST:
            return n.value
        if k == VAR:
            try:
                return float(assignment[n.value])
            except (KeyError, IndexError):
                raise KeyError(f"no value for x{n.value + 1}") from None
        r = memo.get(n)
        if r is not None:
            return r
        if k == ADD:
            r = 0.0
            for a in n.args:
                r += go(a)
        elif k == MUL:
            r = 1.0
            for a in n.args:
                r *= go(a)
        elif k == POW:
            r = go(n.args[0]) ** n.value
        elif k == RECIP:
            v = go(n.args[0])
            if v == 0.0:
                raise NonFiniteIntegrand("division by zero")
            r = 1.0 / v
        else:
            core._calls[0] += 1
            try:
                r = _SCALAR[k](go(n.args[0]))
            except (OverflowError, ValueError):
                raise NonFiniteIntegrand(f"{k} argument out of range") from None
        if not math.isfinite(r):
            raise NonFiniteIntegrand(f"non-finite intermediate in {k}")
        memo[n] = r
        return r

    return go(e)


_VECTOR = {EXP: np.exp, SIN: np.sin, COS: np.cos, SQRT: np.sqrt}


def compile_numpy(e, d=None):
    """Return ``F(X)`` evaluating ``e`` on the rows of an ``(n, d)`` array.

    The returned array always has shape ``(n,)``. Non-finite values are
    passed through (callers check); numpy warnings are silenced.
    """
    if d is not None and e.free and max(e.free) >= d:
        raise ValueError(f"expression uses x{max(e.free) + 1} but d={d}")

    def F(X):
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        n = X.shape[0]
        memo = {}

        def go(node):
            k = node.kind
            if k == CONST:
                return node.value
            if k == VAR:
                return X[:, node.value]
            r = memo.get(node)
            if r is not None:
                return r
            if k == ADD:
                r = go(node.args[0])
                for a in node.args[1:]:
                    r = r + go(a)
            elif k == MUL:
                r = go(node.args[0])
                for a in node.args[1:]:
                    r = r * go(a)
            elif k == POW:
                r = go(node.args[0]) ** node.value
            elif k == RECIP:
                r = 1.0 / go(node.args[0])
            else:
                arg = go(node.args[0])
                core._calls[0] += np.size(arg)
                r = _VECTOR[k](arg)
            memo[node] = r
            return r

        with np.errstate(all="ignore"):
            out = go(e)
        return np.broadcast_to(np.asarray(out, dtype=float), (n,)).copy()

    return F
