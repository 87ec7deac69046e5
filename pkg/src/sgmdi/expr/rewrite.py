"""Substitution and the collapse pipeline behind :func:`weighted_sum`.

The pipeline, applied to each weighted term in order:

1. canonical folding (done by the constructors themselves),
2. ``exp_split``: ``exp(c + r) -> e^c * exp(r)``,
3. ``linearize_trig``: ``sin(c + r) -> sin c cos r + cos c sin r`` and the
   matching cosine expansion,
4. ``factor_common``: factors shared by every term (by node identity) are
   pulled out of the sum,
5. ``collect``: monomials with the same non-constant part are merged by
   summing coefficients exactly rounded,
6. anything left is emitted as a literal sum of scaled terms.

Every rewrite strictly reduces the number of transcendental nodes whose
argument carries a constant, so the passes terminate. Nothing is expanded
unless a constant is extracted by it.
"""

import math

from . import core
from .core import ADD, CONST, COS, EXP, MUL, SIN, VAR, Expr

__all__ = [
    "substitute", "exp_split", "linearize_trig", "factor_common",
    "collect", "weighted_sum",
]


def _transform(e, local, memo=None):
    """Bottom-up rewrite applying ``local`` to each rebuilt node."""
    if memo is None:
        memo = {}

    def go(n):
        if not n.args:
            return n
        r = memo.get(n)
        if r is None:
            args = [go(a) for a in n.args]
            if all(a is b for a, b in zip(args, n.args)):
                r = local(n)
            else:
                r = local(core.rebuild(n, args))
            memo[n] = r
        return r

    return go(e)


def _const_part(arg):
    """Split an Add argument into ``(c, rest)``; ``c`` is None if absent."""
    if arg.kind == ADD and arg.args[0].kind == CONST:
        return arg.args[0].value, core.add(*arg.args[1:])
    return None, arg


def _exp_split_local(n):
    if n.kind == EXP:
        c, rest = _const_part(n.args[0])
        if c is not None:
            return core.mul(core.exp(core.const(c)), core.exp(rest))
    return n


def _trig_local(n):
    if n.kind in (SIN, COS):
        c, rest = _const_part(n.args[0])
        if c is not None:
            cc = core.cos(core.const(c))
            sc = core.sin(core.const(c))
            if n.kind == SIN:
                return core.add(core.mul(sc, core.cos(rest)),
                                core.mul(cc, core.sin(rest)))
            return core.add(core.mul(cc, core.cos(rest)),
                            core.mul(core.neg(sc), core.sin(rest)))
    return n


def exp_split(e, memo=None):
    """Pull additive constants out of every ``exp`` argument."""
    return _transform(e, _exp_split_local, memo)


def linearize_trig(e, memo=None):
    """Pull additive constants out of every ``sin``/``cos`` argument."""
    return _transform(e, _trig_local, memo)


def _split_local(n):
    return _trig_local(_exp_split_local(n))


def constant_split(e, memo=None):
    """``exp_split`` and ``linearize_trig`` in a single pass."""
    return _transform(e, _split_local, memo)


def substitute(e, assignment, memo=None, split=True):
    """Replace variables by constants and re-canonicalise.

    Parameters
    ----------
    e : Expr
    assignment : dict
        ``{variable index: value}``; may be partial.
    memo : dict, optional
        Cache shared between calls with the *same* assignment, so that a
        subexpression common to several inputs is processed once.
    split : bool
        Apply ``exp_split`` to the result (pulls the freshly created
        constants out of exponentials).
    """
    if not assignment:
        return e
    keys = frozenset(assignment)
    consts = {i: core.const(v) for i, v in assignment.items()}
    if memo is None:
        memo = {}

    def go(n):
        if n.kind == VAR:
            return consts.get(n.value, n)
        if not n.args or keys.isdisjoint(n.free):
            return n
        r = memo.get(n)
        if r is None:
            r = core.rebuild(n, [go(a) for a in n.args])
            if split:
                r = _exp_split_local(r)
            memo[n] = r
        return r

    return go(e)


def _factors(e):
    """Multiplicative factors of ``e`` except its constant, with multiplicity."""
    if e.kind == MUL:
        return [a for a in e.args if a.kind != CONST]
    if e.kind == CONST:
        return []
    return [e]


def _count(items):
    counts = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    return counts


def factor_common(terms):
    """Split off factors shared by every term.

    Returns ``(common, cofactors)`` with ``terms[k][1] == prod(common) *
    cofactors[k][1]`` for every ``k``.
    """
    if len(terms) < 2:
        return [], list(terms)
    shared = None
    for _, e in terms:
        counts = _count(_factors(e))
        if shared is None:
            shared = counts
        else:
            shared = {f: min(k, counts[f]) for f, k in shared.items() if f in counts}
        if not shared:
            return [], list(terms)
    common = []
    for f, k in sorted(shared.items(), key=lambda fk: fk[0].key):
        common.extend([f] * k)
    out = []
    for c, e in terms:
        left = dict(shared)
        keep = []
        coeff = 1.0
        for a in (e.args if e.kind == MUL else (e,)):
            if a.kind == CONST:
                coeff = a.value
            elif left.get(a, 0) > 0:
                left[a] -= 1
            else:
                keep.append(a)
        out.append((c * coeff, core.mul(*keep) if keep else core.ONE))
    return common, out


def collect(terms):
    """Sum of ``c * e`` with like monomials merged (exactly rounded)."""
    consts = []
    coeffs = {}
    order = []
    for c, e in terms:
        parts = e.args if e.kind == ADD else (e,)
        for t in parts:
            k, rest = core.split_coeff(t)
            if rest is None:
                consts.append(c * k)
                continue
            if rest not in coeffs:
                coeffs[rest] = []
                order.append(rest)
            coeffs[rest].append(c * k)
    out = [core.const(math.fsum(consts))] if consts else []
    for rest in order:
        s = math.fsum(coeffs[rest])
        if s != 0.0:
            out.append(core.mul(core.const(s), rest))
    return core.add(*out) if out else core.ZERO


def weighted_sum(terms, memo=None):
    """Expression for ``sum(c_k * e_k)`` built by the collapse pipeline.

    Parameters
    ----------
    terms : iterable of (float, Expr)
    memo : dict, optional
        Cache for the constant-splitting pass, reusable across calls.

    For separable and linear-phase integrands the result has a size that
    does not depend on the number of terms.
    """
    if memo is None:
        memo = {}
    split = [(float(c), constant_split(e, memo)) for c, e in terms if c != 0.0]
    if not split:
        return core.ZERO
    common, cofactors = factor_common(split)
    return core.mul(*common, collect(cofactors))


def scale(c, e):
    """``c * e`` as an Expr (constant folded)."""
    if not isinstance(e, Expr):
        raise TypeError("Expr expected")
    return core.mul(core.const(c), e)
