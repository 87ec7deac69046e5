"""Hash-consed expression nodes and canonicalising constructors.

Every node is built through the constructor functions below (``const``,
``var``, ``add``, ``mul``, ...), which return canonical forms:

* ``Add``/``Mul`` are flattened, have at least two operands, at most one
  constant operand (placed first) and the rest sorted by :attr:`Expr.key`.
* like terms are collected in ``Add`` (``x + x -> 2*x``) and powers are
  combined in ``Mul`` (``x*x -> x^2``).
* a lone numeric coefficient is distributed over an ``Add``.
* negative integer powers become ``Recip(PowInt(x, k))``; there is no
  ``Neg`` node, ``-x`` is ``Mul(-1, x)``.
* constants are folded; a fold that overflows or yields NaN raises
  :class:`~sgmdi.errors.NonFiniteIntegrand`.

Identical structures are the same Python object (hash-consing), so
``a is b`` is structural equality. The intern table is process-wide and
guarded by a lock: nodes may be built from several threads at once.
Entries are weak, a node disappears from the table once unreferenced.
"""

import hashlib
import math
import struct
import threading
import weakref

from ..errors import NonFiniteIntegrand

__all__ = [
    "Expr", "const", "var", "add", "mul", "neg", "sub", "div", "recip",
    "powi", "exp", "sin", "cos", "sqrt", "is_const", "split_coeff",
    "node_count", "transcendental_calls", "reset_transcendental_calls",
    "ZERO", "ONE",
]

# Kinds, in their canonical rank order.
CONST, VAR, ADD, MUL, RECIP, POW, EXP, SIN, COS, SQRT = (
    "const", "var", "add", "mul", "recip", "pow", "exp", "sin", "cos", "sqrt")
_RANK = {k: i for i, k in enumerate(
    (CONST, VAR, POW, RECIP, MUL, ADD, EXP, SIN, COS, SQRT))}
UNARY = (RECIP, EXP, SIN, COS, SQRT)

_table = weakref.WeakValueDictionary()
_lock = threading.Lock()
_NO_VARS = frozenset()

# Scalar transcendental evaluations (constant folding and ``evaluate``).
_calls = [0]


def transcendental_calls():
    """Number of scalar exp/sin/cos/sqrt evaluations since the last reset."""
    return _calls[0]


def reset_transcendental_calls():
    _calls[0] = 0


class Expr:
    """An interned expression node. Build through the constructors only.

    Attributes
    ----------
    kind : str
        One of ``const var add mul recip pow exp sin cos sqrt``.
    args : tuple of Expr
        Operands (empty for leaves).
    value : float or int or None
        Constant value, 0-based variable index, or integer exponent.
    free : frozenset of int
        Variable indices occurring below this node.
    key : tuple
        Deterministic total order used to sort operands.
    """

    __slots__ = ("kind", "args", "value", "free", "key", "digest", "__weakref__")

    def __setattr__(self, name, value):
        raise AttributeError("Expr nodes are immutable")

    def __reduce__(self):
        raise TypeError("Expr nodes are interned and cannot be pickled")

    def __repr__(self):
        from .text import to_text
        return f"Expr({to_text(self)!r})"

    def __str__(self):
        from .text import to_text
        return to_text(self)

    # Operator sugar so that callers can write ``x0 * x1 + 2``.
    def __add__(self, other):
        return add(self, _lift(other))

    __radd__ = __add__

    def __mul__(self, other):
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __sub__(self, other):
        return sub(self, _lift(other))

    def __rsub__(self, other):
        return sub(_lift(other), self)

    def __truediv__(self, other):
        return div(self, _lift(other))

    def __rtruediv__(self, other):
        return div(_lift(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, k):
        if isinstance(k, int):
            return powi(self, k)
        if k == 0.5:
            return sqrt(self)
        raise ValueError("only integer powers (and 0.5) are supported")


def _lift(x):
    return x if isinstance(x, Expr) else const(x)


def _intern(kind, args, value):
    h = hashlib.blake2b(digest_size=16)
    h.update(kind.encode())
    if kind == CONST:
        h.update(struct.pack("<d", value))
    elif value is not None:
        h.update(struct.pack("<q", value))
    for a in args:
        h.update(a.digest)
    digest = h.digest()
    with _lock:
        node = _table.get(digest)
        if node is not None:
            return node
        node = object.__new__(Expr)
        if kind == VAR:
            free = frozenset((value,))
        elif not args:
            free = _NO_VARS
        elif len(args) == 1:
            free = args[0].free
        else:
            free = frozenset().union(*(a.free for a in args))
        first = min(free) if free else -1
        sets = object.__setattr__
        sets(node, "kind", kind)
        sets(node, "args", args)
        sets(node, "value", value)
        sets(node, "free", free)
        sets(node, "digest", digest)
        sets(node, "key", (kind != CONST, first, _RANK[kind], digest))
        _table[digest] = node
        return node


def _finite(v):
    if not math.isfinite(v):
        raise NonFiniteIntegrand(f"constant folding produced {v!r}")
    return v


def const(v):
    v = float(v)
    _finite(v)
    if v == 0.0:
        v = 0.0  # -0.0 and 0.0 share one node
    return _intern(CONST, (), v)


def var(i):
    """Coordinate ``i`` (0-based)."""
    i = int(i)
    if i < 0:
        raise ValueError(f"variable index must be >= 0, got {i}")
    return _intern(VAR, (), i)


ZERO = const(0.0)
ONE = const(1.0)


def is_const(e):
    return e.kind == CONST


def split_coeff(e):
    """``(c, rest)`` with ``e == c * rest`` and ``rest`` free of a constant.

    ``rest`` is ``None`` for a bare constant.
    """
    if e.kind == CONST:
        return e.value, None
    if e.kind == MUL and e.args[0].kind == CONST:
        rest = e.args[1:]
        return e.args[0].value, rest[0] if len(rest) == 1 else _intern(MUL, rest, None)
    return 1.0, e


def _sorted(xs):
    return tuple(sorted(xs, key=lambda n: n.key))


def add(*xs):
    consts = []
    coeffs = {}
    order = []

    def visit(x):
        if x.kind == ADD:
            for a in x.args:
                visit(a)
            return
        c, rest = split_coeff(x)
        if rest is None:
            consts.append(c)
            return
        if rest not in coeffs:
            coeffs[rest] = []
            order.append(rest)
        coeffs[rest].append(c)

    for x in xs:
        visit(x)
    terms = []
    for rest in order:
        c = math.fsum(coeffs[rest])
        if c != 0.0:
            terms.append(rest if c == 1.0 else _scaled(c, rest))
    c = _finite(math.fsum(consts)) if consts else 0.0
    if not terms:
        return const(c)
    terms = _sorted(terms)
    if c != 0.0:
        terms = (const(c),) + terms
    if len(terms) == 1:
        return terms[0]
    return _intern(ADD, terms, None)


def _scaled(c, rest):
    """``c * rest`` for a constant-free ``rest`` that is not an Add."""
    if rest.kind == MUL:
        return _intern(MUL, (const(c),) + rest.args, None)
    return _intern(MUL, (const(c), rest), None)


def mul(*xs):
    consts = []
    powers = {}
    order = []

    def visit(x):
        if x.kind == MUL:
            for a in x.args:
                visit(a)
            return
        if x.kind == CONST:
            consts.append(x.value)
            return
        if x.kind == POW:
            base, k = x.args[0], x.value
        elif x.kind == RECIP:
            inner = x.args[0]
            if inner.kind == POW:
                base, k = inner.args[0], -inner.value
            else:
                base, k = inner, -1
        else:
            base, k = x, 1
        if base not in powers:
            powers[base] = 0
            order.append(base)
        powers[base] += k

    for x in xs:
        visit(x)
    c = 1.0
    for v in sorted(consts):
        c *= v
    _finite(c)
    if c == 0.0:
        return ZERO
    factors = []
    for base in order:
        k = powers[base]
        if k > 0:
            factors.append(base if k == 1 else _intern(POW, (base,), k))
        elif k < 0:
            inner = base if k == -1 else _intern(POW, (base,), -k)
            factors.append(_intern(RECIP, (inner,), None))
    if not factors:
        return const(c)
    if len(factors) == 1:
        f = factors[0]
        if c == 1.0:
            return f
        if f.kind == ADD:
            return add(*(mul(const(c), t) for t in f.args))
    factors = _sorted(factors)
    if c != 1.0:
        factors = (const(c),) + factors
    return _intern(MUL, factors, None)


def neg(x):
    return mul(const(-1.0), x)


def sub(a, b):
    return add(a, neg(b))


def div(a, b):
    return mul(a, recip(b))


def recip(x):
    if x.kind == CONST:
        if x.value == 0.0:
            raise NonFiniteIntegrand("division by zero in constant folding")
        return const(1.0 / x.value)
    if x.kind == RECIP:
        return x.args[0]
    if x.kind == MUL:
        return mul(*(recip(a) for a in x.args))
    return _intern(RECIP, (x,), None)


def powi(x, k):
    """Integer power ``x**k``."""
    if isinstance(k, float) and k.is_integer():
        k = int(k)
    if not isinstance(k, int):
        raise TypeError(f"integer exponent expected, got {k!r}")
    if k == 0:
        return ONE
    if k == 1:
        return x
    if k < 0:
        return recip(powi(x, -k))
    if x.kind == CONST:
        try:
            return const(x.value ** k)
        except OverflowError:
            raise NonFiniteIntegrand("power overflow in constant folding") from None
    if x.kind == POW:
        return powi(x.args[0], x.value * k)
    if x.kind == MUL:
        return mul(*(powi(a, k) for a in x.args))
    if x.kind == RECIP:
        return recip(powi(x.args[0], k))
    return _intern(POW, (x,), k)


def _fold(fn, v):
    _calls[0] += 1
    try:
        return const(fn(v))
    except (OverflowError, ValueError):
        raise NonFiniteIntegrand(f"{fn.__name__}({v!r}) is not finite") from None


def exp(x):
    if x.kind == CONST:
        return _fold(math.exp, x.value)
    return _intern(EXP, (x,), None)


def sin(x):
    if x.kind == CONST:
        return _fold(math.sin, x.value)
    return _intern(SIN, (x,), None)


def cos(x):
    if x.kind == CONST:
        return _fold(math.cos, x.value)
    return _intern(COS, (x,), None)


def sqrt(x):
    if x.kind == CONST:
        return _fold(math.sqrt, x.value)
    return _intern(SQRT, (x,), None)


_UNARY_BUILD = {RECIP: recip, EXP: exp, SIN: sin, COS: cos, SQRT: sqrt}


def rebuild(e, args):
    """Rebuild ``e`` with new operands through the canonical constructors."""
    k = e.kind
    if k == ADD:
        return add(*args)
    if k == MUL:
        return mul(*args)
    if k == POW:
        return powi(args[0], e.value)
    return _UNARY_BUILD[k](args[0])


def canonicalize(e):
    """Rebuild every node bottom-up. Idempotent; returns ``e`` itself."""
    memo = {}

    def go(n):
        if not n.args:
            return n
        r = memo.get(n)
        if r is None:
            r = rebuild(n, [go(a) for a in n.args])
            memo[n] = r
        return r

    return go(e)


def node_count(e):
    """Number of distinct nodes in the DAG rooted at ``e``."""
    seen = set()
    stack = [e]
    while stack:
        n = stack.pop()
        if n in seen:
            continue
        seen.add(n)
        stack.extend(n.args)
    return len(seen)
