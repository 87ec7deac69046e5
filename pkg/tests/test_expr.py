import math
import pickle
import random
import threading

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from sgmdi.errors import ExprSyntaxError, NonFiniteIntegrand, UnboundDimension
from sgmdi.expr import (
    ONE, ZERO, add, collect, compile_numpy, const, cos, div, evaluate, exp,
    exp_split, factor_common, linearize_trig, mul, neg, node_count, parse, powi,
    recip, reset_transcendental_calls, sin, sqrt, sub, substitute, to_text,
    transcendental_calls, var, weighted_sum,
)

x1, x2, x3 = var(0), var(1), var(2)


# ---------------------------------------------------------------- core

def test_hash_consing_identity():
    assert add(x1, x2) is add(x2, x1)
    assert mul(const(2.0), x1) is mul(x1, const(2.0))
    assert exp(add(x1, x2)) is exp(add(x2, x1))


def test_like_terms_and_powers():
    assert add(x1, x2, x1) is add(mul(const(2.0), x1), x2)
    assert mul(x1, x1) is powi(x1, 2)
    assert mul(x1, recip(x1)) is ONE
    assert sub(x1, x1) is ZERO


def test_no_neg_node():
    n = neg(x1)
    assert n.kind == "mul" and n.args[0] is const(-1.0)
    assert neg(neg(x1)) is x1


def test_negative_power_is_recip():
    e = powi(x1, -2)
    assert e.kind == "recip" and e.args[0] is powi(x1, 2)


def test_constant_folding():
    assert add(const(1.0), const(2.0)) is const(3.0)
    assert exp(ZERO) is ONE
    assert mul(ZERO, exp(x1)) is ZERO
    assert div(const(1.0), const(4.0)) is const(0.25)


def test_fold_overflow_raises():
    with pytest.raises(NonFiniteIntegrand):
        exp(const(1000.0))
    with pytest.raises(NonFiniteIntegrand):
        recip(ZERO)


def test_immutable_and_not_picklable():
    with pytest.raises(AttributeError):
        x1.kind = "const"
    with pytest.raises(TypeError):
        pickle.dumps(add(x1, x2))


def test_free_vars_and_size():
    e = parse("exp(x1 + x3) * x2", 3)
    assert e.free == frozenset({0, 1, 2})
    assert node_count(x1) == 1
    assert node_count(add(x1, x2)) == 3


def test_interning_thread_safe():
    results = []
    barrier = threading.Barrier(8)

    def build():
        barrier.wait()
        out = []
        for k in range(300):
            out.append(add(mul(const(float(k)), exp(var(k % 7))), sin(var(3))))
        results.append(out)

    threads = [threading.Thread(target=build) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    first = results[0]
    for other in results[1:]:
        assert all(a is b for a, b in zip(first, other))


# ---------------------------------------------------------------- text

def test_parse_examples():
    assert parse("x1 + x2 + x1") is add(mul(const(2.0), x1), x2)
    f = parse("exp(5*x1^2+5*x2^2)", 2)
    assert f is exp(add(mul(const(5.0), powi(x1, 2)), mul(const(5.0), powi(x2, 2))))
    g = parse("(1/sqrt(2*pi))*exp(-0.5*(sum(i=1..d, x_i^2)))", 10)
    assert g.free == frozenset(range(10))
    X = np.full((1, 10), 0.1)
    expect = math.exp(-0.5 * 10 * 0.01) / math.sqrt(2 * math.pi)
    assert abs(compile_numpy(g, 10)(X)[0] - expect) < 1e-15


def test_parse_sum_prod_and_dim():
    assert parse("sum(i=1..0, x_i)", 3) is ZERO
    assert parse("prod(i=2..1, x_i)", 3) is ONE
    assert parse("x_d", 4) is var(3)
    assert parse("prod(i=1..d, 1/(0.81 + (x_i - 0.6)^2))", 3).free == frozenset({0, 1, 2})
    assert parse("sum(i=1..3, (-1)^(i+1)*x_i)") is add(x1, neg(x2), x3)


def test_parse_powers():
    assert parse("x1^0.5") is sqrt(x1)
    assert parse("x1^-0.5") is recip(sqrt(x1))
    assert parse("2^3") is const(8.0)
    assert parse("x1^2^1") is powi(x1, 2)


def test_unbound_dimension():
    with pytest.raises(UnboundDimension):
        parse("sum(i=1..d, x_i)")


@pytest.mark.parametrize("text, column", [
    ("x1 + ", 5),
    ("exp(x1", 6),
    ("x1 $ x2", 3),
    ("foo(x1)", 0),
    ("x1^x2", 2),
])
def test_syntax_errors_carry_position(text, column):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text, 2)
    assert info.value.position == column
    assert f"column {column}" in str(info.value)


def _trees():
    # trees are drawn as nested tuples and built afterwards, so that folds
    # which leave the finite range can be discarded
    leaves = st.one_of(
        st.tuples(st.just("var"), st.integers(0, 4)),
        st.tuples(st.just("const"), st.floats(-5, 5, allow_nan=False)),
    )

    def extend(children):
        return st.one_of(
            st.tuples(st.sampled_from(["add", "mul"]), children, children),
            st.tuples(st.just("pow"), children, st.integers(-3, 3)),
            st.tuples(st.sampled_from(["exp", "sin", "cos"]), children),
        )

    return st.recursive(leaves, extend, max_leaves=12)


_BUILD = {"add": add, "mul": mul, "exp": exp, "sin": sin, "cos": cos}


def _build(t):
    op = t[0]
    if op == "var":
        return var(t[1])
    if op == "const":
        return const(t[1])
    if op == "pow":
        return powi(_build(t[1]), t[2])
    return _BUILD[op](*[_build(a) for a in t[1:]])


@settings(max_examples=300, deadline=None)
@given(_trees())
def test_print_parse_round_trip(tree):
    try:
        e = _build(tree)
    except (NonFiniteIntegrand, ZeroDivisionError, OverflowError):
        assume(False)
    assert parse(to_text(e)) is e


# ---------------------------------------------------------------- evaluate

def test_evaluate_examples():
    assert evaluate(const(7.0), {}) == 7.0
    assert evaluate(parse("exp(5*x1^2+5*x2^2)"), {0: 0.0, 1: 0.0}) == 1.0
    assert abs(evaluate(parse("cos(2*pi + x1)"), {0: 0.0}) - 1.0) <= 1e-15


def test_evaluate_missing_var():
    with pytest.raises(KeyError):
        evaluate(add(x1, x2), {0: 1.0})


def test_evaluate_non_finite():
    with pytest.raises(NonFiniteIntegrand):
        evaluate(recip(x1), {0: 0.0})


def test_compile_numpy_matches_evaluate():
    e = parse("exp(x1 - x2^2) * sin(x3) / (1 + x1^2) + sqrt(2 + x2)", 3)
    F = compile_numpy(e, 3)
    rng = np.random.default_rng(1)
    X = rng.uniform(-1, 1, (50, 3))
    got = F(X)
    for row, v in zip(X, got):
        assert abs(v - evaluate(e, dict(enumerate(row)))) <= 1e-14 * max(1, abs(v))


def test_transcendental_counter():
    reset_transcendental_calls()
    e = parse("exp(x1) + sin(x2)")
    evaluate(e, {0: 0.1, 1: 0.2})
    assert transcendental_calls() == 2


# ---------------------------------------------------------------- rewrite

def test_substitute_annihilator():
    assert substitute(mul(x1, x2), {0: 0.0}) is ZERO


def test_substitute_exp_split():
    f = parse("exp(5*x1^2+5*x2^2)")
    got = substitute(f, {0: 0.5})
    assert got is mul(const(math.exp(1.25)), exp(mul(const(5.0), powi(x2, 2))))


def test_substitute_trig_linearised():
    c = 0.3
    got = linearize_trig(substitute(parse("cos(2*pi + x1 + x2)"), {0: c}))
    a = 2 * math.pi + c
    want = add(mul(const(math.cos(a)), cos(x2)), mul(const(-math.sin(a)), sin(x2)))
    for y in (-0.7, 0.1, 0.9):
        assert abs(evaluate(got, {1: y}) - evaluate(want, {1: y})) < 1e-15
    assert {n.kind for n in got.args} <= {"mul"}


def test_substitute_skips_disjoint_subtrees():
    sub_tree = exp(mul(x2, x3))
    e = mul(x1, sub_tree)
    memo = {}
    assert substitute(e, {0: 2.0}, memo=memo) is mul(const(2.0), sub_tree)
    assert sub_tree not in memo


def test_substitute_composition_modulo_rounding():
    e = parse("exp(x1*x2 - x3^2) * cos(1 + x1 + x3) / (1.5 + x2)")
    a = {0: 0.3, 1: -0.4, 2: 0.8}
    joint = substitute(e, a)
    one_by_one = substitute(substitute(substitute(e, {0: 0.3}), {1: -0.4}), {2: 0.8})
    assert joint.kind == one_by_one.kind == "const"
    assert abs(joint.value - one_by_one.value) <= 1e-14 * abs(joint.value)
    assert abs(joint.value - evaluate(e, a)) <= 1e-14 * abs(joint.value)


def test_exp_split_idempotent():
    e = exp(add(const(1.0), x1))
    once = exp_split(e)
    assert exp_split(once) is once
    assert linearize_trig(linearize_trig(cos(add(x1, const(2.0))))) is \
        linearize_trig(cos(add(x1, const(2.0))))


def test_weighted_sum_shared_factor():
    R = exp(mul(const(5.0), powi(x2, 2)))
    terms = [(0.5, mul(const(3.0), R)), (0.25, mul(const(-2.0), R))]
    assert weighted_sum(terms) is mul(const(0.5 * 3 - 0.25 * 2), R)


def test_weighted_sum_exp_family():
    f = parse("exp(5*x1^2+5*x2^2)")
    nodes = [-0.7, 0.0, 0.7]
    weights = [5 / 9, 8 / 9, 5 / 9]
    terms = [(w, substitute(f, {0: t})) for w, t in zip(weights, nodes)]
    got = weighted_sum(terms)
    coeff = math.fsum(w * math.exp(5 * t * t) for w, t in zip(weights, nodes))
    assert got.kind == "mul" and got.args[1] is exp(mul(const(5.0), powi(x2, 2)))
    assert abs(got.args[0].value - coeff) <= 1e-15 * coeff


def test_weighted_sum_trig_family():
    g = parse("cos(x1 + x2 + x3)")
    thetas, ws = [-0.5, 0.2, 0.9], [0.3, 1.1, 0.6]
    got = weighted_sum([(w, substitute(g, {0: t})) for w, t in zip(ws, thetas)])
    A = math.fsum(w * math.cos(t) for w, t in zip(ws, thetas))
    B = -math.fsum(w * math.sin(t) for w, t in zip(ws, thetas))
    S = add(x2, x3)
    want = add(mul(const(A), cos(S)), mul(const(B), sin(S)))
    for y in ((0.1, 0.2), (-0.8, 0.4)):
        a = {1: y[0], 2: y[1]}
        assert abs(evaluate(got, a) - evaluate(want, a)) < 1e-14
    assert node_count(got) <= node_count(want)


def test_factor_common_and_collect():
    R = exp(x2)
    common, cof = factor_common([(1.0, mul(x1, R)), (0.5, mul(const(2.0), R))])
    assert common == [R] and cof == [(1.0, x1), (1.0, ONE)]
    assert collect([(1.0, x1), (2.0, x1), (0.5, x2)]) is add(mul(const(3.0), x1),
                                                           mul(const(0.5), x2))


FAMILY_TEXTS = [
    "exp(5*sum(i=1..d, x_i^2))",
    "sin(2*pi + 10*x1^2 + 5*sum(i=2..d, x_i^2))",
    "(1/sqrt(2*pi))*exp(-0.5*sum(i=1..d, x_i^2))",
    "prod(i=1..d, 1/(0.81 + (x_i - 0.6)^2))",
    "exp(sum(i=1..d, (-1)^(i+1)*x_i))",
    "cos(2*pi + sum(i=1..d, x_i))",
    "exp(x1*x2) + sin(x3 - x1)",  # not separable
]


@pytest.mark.parametrize("text", FAMILY_TEXTS)
def test_weighted_sum_sound(text):
    # the rewritten sum must agree with the plain weighted evaluation
    d = 4
    f = parse(text, d)
    rng = random.Random(7)
    nodes = [rng.uniform(-1, 1) for _ in range(6)]
    ws = [rng.uniform(-1, 1) for _ in range(6)]
    terms = [(w, substitute(f, {0: t})) for w, t in zip(ws, nodes)]
    S = weighted_sum(terms)
    for _ in range(20):
        a = {i: rng.uniform(-1, 1) for i in range(1, d)}
        full = math.fsum(w * evaluate(f, {0: t, **a}) for w, t in zip(ws, nodes))
        got = evaluate(S, a)
        scale = math.fsum(abs(w * evaluate(f, {0: t, **a})) for w, t in zip(ws, nodes))
        assert abs(got - full) <= 1e-13 * scale


@pytest.mark.parametrize("text", FAMILY_TEXTS[:6])
def test_collapse_size_independent_of_terms(text):
    d = 6
    f = parse(text, d)
    sizes = set()
    for K in (3, 7, 15, 31):
        nodes = np.linspace(-0.9, 0.9, K)
        terms = [(1.0 / K, substitute(f, {0: float(t)})) for t in nodes]
        sizes.add(node_count(weighted_sum(terms)))
    assert len(sizes) == 1
