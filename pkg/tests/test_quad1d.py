import math

import numpy as np
import pytest

from sgmdi.errors import UnsupportedLevel
from sgmdi.quad1d import (RuleFamily, make_delta_rule, make_rule, max_level,
                          node_count, rule_csv)

FAMILIES = list(RuleFamily)
NESTED = [f for f in FAMILIES if f.nested]


def monomial_integral(k):
    return 0.0 if k % 2 else 2.0 / (k + 1)


def test_family_parse_aliases():
    assert RuleFamily.parse(3) is RuleFamily.GAUSS_PATTERSON
    assert RuleFamily.parse("gl") is RuleFamily.GAUSS_LEGENDRE
    assert RuleFamily.parse("4") is RuleFamily.GAUSS_LEGENDRE
    with pytest.raises(Exception):
        RuleFamily.parse("simpson")


@pytest.mark.parametrize("family, level, n", [
    (RuleFamily.CLENSHAW_CURTIS, 1, 1),
    (RuleFamily.CLENSHAW_CURTIS, 4, 9),
    (RuleFamily.TRAPEZOIDAL, 3, 5),
    (RuleFamily.GAUSS_LEGENDRE, 7, 7),
])
def test_node_count_examples(family, level, n):
    assert node_count(family, level) == n
    assert len(make_rule(family, level)) == n


def test_patterson_delayed_counts():
    got = [node_count(RuleFamily.GAUSS_PATTERSON, l) for l in range(1, 11)]
    assert got == [1, 3, 3, 7, 7, 7, 15, 15, 15, 15]
    assert node_count(3, 12) == 15 and node_count(3, 13) == 31
    assert node_count(3, 192) == 255
    with pytest.raises(UnsupportedLevel):
        node_count(3, 193)
    with pytest.raises(UnsupportedLevel):
        make_rule(3, 193)


def test_level_must_be_positive():
    with pytest.raises(ValueError):
        node_count(1, 0)
    with pytest.raises(ValueError):
        make_rule(4, 0)


def test_max_level():
    assert max_level(3) == 192
    assert max_level(4) is None


def test_trapezoidal_level2():
    r = make_rule(1, 2)
    assert r.nodes.tolist() == [-1.0, 0.0, 1.0]
    assert r.weights.tolist() == [0.5, 1.0, 0.5]


def test_clenshaw_curtis_level2():
    r = make_rule(2, 2)
    np.testing.assert_allclose(r.nodes, [-1, 0, 1], atol=1e-15)
    np.testing.assert_allclose(r.weights, [1 / 3, 4 / 3, 1 / 3], rtol=1e-14)


def test_gauss_legendre_level2():
    r = make_rule(4, 2)
    np.testing.assert_allclose(r.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], rtol=1e-15)
    np.testing.assert_allclose(r.weights, [1, 1], rtol=1e-15)


def test_level1_is_midpoint():
    for fam in FAMILIES:
        r = make_rule(fam, 1)
        assert r.nodes.tolist() == [0.0] and r.weights.tolist() == [2.0]


def test_patterson_seven_contains_gauss3():
    nodes = make_rule(3, 4).nodes
    for x in (-math.sqrt(0.6), 0.0, math.sqrt(0.6)):
        assert np.min(np.abs(nodes - x)) < 1e-15


@pytest.mark.parametrize("n", [1, 2, 5, 10, 17, 30, 64])
def test_gauss_legendre_matches_numpy(n):
    # independent oracle: numpy's Golub-Welsch based nodes
    x, w = np.polynomial.legendre.leggauss(n)
    r = make_rule(4, n)
    np.testing.assert_allclose(r.nodes, x, atol=2e-15)
    np.testing.assert_allclose(r.weights, w, atol=2e-14)


@pytest.mark.parametrize("n", range(1, 31))
def test_gauss_legendre_exactness(n):
    r = make_rule(4, n)
    for k in range(2 * n):
        approx = math.fsum(r.weights * r.nodes ** k)
        assert abs(approx - monomial_integral(k)) <= 1e-13


@pytest.mark.parametrize("level, degree", [(2, 5), (4, 11), (7, 23), (13, 47), (25, 95)])
def test_patterson_exactness(level, degree):
    r = make_rule(3, level)
    for k in range(degree + 1):
        approx = math.fsum(r.weights * r.nodes ** k)
        assert abs(approx - monomial_integral(k)) <= 1e-12, k
    # and not exact one degree higher (the even one); for the large rules
    # the defect of x^(degree+1) is below round-off
    k = degree + 1
    if degree <= 23:
        assert abs(math.fsum(r.weights * r.nodes ** k) - monomial_integral(k)) > 1e-12


def test_clenshaw_curtis_exactness():
    # n-point Clenshaw-Curtis integrates polynomials through degree n-1
    for level in range(2, 9):
        r = make_rule(2, level)
        n = len(r)
        for k in range(n):
            assert abs(math.fsum(r.weights * r.nodes ** k) - monomial_integral(k)) < 1e-13


@pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.name)
def test_weight_sums(family):
    top = {1: 12, 2: 12, 3: 100, 4: 60}[int(family)]
    for level in range(1, top + 1):
        r = make_rule(family, level)
        assert abs(math.fsum(r.weights) - 2.0) <= 1e-13


@pytest.mark.parametrize("family", NESTED, ids=lambda f: f.name)
def test_nestedness_exact(family):
    top = {1: 10, 2: 10, 3: 60}[int(family)]
    for level in range(2, top + 1):
        coarse = set(make_rule(family, level - 1).nodes.tolist())
        fine = set(make_rule(family, level).nodes.tolist())
        assert coarse <= fine


@pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.name)
def test_nodes_sorted_symmetric(family):
    for level in range(1, 8):
        r = make_rule(family, level)
        assert np.all(np.diff(r.nodes) > 0)
        np.testing.assert_allclose(r.nodes, -r.nodes[::-1], atol=1e-15)
        np.testing.assert_allclose(r.weights, r.weights[::-1], rtol=1e-13)


def test_rules_cached_and_readonly():
    assert make_rule(3, 5) is make_rule(3, 5)
    with pytest.raises(ValueError):
        make_rule(3, 5).weights[0] = 1.0


@pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.name)
def test_delta_telescopes(family):
    # sum of deltas through level l reproduces J^l on a smooth function
    g = lambda x: np.exp(np.cos(3 * x))
    assert make_delta_rule(family, 1).apply(g) == make_rule(family, 1).apply(g)
    for level in range(2, 8):
        total = math.fsum(make_delta_rule(family, l).apply(g) for l in range(1, level + 1))
        assert abs(total - make_rule(family, level).apply(g)) < 1e-13


def test_patterson_delta_zero_on_repeat_levels():
    zero = [l for l in range(1, 13) if make_delta_rule(3, l).is_zero]
    assert zero == [3, 5, 6, 8, 9, 10, 11, 12]


def test_gauss_legendre_delta_support_is_union():
    dr = make_delta_rule(4, 3)
    assert len(dr) == 5  # 3-point and 2-point nodes are disjoint
    assert abs(math.fsum(dr.weights)) < 1e-14


def test_rule_csv():
    text = rule_csv(1, [1, 2])
    lines = text.strip().split("\n")
    assert lines[0] == "level,node,weight"
    assert lines[1:] == ["1,0,2", "2,-1,0.5", "2,0,1", "2,1,0.5"]
    delta = rule_csv(1, [2], delta=True).strip().split("\n")
    assert delta[1:] == ["2,-1,0.5", "2,0,-1", "2,1,0.5"]
