"""Regenerate the embedded Gauss-Patterson tables (1..255 points).

Offline helper, not imported by the package. Each extension adds the roots
of the polynomial orthogonal (against the current node polynomial) to all
lower degrees; weights are the interpolatory weights on the union.

    python tools/gen_patterson.py > src/sgmdi/_patterson_tables.py
"""
import mpmath as mp

mp.mp.dps = 420
OUT_DIGITS = 25


def polymul(a, b):
    out = [mp.mpf(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def node_poly(nodes):
    p = [mp.mpf(1)]
    for x in nodes:
        p = polymul(p, [-x, mp.mpf(1)])
    return p


def moment(k):
    return mp.mpf(2) / (k + 1) if k % 2 == 0 else mp.mpf(0)


def horner(c, x):
    acc = mp.mpf(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


def extend(nodes):
    n = len(nodes)
    pi = node_poly(nodes)
    m = n + 1
    # G monic of degree m: sum_i g_i x^i + x^m ; int pi*G*x^j = 0, j < m
    mom = [sum(pi[a] * moment(a + k) for a in range(len(pi))) for k in range(2 * m + 1)]
    A = mp.matrix(m, m)
    b = mp.matrix(m, 1)
    for j in range(m):
        for i in range(m):
            A[j, i] = mom[i + j]
        b[j] = -mom[m + j]
    g = mp.lu_solve(A, b)
    G = [g[i] for i in range(m)] + [mp.mpf(1)]
    edges = [mp.mpf(-1)] + sorted(nodes) + [mp.mpf(1)]
    new = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        new.append(mp.findroot(lambda x: horner(G, x), (lo, hi), solver="anderson"))
    return sorted(list(nodes) + new)


def weights(nodes):
    n = len(nodes)
    A = mp.matrix(n, n)
    for j, x in enumerate(nodes):
        p0, p1 = mp.mpf(1), x
        A[0, j] = p0
        if n > 1:
            A[1, j] = p1
        for k in range(1, n - 1):
            p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
            A[k + 1, j] = p1
    b = mp.matrix(n, 1)
    b[0] = 2
    w = mp.lu_solve(A, b)
    return [w[i] for i in range(n)]


def main():
    nodes = [mp.mpf(0)]
    rules = [(nodes, [mp.mpf(2)])]
    while len(nodes) < 255:
        nodes = extend(nodes)
        with mp.workdps(150):
            w = weights(nodes)
        rules.append((nodes, w))
    print('"""Gauss-Patterson nodes and weights on [-1, 1], 1 to 255 points.')
    print()
    print("Only the nonnegative half is stored, ordered from 0 upward; the rule is")
    print("symmetric. Generated by tools/gen_patterson.py.")
    print('"""')
    print()
    print("PATTERSON_HALF = {")
    for nodes, w in rules:
        n = len(nodes)
        h = n // 2
        print(f"    {n}: (")
        print("        (")
        for x in nodes[h:]:
            print(f"            {mp.nstr(x, OUT_DIGITS, min_fixed=-1, max_fixed=1)},")
        print("        ),")
        print("        (")
        for x in w[h:]:
            print(f"            {mp.nstr(x, OUT_DIGITS, min_fixed=-30, max_fixed=1)},")
        print("        ),")
        print("    ),")
    print("}")


if __name__ == "__main__":
    main()
