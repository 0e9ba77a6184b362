#!/usr/bin/env python3
"""Independent oracle for the two graph-shaped (-2)-curve lattices.

Computes rank and discriminant of the quotient-by-radical of the lattice
-2*I + A(G) for two 20-vertex graphs:

  * square16: a 16-cycle (a square with three subdivision points per side)
    with one pendant vertex attached to each of the four corners;
  * cube20: the cube graph with every edge subdivided once.

The radical is eliminated with hand-derived kernel bases whose saturation is
verified via Smith normal form, so the quotient discriminant is an honest
integer determinant. This script freezes expected values for the C++ tests
and shares no code with the C++ implementation.
"""

from fractions import Fraction


def gram_from_edges(n, edges):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for i, j in edges:
        g[i][j] += 1
        g[j][i] += 1
    return g


def square16():
    # cycle vertices 0..15 (corners at 0,4,8,12), pendants 16..19.
    edges = [(i, (i + 1) % 16) for i in range(16)]
    edges += [(16, 0), (17, 4), (18, 8), (19, 12)]
    g = gram_from_edges(20, edges)
    # Kernel, parametrized by side slopes (d0,d1), d2=-d0, d3=-d1: corners
    # c_i = 2(d_{i-1}-d_i), side vertices c_i + s*d_i, pendants c_i/2.
    def kvec(d):
        c = [2 * (d[(i - 1) % 4] - d[i]) for i in range(4)]
        a = []
        for i in range(4):
            a += [c[i] + s * d[i] for s in range(4)]
        return a + [ci // 2 for ci in c]
    ker = [kvec([1, 0, -1, 0]), kvec([0, 1, 0, -1])]
    return g, ker


def cube20():
    verts = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    vidx = {v: i for i, v in enumerate(verts)}
    cube_edges = []
    for v in verts:
        for d in range(3):
            w = list(v)
            w[d] ^= 1
            w = tuple(w)
            if vidx[v] < vidx[w]:
                cube_edges.append((v, w))
    assert len(cube_edges) == 12
    edges = []
    for m, (u, v) in enumerate(cube_edges):
        mid = 8 + m
        edges += [(vidx[u], mid), (vidx[v], mid)]
    g = gram_from_edges(20, edges)
    # Kernel: the three character vectors chi_d on cube vertices (eigenvalue-1
    # eigenvectors of the cube adjacency), extended by edge-midpoint averages.
    ker = []
    for d in range(3):
        vec = [(-1) ** v[d] for v in verts]
        for (u, v) in cube_edges:
            vec.append(((-1) ** u[d] + (-1) ** v[d]) // 2)
        ker.append(vec)
    return g, ker


def check_kernel(g, ker):
    n = len(g)
    for k in ker:
        assert len(k) == n
        for i in range(n):
            assert sum(g[i][j] * k[j] for j in range(n)) == 0, "not in kernel"


def rref_kernel(g):
    """Integer generators of the rational kernel of g via fraction RREF."""
    n = len(g)
    m = [[Fraction(x) for x in row] for row in g]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        m[r] = [a / m[r][c] for a in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    gens = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        den = 1
        for x in v:
            den = den * x.denominator // __import__("math").gcd(den, x.denominator)
        gens.append([int(x * den) for x in v])
    return gens


def quotient_basis(ker, n):
    """Given rows spanning a saturated sublattice K of Z^n, return rows of a
    matrix whose classes form a basis of Z^n / K.

    Runs Smith reduction on K tracking the inverse column transform W (with
    invariant K_orig = U * K_cur * W, U unimodular row ops we discard): at the
    end K_cur = [D | 0] so rowspan(K_orig) = rowspan(D * W_top); saturation
    forces D = I, and the remaining rows of W descend to a quotient basis.
    """
    k = [list(r) for r in ker]
    r, cols = len(k), n
    w = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_add(j, i, c):  # col j += c * col i  =>  row i of W -= c * row j
        for row in k:
            row[j] += c * row[i]
        w[i] = [a - c * b for a, b in zip(w[i], w[j])]

    def col_swap(i, j):
        for row in k:
            row[i], row[j] = row[j], row[i]
        w[i], w[j] = w[j], w[i]

    def col_neg(i):
        for row in k:
            row[i] = -row[i]
        w[i] = [-a for a in w[i]]

    for t in range(r):
        while True:
            piv = None
            for i in range(t, r):
                for j in range(t, cols):
                    if k[i][j] and (piv is None or abs(k[i][j]) < abs(k[piv[0]][piv[1]])):
                        piv = (i, j)
            assert piv is not None, "kernel rows dependent"
            pi, pj = piv
            if pi != t:
                k[t], k[pi] = k[pi], k[t]
            if pj != t:
                col_swap(t, pj)
            if k[t][t] < 0:
                col_neg(t)
            clean = True
            for i in range(t + 1, r):
                if k[i][t]:
                    q = k[i][t] // k[t][t]
                    k[i] = [a - q * b for a, b in zip(k[i], k[t])]
                    if k[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if k[t][j]:
                    q = k[t][j] // k[t][t]
                    col_add(j, t, -q)
                    if k[t][j]:
                        clean = False
            if clean:
                break
    # Rowspan of the first r rows of W is the saturation of the input span;
    # the remaining rows of W descend to a basis of Z^n modulo it, whether or
    # not the input rows were themselves saturated.
    return w[r:]


def det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def pair(g, x, y):
    return sum(x[i] * g[i][j] * y[j] for i in range(len(g)) for j in range(len(g)))


def gram_of(g, rows):
    return [[pair(g, x, y) for y in rows] for x in rows]


def perp_of(g, basis, targets):
    """Basis (rows, in ambient coordinates) of the orthogonal complement of
    the given target vectors inside the lattice spanned by `basis` (assumed a
    basis of a quotient/sublattice on which g descends)."""
    b = [list(r) for r in basis]
    for wvec in targets:
        vals = [pair(g, row, wvec) for row in b]
        if all(v == 0 for v in vals):
            continue
        # integer kernel of the functional x -> sum x_i vals_i via gcd sweep
        m = len(b)
        basechange = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        v = vals[:]
        while True:
            nz = [i for i in range(m) if v[i] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(v[i]))
            i0 = nz[0]
            for i in nz[1:]:
                q = v[i] // v[i0]
                v[i] -= q * v[i0]
                basechange[i] = [a - q * c for a, c in zip(basechange[i], basechange[i0])]
        keep = [i for i in range(m) if v[i] == 0]
        assert len(keep) == m - 1
        b = [[sum(basechange[i][t] * b[t][j] for t in range(m)) for j in range(len(b[0]))]
             for i in keep]
    return b


def nodal_curves(k):
    """Curve labels on the Hessian K3 of a cubic with k nodes: all N-curves,
    node curves M_0..M_{k-1} and node-line curves L_ij, 0 <= i < j < k."""
    from itertools import combinations
    labels = [("N", p) for p in combinations(range(5), 2)]
    labels += [("N", t) for t in combinations(range(5), 3)]
    labels += [("M", (i,)) for i in range(k)]
    labels += [("L", p) for p in combinations(range(k), 2)]
    return labels


def curve_pair(a, b):
    (ka, ia), (kb, ib) = a, b
    if a == b:
        return -2
    if ka > kb:
        ka, ia, kb, ib = kb, ib, ka, ia
    sa, sb = set(ia), set(ib)
    if ka == "N" and kb == "N":
        if len(ia) == len(ib):
            return 0
        small, big = (sa, sb) if len(ia) < len(ib) else (sb, sa)
        return 1 if small < big else 0
    if ka == "L" and kb == "N":
        if len(ib) == 2:
            return 1 if sa == sb else 0
        return 1 if len(sa | sb) == 5 else 0
    if ka == "L" and kb == "M":
        return 1 if ib[0] in sa else 0
    return 0


def span_data(labels, pair_fn):
    n = len(labels)
    g = [[pair_fn(labels[i], labels[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            assert g[i][j] == g[j][i]
    ker = rref_kernel(g)
    check_kernel(g, ker)
    qb = quotient_basis(ker, n) if ker else [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return len(qb), det(gram_of(g, qb))


def main():
    for k in (1, 2, 3, 4):
        rank, disc = span_data(nodal_curves(k), curve_pair)
        print(f"nodal{k} span: rank {rank}, disc {disc}")

    for name, (g, ker) in (("square16", square16()), ("cube20", cube20())):
        check_kernel(g, ker)
        qb = quotient_basis(ker, 20)
        gq = gram_of(g, qb)
        print(f"{name}: rank {len(qb)}, disc {det(gq)}")

    # square16 extras.
    g, ker = square16()
    qb = quotient_basis(ker, 20)

    def e(i):
        v = [0] * 20
        v[i] = 1
        return v

    # chains: cycle positions 14,15,0,1,2,3,4 with pendant 16 on position 0
    # (third chain entry), and 6..12 with pendant 18 on position 8.
    chain1 = [e(i) for i in (14, 15, 0, 1, 2, 3, 4)] + [e(16)]
    chain2 = [e(i) for i in (6, 7, 8, 9, 10, 11, 12)] + [e(18)]
    for label, ch in (("chain1", chain1), ("chain2", chain2)):
        gram = gram_of(g, ch)
        print(f"square16 {label}: det {det(gram)}")
    cross = all(pair(g, x, y) == 0 for x in chain1 for y in chain2)
    print(f"square16 chains orthogonal: {cross}")

    resid = perp_of(g, qb, chain1 + chain2)
    gr = gram_of(g, resid)
    print(f"square16 residual of chains: rank {len(resid)}, gram {gr}, det {det(gr)}")

    for pname, (i, j) in (("q0-q1", (16, 17)), ("q0-q2", (16, 18))):
        wv = [0] * 20
        wv[i], wv[j] = 1, -1
        pb = perp_of(g, qb, [wv])
        gp = gram_of(g, pb)
        print(f"square16 ({pname})-perp: rank {len(pb)}, disc {det(gp)}")


if __name__ == "__main__":
    main()
