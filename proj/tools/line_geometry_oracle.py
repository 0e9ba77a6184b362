#!/usr/bin/env python3
"""Independent geometric oracle for curve intersections on the Hessian quintic.

Works with explicit lines in P^4 over Z[w], w a primitive cube root of unity
(w^2 = -1 - w):

  * C_abc = {(s*u + t*v)} with u = e_d - e_e ({d,e} the complement of {a,b,c})
    and v = e_a + w*e_b + w^2*e_c.
  * l_abc = {x_d = x_e = 0, x_a + x_b + x_c = 0}: spanned by e_a - e_b and
    e_b - e_c.  These are the lines giving the triple-indexed (-2)-curves.
  * nodes P_de = (e_d - e_e), the 10 singular points of the quintic.

Two distinct lines in P^4 meet iff their four generators span a subspace of
dimension <= 3.  Strict transforms on the K3 meet (intersection number 1)
iff the lines meet at a point that is NOT a node; lines through a common
node are separated by the resolution.

The script prints the resulting intersection table in rule form so it can be
compared against the combinatorial implementation.
"""

from fractions import Fraction
from itertools import combinations, permutations


class Zw:
    """a + b*w with w^2 = -1 - w, exact integer arithmetic."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a
        self.b = b

    def __add__(self, o):
        return Zw(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return Zw(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        # (a + bw)(c + dw) = ac + (ad+bc) w + bd w^2,  w^2 = -1 - w
        a, b, c, d = self.a, self.b, o.a, o.b
        return Zw(a * c - b * d, a * d + b * c - b * d)

    def __neg__(self):
        return Zw(-self.a, -self.b)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __repr__(self):
        return f"({self.a}+{self.b}w)"


ZERO = Zw(0, 0)
ONE = Zw(1, 0)
W = Zw(0, 1)
W2 = Zw(-1, -1)


def det4(m):
    """Exact 4x4 determinant over Z[w] by cofactor expansion."""
    assert len(m) == 4 and all(len(r) == 4 for r in m)

    def det3(r):
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    total = ZERO
    sign = 1
    for j in range(4):
        minor = [[m[i][k] for k in range(4) if k != j] for i in range(1, 4)]
        term = m[0][j] * det3(minor)
        total = total + (term if sign > 0 else -term)
        sign = -sign
    return total


def rank_le3(rows):
    """True iff the 4 x 5 matrix over Z[w] has rank <= 3 (all 4x4 minors 0)."""
    for cols in combinations(range(5), 4):
        if not det4([[r[c] for c in cols] for r in rows]).is_zero():
            return False
    return True


def e(i):
    v = [ZERO] * 5
    v[i] = ONE
    return v


def c_line(a, b, c):
    """Generators of C_abc."""
    d, ee = sorted(set(range(5)) - {a, b, c})
    u = [ZERO] * 5
    u[d] = ONE
    u[ee] = -ONE
    v = [ZERO] * 5
    v[a] = ONE
    v[b] = W
    v[c] = W2
    return (u, v)


def l_line(a, b, c):
    """Generators of the triple line l_abc = {x_d = x_e = 0, x_a+x_b+x_c=0}."""
    u = [ZERO] * 5
    u[a] = ONE
    u[b] = -ONE
    v = [ZERO] * 5
    v[b] = ONE
    v[c] = -ONE
    return (u, v)


def meet_point(l1, l2):
    """If the lines meet, return a projective meeting point, else None.

    Solve alpha*u1 + beta*v1 = gamma*u2 + delta*v2 over Q(w) by elimination
    on the 4x5 homogeneous system (columns alpha,beta,gamma,delta).
    """
    if not rank_le3([l1[0], l1[1], l2[0], l2[1]]):
        return None
    # Build the 5x4 system M * (al,be,-ga,-de)^T = 0 coordinatewise.
    rows = []
    for i in range(5):
        rows.append([l1[0][i], l1[1][i], l2[0][i], l2[1][i]])
    # Find nontrivial kernel vector of the 5x4 matrix over Q(w) by brute
    # force over 3x3/4x4 minors: use fraction-free Gaussian elimination.
    m = [[Zw(x.a, x.b) for x in r] for r in rows]
    ncols = 4
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if not m[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                # row_i := piv * row_i - m[i][c] * row_r
                f1, f2 = m[r][c], m[i][c]
                m[i] = [f1 * m[i][k] - f2 * m[r][k] for k in range(ncols)]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    # Back-substitute with free column = 1.
    sol = [ZERO] * ncols
    sol[free[0]] = ONE
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        # row idx: m[idx][c] * sol[c] + sum_{k>c} m[idx][k] sol[k] = 0
        acc = ZERO
        for k in range(c + 1, ncols):
            acc = acc + m[idx][k] * sol[k]
        # sol[c] = -acc / m[idx][c]; stay exact: scale whole solution.
        pivval = m[idx][c]
        # multiply existing solution entries by pivval, set sol[c] = -acc
        sol = [pivval * s for s in sol]
        sol[c] = -acc
    al, be = sol[0], sol[1]
    pt = [(l1[0][i] * al) + (l1[1][i] * be) for i in range(5)]
    if all(x.is_zero() for x in pt):
        # lines meet "at infinity" of the parametrization: use other side
        ga, de = sol[2], sol[3]
        pt = [(l2[0][i] * ga) + (l2[1][i] * de) for i in range(5)]
    return pt


def is_node(pt):
    """Node P_ij: exactly two nonzero coordinates, negatives of each other."""
    nz = [i for i, x in enumerate(pt) if not x.is_zero()]
    if len(nz) != 2:
        return False
    i, j = nz
    return (pt[i] + pt[j]).is_zero()


def cyc_pairs(w):
    return {(w[0], w[1]), (w[1], w[2]), (w[2], w[0])}


def main():
    triples = list(combinations(range(5), 3))
    cs = []  # (label-tuple, line)
    for t in triples:
        a, b, c = t
        cs.append(((a, b, c), c_line(a, b, c)))
        cs.append(((a, c, b), c_line(a, c, b)))

    print("== C-C intersections (geometric) ==")
    rule_ok = True
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            w1, l1 = cs[i]
            w2, l2 = cs[j]
            pt = meet_point(l1, l2)
            geo = 0
            where = "disjoint"
            if pt is not None:
                if is_node(pt):
                    geo = 0
                    where = "node"
                else:
                    geo = 1
                    where = "generic " + str(pt)
            shared = cyc_pairs(w1) & cyc_pairs(w2)
            rule = 1 if len(shared) == 1 else 0
            if len(shared) > 1:
                rule = None  # same curve, shouldn't happen
            if rule != geo:
                rule_ok = False
                print(f"MISMATCH C{w1} C{w2}: rule={rule} geo={geo} ({where})")
    print("C-C rule matches geometry:", rule_ok)

    print("== C-line vs triple-line (N_abc) ==")
    ok = True
    for w1, l1 in cs:
        for t in triples:
            lt = l_line(*t)
            pt = meet_point(l1, lt)
            geo = 0
            if pt is not None and not is_node(pt):
                geo = 1
            rule = 1 if set(w1) == set(t) else 0
            if rule != geo:
                ok = False
                print(f"MISMATCH C{w1} l{t}: rule={rule} geo={geo} pt={pt}")
    print("C-N_triple rule matches geometry:", ok)

    print("== C-line through nodes (N_ab) ==")
    ok = True
    for w1, l1 in cs:
        comp = sorted(set(range(5)) - set(w1))
        for i, j in combinations(range(5), 2):
            # node P_ij has x_i = -x_j, all other coordinates zero
            pt = [ZERO] * 5
            pt[i] = ONE
            pt[j] = -ONE
            # is the node on the line? rank of [u, v, pt] <= 2
            u, v = l1
            on = True
            for cols in combinations(range(5), 3):
                m3 = [[u[c] for c in cols], [v[c] for c in cols],
                      [pt[c] for c in cols]]
                d = (
                    m3[0][0] * (m3[1][1] * m3[2][2] - m3[1][2] * m3[2][1])
                    - m3[0][1] * (m3[1][0] * m3[2][2] - m3[1][2] * m3[2][0])
                    + m3[0][2] * (m3[1][0] * m3[2][1] - m3[1][1] * m3[2][0])
                )
                if not d.is_zero():
                    on = False
                    break
            rule = 1 if [i, j] == comp else 0
            if on != bool(rule):
                ok = False
                print(f"MISMATCH C{w1} node P{i}{j}: rule={rule} on={on}")
    print("C passes exactly through its complementary node:", ok)

    # Triple lines through nodes: l_abc passes through P_ij iff {i,j} subset
    # of {a,b,c} (then x_d = x_e = 0 holds and x_a+x_b+x_c = 0).
    print("== triple-line vs nodes ==")
    ok = True
    for t in triples:
        u, v = l_line(*t)
        for i, j in combinations(range(5), 2):
            pt = [ZERO] * 5
            pt[i] = ONE
            pt[j] = -ONE
            on = True
            for cols in combinations(range(5), 3):
                m3 = [[u[c] for c in cols], [v[c] for c in cols],
                      [pt[c] for c in cols]]
                d = (
                    m3[0][0] * (m3[1][1] * m3[2][2] - m3[1][2] * m3[2][1])
                    - m3[0][1] * (m3[1][0] * m3[2][2] - m3[1][2] * m3[2][0])
                    + m3[0][2] * (m3[1][0] * m3[2][1] - m3[1][1] * m3[2][0])
                )
                if not d.is_zero():
                    on = False
                    break
            rule = {i, j} <= set(t)
            if on != rule:
                ok = False
                print(f"MISMATCH l{t} node P{i}{j}: rule={rule} on={on}")
    print("l_abc through P_ij iff {i,j} in {a,b,c}:", ok)


if __name__ == "__main__":
    main()
