"""Rank-1 modules over B(k,n), class modules over B_G, Hom dims over
R_N = Q(zeta_d)[t]/(t^N)."""
from fractions import Fraction
from collections import defaultdict
import alg


def md(i, n):
    return ((i - 1) % n) + 1


# ---------- B = B(k,n): rank one modules ----------

def rk1_exps(I, n):
    """x_i, y_i act on L_I by t^a: returns (ax, ay) dicts i -> exponent."""
    ax = {i: (0 if i in I else 1) for i in range(1, n + 1)}
    ay = {i: (1 if i in I else 0) for i in range(1, n + 1)}
    return ax, ay


def hom_B_dim(I, J, n, N, F, want_basis=False):
    """dim over F of Hom_B(L_I, L_J) mod t^N. Unknowns u[i][c], i=1..n, c<N."""
    axI, ayI = rk1_exps(set(I), n)
    axJ, ayJ = rk1_exps(set(J), n)
    idx = {}
    for i in range(1, n + 1):
        for c in range(N):
            idx[(i, c)] = len(idx)
    rows = []
    one = F.one()
    mone = F.neg(one)
    for i in range(1, n + 1):
        im1 = md(i - 1, n)
        # x_i: t^{axI[i]} phi_i(1) applied: phi_i . x_i^I = x_i^J . phi_{i-1}
        # coefficient c equation: u[i][c - axI] - u[im1][c - axJ] = 0
        for (aS, aT, src, tgt) in ((axI[i], axJ[i], i, im1), (ayI[i], ayJ[i], im1, i)):
            # generic: t^{aS} phi_src? careful below; we use the pattern:
            # phi_tgt_side relation t^{aS} u[src-side] = t^{aT} u[...]
            pass
        # explicit: phi_i(x_i m) = x_i phi_{i-1}(m):
        for c in range(N):
            row = {}
            if c - axI[i] >= 0:
                row[(i, c - axI[i])] = one
            if c - axJ[i] >= 0:
                k = (im1, c - axJ[i])
                row[k] = F.add(row.get(k, F.zero()), mone)
            row = {k: v for k, v in row.items() if any(x != 0 for x in v)}
            if row:
                rows.append(row)
        # y_i: phi_{i-1}(y_i m) = y_i phi_i(m): t^{ayI} u[im1] = t^{ayJ} u[i]
        for c in range(N):
            row = {}
            if c - ayI[i] >= 0:
                row[(im1, c - ayI[i])] = one
            if c - ayJ[i] >= 0:
                k = (i, c - ayJ[i])
                row[k] = F.add(row.get(k, F.zero()), mone)
            row = {k: v for k, v in row.items() if any(x != 0 for x in v)}
            if row:
                rows.append(row)
    rref = alg.SparseRREF(F)
    for r in rows:
        rref.add_row({idx[k]: v for k, v in r.items()})
    return len(idx) - rref.rank


# ---------- B_G class modules ----------

def class_exps(I, n0, d):
    """a[(i,l)] = exponent of t for x_i on layer l (0 if i+l*n0 in I else 1)."""
    n = n0 * d
    a = {}
    for i in range(1, n0 + 1):
        for l in range(d):
            a[(i, l)] = 0 if md(i + l * n0, n) in I else 1
    return a


def hom_BG_dim(I, J, n0, d, N, F):
    """dim Hom_{B_G}(L_[I], L_[J]) mod t^N.
    Unknowns u[(i, l, lp, c)]: phi(1_i^l) = sum u t^c 1_i^{lp}."""
    n = n0 * d
    aI = class_exps(set(I), n0, d)
    aJ = class_exps(set(J), n0, d)
    idx = {}
    for i in range(1, n0 + 1):
        for l in range(d):
            for lp in range(d):
                for c in range(N):
                    idx[(i, l, lp, c)] = len(idx)
    one = F.one()
    mone = F.neg(one)
    rows = []

    def addrow(row):
        row = {k: v for k, v in row.items() if any(x != 0 for x in v)}
        if row:
            rows.append({idx[k]: v for k, v in row.items()})

    for l in range(d):
        for lp in range(d):
            for c in range(N):
                # x_i, i>=2: t^{aI(i,l)} u[(i,l,lp,c')] matched with
                # u[(i-1,l,lp,*)] t^{aJ(i,lp)}
                for i in range(2, n0 + 1):
                    row = {}
                    if c - aI[(i, l)] >= 0:
                        row[(i, l, lp, c - aI[(i, l)])] = one
                    if c - aJ[(i, lp)] >= 0:
                        k = (i - 1, l, lp, c - aJ[(i, lp)])
                        row[k] = F.add(row.get(k, F.zero()), mone)
                    addrow(row)
                    # y_i: t^{1-aI(i,l)} u[(i-1,l,lp,.)] = t^{1-aJ(i,lp)} u[(i,l,lp,.)]
                    row = {}
                    if c - (1 - aI[(i, l)]) >= 0:
                        row[(i - 1, l, lp, c - (1 - aI[(i, l)]))] = one
                    if c - (1 - aJ[(i, lp)]) >= 0:
                        k = (i, l, lp, c - (1 - aJ[(i, lp)]))
                        row[k] = F.add(row.get(k, F.zero()), mone)
                    addrow(row)
                # x_1: maps 1_{n0}^{l} -> t^{aI(1,l+1)} 1_1^{l+1}
                # phi(x1 1_{n0}^l) = x1 phi(1_{n0}^l):
                # t^{aI(1,l+1)} u[(1, l+1, lp, .)] = u[(n0, l, lp', .)] with the
                # x1-action on target: x1 1_{n0}^{lp} = t^{aJ(1,lp+1)} 1_1^{lp+1}
                row = {}
                if c - aI[(1, (l + 1) % d)] >= 0:
                    row[(1, (l + 1) % d, lp, c - aI[(1, (l + 1) % d)])] = one
                lpm = (lp - 1) % d
                if c - aJ[(1, lp)] >= 0:
                    k = (n0, l, lpm, c - aJ[(1, lp)])
                    row[k] = F.add(row.get(k, F.zero()), mone)
                addrow(row)
                # y_1: maps 1_1^l -> t^{1-aI(1,l)} 1_{n0}^{l-1}
                row = {}
                if c - (1 - aI[(1, l)]) >= 0:
                    row[(n0, (l - 1) % d, lp, c - (1 - aI[(1, l)]))] = one
                if c - (1 - aJ[(1, (lp + 1) % d)]) >= 0:
                    k = (1, l, (lp + 1) % d, c - (1 - aJ[(1, (lp + 1) % d)]))
                    row[k] = F.add(row.get(k, F.zero()), mone)
                addrow(row)
    rref = alg.SparseRREF(F)
    for r in rows:
        rref.add_row(r)
    return len(idx) - rref.rank


def induce_exps(I, n0, d):
    """Arrow exponents of the induced module j*F(L_I): generator 1_i^l is
    (e_i (x) g^{-l}) (x) 1_{i + l n0}; sliding B across the tensor turns the
    B_G arrow x_i acting between layers into the B arrow x_{i + l n0}."""
    n = n0 * d
    ax, ay = rk1_exps(set(I), n)
    a = {}
    b = {}
    for i in range(1, n0 + 1):
        for l in range(d):
            a[(i, l)] = ax[md(i + l * n0, n)]
            b[(i, l)] = ay[md(i + l * n0, n)]
    return a, b


def check_rank_one_relations(I, k, n, N):
    """xy = yx (= t) at every vertex and x^k = y^{n-k} from every vertex,
    verified on the t-exponents of the rank-one action."""
    ax, ay = rk1_exps(set(I), n)
    for i in range(1, n + 1):
        if ax[i] + ay[i] != 1:
            return False
    for i in range(1, n + 1):
        ex = sum(ax[md(i + t, n)] for t in range(1, k + 1))
        ey = sum(ay[md(i - t, n)] for t in range(0, n - k))
        if ex != ey or ex >= N:
            return False
    return True


def check_class_relations(I, n0, d, k, N):
    """Same identities for the class module over B_G (walk layers)."""
    n = n0 * d
    a = class_exps(set(I), n0, d)

    def step_x(i, l):
        # x_{i+1} applied at vertex i, layer l
        j = md(i + 1, n0)
        lp = (l + 1) % d if j == 1 else l
        return j, lp, a[(j, lp)]

    def step_y(i, l):
        # y_i applied at vertex i, layer l -> vertex i-1
        j = md(i - 1, n0)
        if i == 1:
            return j, (l - 1) % d, 1 - a[(1, l)]
        return j, l, 1 - a[(i, l)]

    for i in range(1, n0 + 1):
        for l in range(d):
            # x then y back = t;  y then x back = t
            j, lp, e1 = step_x(i, l)
            _, _, e2 = step_y(j, lp)
            if e1 + e2 != 1:
                return False
            ex, (ci, cl) = 0, (i, l)
            for _ in range(k):
                ci, cl, e = step_x(ci, cl)
                ex += e
            ey, (ci2, cl2) = 0, (i, l)
            for _ in range(n - k):
                ci2, cl2, e = step_y(ci2, cl2)
                ey += e
            if (ci, cl) != (ci2, cl2) or ex != ey or ex >= N:
                return False
    return True
