"""End_{B_G}(T_O) as an explicit algebra; verify_main prototype."""
from fractions import Fraction
import alg, mod, qp as qpmod, comb


def md(i, n):
    return ((i - 1) % n) + 1


# ---- hom basis via union-find (all equations are u_a = u_b or u = 0) ----

def hom_BG_basis(I, J, n0, d, N, F):
    """Basis of Hom_{B_G}(L_[I], L_[J]) mod t^N.
    Unknown u[(i,l,lp,c)]: phi(1_i^l) = sum u t^c 1_i^{lp}.
    Returns list of homs; each hom: dict (i,l) -> dict (lp,c) -> Fel."""
    aI = mod.class_exps(set(I), n0, d)
    aJ = mod.class_exps(set(J), n0, d)
    keys = [(i, l, lp, c) for i in range(1, n0 + 1) for l in range(d)
            for lp in range(d) for c in range(N)]
    parent = {k: k for k in keys}
    zero = set()

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def eq(kA, kB):
        # u_A - u_B = 0 where None means the term is truncated away
        if kA is None and kB is None:
            return
        if kA is None:
            zero.add(kB)
        elif kB is None:
            zero.add(kA)
        else:
            union(kA, kB)

    def K(i, l, lp, c):
        return (i, l, lp, c) if c >= 0 else None

    for l in range(d):
        for lp in range(d):
            for c in range(N):
                for i in range(2, n0 + 1):
                    eq(K(i, l, lp, c - aI[(i, l)]),
                       K(i - 1, l, lp, c - aJ[(i, lp)]))
                    eq(K(i - 1, l, lp, c - (1 - aI[(i, l)])),
                       K(i, l, lp, c - (1 - aJ[(i, lp)])))
                L1 = (l + 1) % d
                eq(K(1, L1, lp, c - aI[(1, L1)]),
                   K(n0, l, (lp - 1) % d, c - aJ[(1, lp)]))
                eq(K(n0, (l - 1) % d, lp, c - (1 - aI[(1, l)])),
                   K(1, l, (lp + 1) % d, c - (1 - aJ[(1, (lp + 1) % d)])))
    zroots = {find(z) for z in zero}
    classes = {}
    for k in keys:
        r = find(k)
        if r in zroots:
            continue
        classes.setdefault(r, []).append(k)
    one = F.one()
    basis = []
    for r in sorted(classes):
        h = {}
        for (i, l, lp, c) in classes[r]:
            h.setdefault((i, l), {})[(lp, c)] = one
        basis.append(h)
    return basis


def hom_compose(h2, h1, N, F):
    """(h2 . h1)(1_i^l) = sum h1[i,l][(lp,c)] t^c h2(1_i^lp)."""
    out = {}
    for (i, l), col in h1.items():
        acc = {}
        for (lp, c), v in col.items():
            col2 = h2.get((i, lp))
            if not col2:
                continue
            for (lq, c2), v2 in col2.items():
                if c + c2 < N:
                    k = (lq, c + c2)
                    s = F.add(acc.get(k, F.zero()), F.mul(v, v2))
                    if any(x != 0 for x in s):
                        acc[k] = s
                    elif k in acc:
                        del acc[k]
        if acc:
            out[(i, l)] = acc
    return out


def hom_scale(h, s, F):
    return {k: {kk: F.mul(v, s) for kk, v in col.items()}
            for k, col in h.items()}


def hom_add(h1, h2, F):
    out = {}
    for h in (h1, h2):
        for k, col in h.items():
            acc = out.setdefault(k, {})
            for kk, v in col.items():
                s = F.add(acc.get(kk, F.zero()), v)
                if any(x != 0 for x in s):
                    acc[kk] = s
                elif kk in acc:
                    del acc[kk]
    return {k: col for k, col in out.items() if col}


def hom_identity(n0, d, F):
    one = F.one()
    return {(i, l): {(l, 0): one} for i in range(1, n0 + 1) for l in range(d)}


def hom_layer_shift(n0, d, F, shift=1):
    """phi: 1_i^l -> 1_i^{l+shift}; endomorphism when I + n0*shift = I."""
    one = F.one()
    return {(i, l): {((l + shift) % d, 0): one}
            for i in range(1, n0 + 1) for d_ in [d] for l in range(d)}


def eigenprojection(n0, d, F, sigma, zeta_exp=1):
    """pi_sigma = (1/d) sum_l zeta^{-sigma*l*zeta_exp} phi^l."""
    acc = {}
    invd = F.el({0: Fraction(1, d)})
    for l in range(d):
        coeff = F.mul(invd, F.el({(-sigma * l * zeta_exp) % d: Fraction(1)}))
        acc = hom_add(acc, hom_scale(hom_layer_shift(n0, d, F, l), coeff, F), F)
    return acc


def hom_flat(h, tag):
    """Flatten to {(tag..., c, i, lp, l): Fel} for RREF; valuation-first order."""
    out = {}
    for (i, l), col in h.items():
        for (lp, c), v in col.items():
            out[tag + (c, i, lp, l)] = v
    return out


# ---- isomorphism testing ----

def deg0_matrix(h, n0, d, F):
    """Degree-0 (t^0) part of a hom as a dense matrix over the field; row =
    target generator (i,lp), column = source generator (i,l)."""
    gens = [(i, l) for i in range(1, n0 + 1) for l in range(d)]
    idx = {g: k for k, g in enumerate(gens)}
    M = [[F.zero() for _ in gens] for _ in gens]
    for (i, l), col in h.items():
        for (lp, c), v in col.items():
            if c == 0:
                M[idx[(i, lp)]][idx[(i, l)]] = F.add(M[idx[(i, lp)]][idx[(i, l)]], v)
    return M


def det(M, F):
    M = [list(r) for r in M]
    n = len(M)
    res = F.one()
    for c in range(n):
        p = next((r for r in range(c, n) if any(x != 0 for x in M[r][c])), None)
        if p is None:
            return F.zero()
        if p != c:
            M[c], M[p] = M[p], M[c]
            res = F.neg(res)
        res = F.mul(res, M[c][c])
        inv = F.inv(M[c][c])
        for r in range(c + 1, n):
            if any(x != 0 for x in M[r][c]):
                f = F.mul(inv, M[r][c])
                for k in range(c, n):
                    M[r][k] = F.add(M[r][k], F.neg(F.mul(f, M[c][k])))
    return res


def classes_isomorphic(I, J, n0, d, N, F, samples=5):
    """True iff L_[I] and L_[J] are isomorphic: some element of the Hom space
    has an invertible degree-0 matrix. The degree-0 matrices come from the
    valuation-0 basis homs (one per layer shift); we test each alone and then
    random combinations (the determinant is a polynomial in the coefficients,
    identically zero iff no combination is invertible — random sampling over a
    growing set of rational points decides it on the corpus sizes)."""
    basis = hom_BG_basis(set(I), set(J), n0, d, N, F)
    mats = []
    for h in basis:
        M = deg0_matrix(h, n0, d, F)
        if any(any(any(x != 0 for x in v) for v in row) for row in M):
            mats.append(M)
    if not mats:
        return False
    for M in mats:
        if any(x != 0 for x in det(M, F)):
            return True
    import random
    rng = random.Random(12345)
    k = len(mats)
    for _ in range(samples):
        coeffs = [F.el({0: Fraction(rng.randint(1, 997))}) for _ in range(k)]
        M = [[F.zero() for _ in mats[0]] for _ in mats[0]]
        for cf, Mi in zip(coeffs, mats):
            for r in range(len(M)):
                for c in range(len(M)):
                    M[r][c] = F.add(M[r][c], F.mul(cf, Mi[r][c]))
        if any(x != 0 for x in det(M, F)):
            return True
    return False
