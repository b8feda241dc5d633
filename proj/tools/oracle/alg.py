"""Truncated path algebras with relations over Q(zeta_d), exact.

Field elements: tuples of Fractions of length deg(Phi_d) representing
polynomials in z modulo the d-th cyclotomic polynomial Phi_d.
"""

from fractions import Fraction
from collections import defaultdict


def cyclotomic(d):
    """Coefficients of Phi_d as list (lowest degree first), monic."""
    # compute by polynomial division: x^d - 1 = prod_{e|d} Phi_e
    def polydiv(a, b):
        a = a[:]
        out = [Fraction(0)] * (len(a) - len(b) + 1)
        for i in range(len(a) - len(b), -1, -1):
            q = a[i + len(b) - 1] / b[-1]
            out[i] = q
            for j, c in enumerate(b):
                a[i + j] -= q * c
        assert all(c == 0 for c in a[:len(b) - 1]) and all(
            c == 0 for c in a[len(b) - 1:len(a)][len(out):]), a
        return out
    phis = {}
    for e in range(1, d + 1):
        if d % e:
            continue
        p = [Fraction(-1)] + [Fraction(0)] * (e - 1) + [Fraction(1)]  # x^e - 1
        for f in range(1, e):
            if e % f == 0:
                p = polydiv(p, phis[f])
        phis[e] = p
    return phis[d]


class Field:
    """Q(zeta_d)."""

    def __init__(self, d):
        self.d = max(d, 1)
        self.phi = cyclotomic(self.d)
        self.deg = len(self.phi) - 1

    def zero(self):
        return (Fraction(0),) * self.deg

    def one(self):
        return self.el({0: Fraction(1)})

    def el(self, expdict):
        """From {zeta_exponent: Fraction}."""
        v = [Fraction(0)] * self.deg
        for e, q in expdict.items():
            z = self.zpow(e % self.d)
            for i in range(self.deg):
                v[i] += q * z[i]
        return tuple(v)

    def zpow(self, e):
        """zeta^e reduced mod Phi_d, as coefficient tuple."""
        v = [Fraction(0)] * (e + 1)
        v[e] = Fraction(1)
        return tuple(self._reduce(v))

    def _reduce(self, v):
        v = list(v) + [Fraction(0)] * max(0, self.deg - len(v))
        for i in range(len(v) - 1, self.deg - 1, -1):
            c = v[i]
            if c:
                v[i] = Fraction(0)
                for j in range(self.deg + 1):
                    v[i - self.deg + j] -= c * self.phi[j]
        return v[:self.deg]

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        v = [Fraction(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        v[i + j] += x * y
        return tuple(self._reduce(v))

    def inv(self, a):
        # extended Euclid in Q[z] against phi
        r0, r1 = list(self.phi), list(a) + [Fraction(0)]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        def deg(p):
            dd = len(p) - 1
            while dd >= 0 and p[dd] == 0:
                dd -= 1
            return dd
        while deg(r1) > 0:
            d0, d1 = deg(r0), deg(r1)
            q = r0[d0] / r1[d1]
            # r0 -= q x^(d0-d1) r1 ; iterate full division
            nr = r0[:]
            ns = s0[:] + [Fraction(0)] * max(0, d0 - d1 + len(s1) - len(s0))
            while deg(nr) >= d1 and deg(nr) >= 0 and d1 >= 0:
                dd = deg(nr)
                if dd < d1:
                    break
                q = nr[dd] / r1[d1]
                for j in range(d1 + 1):
                    nr[dd - d1 + j] -= q * r1[j]
                while len(ns) < dd - d1 + len(s1):
                    ns.append(Fraction(0))
                for j in range(len(s1)):
                    ns[dd - d1 + j] -= q * s1[j]
            r0, r1 = r1, nr
            s0, s1 = s1, ns
        dd = deg(r1)
        assert dd == 0, "not invertible"
        c = r1[0]
        inv = [x / c for x in s1]
        return tuple(self._reduce(inv))


class SparseRREF:
    """Incremental sparse row reduction over a Field; tracks rank."""

    def __init__(self, field):
        self.F = field
        self.pivots = {}  # col -> reduced row (dict col->coeff with this col = 1)

    def reduce_row(self, row):
        F = self.F
        row = dict(row)
        while row:
            c = min(row)
            if c not in self.pivots:
                # normalize
                iv = F.inv(row[c])
                row = {k: F.mul(v, iv) for k, v in row.items()}
                return c, row
            piv = self.pivots[c]
            f = row.pop(c)
            nf = F.neg(f)
            for k, v in piv.items():
                if k == c:
                    continue
                nv = F.add(row.get(k, F.zero()), F.mul(nf, v))
                if any(x != 0 for x in nv):
                    row[k] = nv
                elif k in row:
                    del row[k]
        return None, None

    def add_row(self, row):
        c, red = self.reduce_row(row)
        if c is None:
            return False
        self.pivots[c] = red
        return True

    @property
    def rank(self):
        return len(self.pivots)


def enumerate_paths(vertices, arrows, m):
    """All paths of length <= m. arrows: {aid: (src,tgt)}.
    Returns list of (src, tgt, tuple-of-aids) including length 0 (vertex paths),
    and an index {path_key: ordinal} with deterministic ordering."""
    out_arrows = defaultdict(list)
    for aid in sorted(arrows, key=str):
        s, t = arrows[aid]
        out_arrows[s].append((aid, t))
    paths = []
    for v in vertices:
        paths.append((v, v, ()))
    frontier = [(v, v, ()) for v in vertices]
    for _ in range(m):
        nxt = []
        for (s, t, p) in frontier:
            for (aid, t2) in out_arrows[t]:
                q = (s, t2, p + (aid,))
                nxt.append(q)
        paths.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return paths


def filtered_dims(vertices, arrows, relations, m, field):
    """relations: list of (tgt_of_rel_start, src_of_rel_end, [(coeffdict, path)])
    given as just [(coeffdict, arrow path)] lists; paths chain-ordered.
    Returns dims for j = 0..m of span(paths len<=j) / (ideal cap ...)."""
    F = field
    paths = enumerate_paths(vertices, arrows, m)
    by_len = defaultdict(list)
    for (s, t, p) in paths:
        by_len[len(p)].append((s, t, p))
    # paths into a vertex / out of a vertex, by length
    into = defaultdict(list)   # vertex -> [(len, path, src)]
    outof = defaultdict(list)  # vertex -> [(len, path, tgt)]
    for (s, t, p) in paths:
        into[t].append((len(p), p, s))
        outof[s].append((len(p), p, t))

    def rel_ends(rterms, arrows):
        # all terms share src/tgt; get from first term
        cf, path = rterms[0]
        assert path, "empty relation path"
        src = arrows[path[0]][0]
        tgt = arrows[path[-1]][1]
        return src, tgt

    dims = []
    for j in range(m + 1):
        npaths = sum(len(by_len[l]) for l in range(j + 1))
        rref = SparseRREF(F)
        for rterms in relations:
            rsrc, rtgt = rel_ends(rterms, arrows)
            minrel = min(len(p) for _, p in rterms)
            for (lp, pre, psrc) in into[rsrc]:
                if lp + minrel > j:
                    continue
                for (lq, post, qtgt) in outof[rtgt]:
                    if lp + minrel + lq > j:
                        continue
                    row = {}
                    for (cf, rp) in rterms:
                        tot = lp + len(rp) + lq
                        if tot > j:
                            continue
                        key = pre + tuple(rp) + post
                        val = F.el(cf)
                        if key in row:
                            val = F.add(row[key], val)
                        row[key] = val
                    row = {k: v for k, v in row.items() if any(x != 0 for x in v)}
                    if row:
                        rref.add_row(row)
        dims.append(npaths - rref.rank)
    return dims


def preprojective_quotient(nverts, k, nk, m):
    """Cyclic quiver on nverts vertices (1..nverts), arrows x_i: i-1 -> i and
    y_i: i -> i-1 (indices mod nverts, stored 1..nverts). Relations:
    at each vertex i: x_i y_i = y_{i+1} x_{i+1} (loops at i); and from each
    vertex i: (k x-steps) = (nk y-steps). Returns (vertices, arrows,
    relations) for filtered_dims."""
    V = list(range(1, nverts + 1))
    def md(i):
        return ((i - 1) % nverts) + 1
    arrows = {}
    for i in V:
        arrows[('x', i)] = (md(i - 1), i)
        arrows[('y', i)] = (i, md(i - 1))
    rels = []
    one = {0: Fraction(1)}
    mone = {0: Fraction(-1)}
    for i in V:
        # loops at i: [y_i, x_i] and [x_{i+1}, y_{i+1}]
        rels.append([(one, [('y', i), ('x', i)]),
                     (mone, [('x', md(i + 1)), ('y', md(i + 1))])])
    for i in V:
        xs = [('x', md(i + t)) for t in range(1, k + 1)]
        ys = [('y', md(i - t)) for t in range(0, nk)]
        rels.append([(one, xs), (mone, ys)])
    return V, arrows, rels


def filtered_dims_blocks(vertices, arrows, relations, m, field, pairs=None):
    """Like filtered_dims but returns (total_dims, block_dims) where
    block_dims[j] restricts to paths with (src,tgt) in `pairs` (a set), using
    the fact that ideal generators never mix (src,tgt) blocks."""
    F = field
    paths = enumerate_paths(vertices, arrows, m)
    into = defaultdict(list)
    outof = defaultdict(list)
    for (s, t, p) in paths:
        into[t].append((len(p), p, s))
        outof[s].append((len(p), p, t))
    ends = {}
    for (s, t, p) in paths:
        ends[p] = (s, t)

    def rel_ends(rterms):
        cf, path = rterms[0]
        src = arrows[path[0]][0]
        tgt = arrows[path[-1]][1]
        return src, tgt

    tot, blk = [], []
    for j in range(m + 1):
        npaths = 0
        nblock = 0
        for (s, t, p) in paths:
            if len(p) <= j:
                npaths += 1
                if pairs is not None and (s, t) in pairs:
                    nblock += 1
        rref_all = SparseRREF(F)
        rref_blk = SparseRREF(F)
        for rterms in relations:
            rsrc, rtgt = rel_ends(rterms)
            minrel = min(len(p) for _, p in rterms)
            for (lp, pre, psrc) in into[rsrc]:
                if lp + minrel > j:
                    continue
                for (lq, post, qtgt) in outof[rtgt]:
                    if lp + minrel + lq > j:
                        continue
                    row = {}
                    for (cf, rp) in rterms:
                        if lp + len(rp) + lq > j:
                            continue
                        key = pre + tuple(rp) + post
                        val = F.el(cf)
                        if key in row:
                            val = F.add(row[key], val)
                        row[key] = val
                    row = {k: v for k, v in row.items() if any(x != 0 for x in v)}
                    if row:
                        rref_all.add_row(row)
                        if pairs is not None and (psrc, qtgt) in pairs:
                            rref_blk.add_row(dict(row))
        tot.append(npaths - rref_all.rank)
        if pairs is not None:
            blk.append(nblock - rref_blk.rank)
    return tot, blk


def full_rref_reduce(pivots, field):
    """Return reduce(vec) fully substituting pivots (pivot col = min of row)."""
    F = field
    def reduce_vec(vec):
        vec = dict(vec)
        done = {}
        while vec:
            c = min(vec)
            v = vec.pop(c)
            if not any(x != 0 for x in v):
                continue
            if c in pivots:
                row = pivots[c]
                nv = F.neg(v)
                for k, w in row.items():
                    if k == c:
                        continue
                    acc = F.add(vec.get(k, F.zero()), F.mul(nv, w))
                    if any(x != 0 for x in acc):
                        vec[k] = acc
                    elif k in vec:
                        del vec[k]
            else:
                done[c] = v
        return done
    return reduce_vec


def idempotent_radical_dims(vertices, arrows, relations, frozen, jmax, m, field):
    """dim eAe / rad(eAe)^j for j = 0..jmax, computed inside A_m = A/(I+P^{>m}).
    rad(eAe)^j is spanned by images of paths with both endpoints frozen that cut
    into j positive frozen-endpoint pieces (>= j-1 intermediate frozen visits)."""
    F = field
    paths = enumerate_paths(vertices, arrows, m)
    into = defaultdict(list)
    outof = defaultdict(list)
    for (s, t, p) in paths:
        into[t].append((len(p), p, s))
        outof[s].append((len(p), p, t))
    rref = SparseRREF(F)
    for rterms in relations:
        cf0, p0 = rterms[0]
        rsrc, rtgt = arrows[p0[0]][0], arrows[p0[-1]][1]
        minrel = min(len(p) for _, p in rterms)
        for (lp, pre, psrc) in into[rsrc]:
            if lp + minrel > m:
                continue
            for (lq, post, qtgt) in outof[rtgt]:
                if lp + minrel + lq > m:
                    continue
                row = {}
                for (cf, rp) in rterms:
                    if lp + len(rp) + lq > m:
                        continue
                    key = pre + tuple(rp) + post
                    val = F.el(cf)
                    if key in row:
                        val = F.add(row[key], val)
                    row[key] = val
                row = {k: v for k, v in row.items() if any(x != 0 for x in v)}
                if row:
                    rref.add_row(row)
    reduce_vec = full_rref_reduce(rref.pivots, F)
    frozen = set(frozen)
    # frozen-endpoint paths and their max piece count
    blockdim = 0
    by_cut = defaultdict(list)  # j -> list of paths entering rad^j newly at j
    for (s, t, p) in paths:
        if s not in frozen or t not in frozen:
            continue
        if p not in rref.pivots:
            blockdim += 1
        if len(p) == 0:
            continue
        inner = sum(1 for a in p[:-1] if arrows[a][1] in frozen)
        by_cut[1 + inner].append(p)
    dims = []
    radr = SparseRREF(F)
    one = F.one()
    # j = 0: rad^0 = B
    dims.append(0)  # placeholder, fixed below
    pending = []
    maxcut = max(by_cut) if by_cut else 0
    out = []
    for j in range(0, jmax + 1):
        # rank of rad^j: spanned by paths with cut count >= j
        radr = SparseRREF(F)
        if j == 0:
            out.append(blockdim - 0 + 0)  # dim B/rad^0 = 0; handled specially
            continue
        for jj in range(j, maxcut + 1):
            for p in by_cut[jj]:
                red = reduce_vec({p: one})
                if red:
                    radr.add_row(red)
        out.append(blockdim - (blockdim - radr.rank))
    # out[j] currently = rank(rad^j); convert: dim B/rad^j = blockdim - rank(rad^j)
    dims = [0 if j == 0 else blockdim - out[j] for j in range(jmax + 1)]
    # reindex like filtered dims: entry j = dim B/rad^{j+1}
    return [dims[j + 1] for j in range(jmax)], blockdim


def filtered_dims_pairblocks(vertices, arrows, relations, m, field):
    """Per-(src,tgt) filtered dims: returns dict {(u,v): [dims j=0..m]}."""
    F = field
    paths = enumerate_paths(vertices, arrows, m)
    into = defaultdict(list)
    outof = defaultdict(list)
    for (s, t, p) in paths:
        into[t].append((len(p), p, s))
        outof[s].append((len(p), p, t))
    res = {(u, v): [0] * (m + 1) for u in vertices for v in vertices}
    for j in range(m + 1):
        counts = defaultdict(int)
        for (s, t, p) in paths:
            if len(p) <= j:
                counts[(s, t)] += 1
        rrefs = defaultdict(lambda: SparseRREF(F))
        for rterms in relations:
            cf0, p0 = rterms[0]
            rsrc, rtgt = arrows[p0[0]][0], arrows[p0[-1]][1]
            minrel = min(len(p) for _, p in rterms)
            for (lp, pre, psrc) in into[rsrc]:
                if lp + minrel > j:
                    continue
                for (lq, post, qtgt) in outof[rtgt]:
                    if lp + minrel + lq > j:
                        continue
                    row = {}
                    for (cf, rp) in rterms:
                        if lp + len(rp) + lq > j:
                            continue
                        key = pre + tuple(rp) + post
                        val = F.el(cf)
                        if key in row:
                            val = F.add(row[key], val)
                        row[key] = val
                    row = {k: v for k, v in row.items() if any(x != 0 for x in v)}
                    if row:
                        rrefs[(psrc, qtgt)].add_row(row)
        for (u, v) in res:
            res[(u, v)][j] = counts[(u, v)] - rrefs[(u, v)].rank
    return res
