"""Boundary-algebra presentation discovery inside a truncated Jacobian algebra."""
from fractions import Fraction
from collections import defaultdict, deque
import alg


def block_structure(vertices, arrows, relations, frozen, m, field):
    """RREF of ideal in A_m; returns (reduce_vec, e-paths by length)."""
    F = field
    paths = alg.enumerate_paths(vertices, arrows, m)
    into = defaultdict(list)
    outof = defaultdict(list)
    for (s, t, p) in paths:
        into[t].append((len(p), p, s))
        outof[s].append((len(p), p, t))
    rref = alg.SparseRREF(F)
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
    reduce_vec = alg.full_rref_reduce(rref.pivots, F)
    fr = set(frozen)
    epaths = sorted([(len(p), s, t, p) for (s, t, p) in paths
                     if s in fr and t in fr and len(p) > 0])
    return reduce_vec, epaths


def find_generators(vertices, arrows, relations, frozen, m, field):
    """Minimal generators of rad(eAe): shortest e-paths whose images are
    independent modulo rad^2 (span of two-piece concatenations)."""
    F = field
    reduce_vec, epaths = block_structure(vertices, arrows, relations, frozen, m, field)
    fr = set(frozen)
    one = F.one()
    rad2 = alg.SparseRREF(F)
    for (l, s, t, p) in epaths:
        inner = [i for i in range(1, l) if arrows[p[i - 1]][1] in fr]
        if inner:
            red = reduce_vec({p: one})
            if red:
                rad2.add_row(red)
    span = alg.SparseRREF(F)
    for c, row in rad2.pivots.items():
        span.add_row(dict(row))
    gens = []
    for (l, s, t, p) in epaths:
        red = reduce_vec({p: one})
        if not red:
            continue
        if span.add_row(dict(red)):
            gens.append((l, s, t, p))
    return gens, reduce_vec


def rewrite_verify(arrows, relations, start_path, goal_path, field, maxlen, maxstates=2000000):
    """BFS over binomial relation substitutions: is start = lambda * goal in
    A/I? relations must be binomial ([(c1,p1),(c2,p2)]). Returns lambda or None."""
    F = field
    rules = []
    for rterms in relations:
        assert len(rterms) == 2, "rewrite_verify needs binomial relations"
        (c1, p1), (c2, p2) = rterms
        a, b = tuple(p1), tuple(p2)
        ca, cb = F.el(c1), F.el(c2)
        # a = -(c2/c1) b  and b = -(c1/c2) a
        rules.append((a, b, F.neg(F.mul(cb, F.inv(ca)))))
        rules.append((b, a, F.neg(F.mul(ca, F.inv(cb)))))
    start = tuple(start_path)
    goal = tuple(goal_path)
    seen = {start: F.one()}
    dq = deque([start])
    while dq:
        p = dq.popleft()
        co = seen[p]
        if p == goal:
            return co
        for (a, b, fac) in rules:
            la = len(a)
            for i in range(len(p) - la + 1):
                if p[i:i + la] == a:
                    q = p[:i] + b + p[i + la:]
                    if len(q) > maxlen:
                        continue
                    if q not in seen:
                        seen[q] = F.mul(co, fac)
                        dq.append(q)
                        if len(seen) > maxstates:
                            raise RuntimeError('state cap')
    return seen.get(goal)
