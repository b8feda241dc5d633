"""Combinatorial d-fold symmetrization (lift) of an orbifold diagram, the
quotient of a rotation-symmetric plabic diagram, and diagram isomorphism."""
import comb


def md(i, n):
    return ((i - 1) % n) + 1


def cut_steps(diag):
    """(strand, segment) -> copy step when traversing the segment forward.
    Flag 'R' (cut crosses the strand from its right to its left) means the
    strand passes the cut from the cut's left to its right: step +1."""
    steps = {}
    for (s, j, fl) in diag.get('cut', []):
        steps[(s, j)] = 1 if fl == 'R' else -1
    return steps


def pre_offsets(diag):
    """pre[(s, p)] = cumulative copy offset of strand s when arriving at visit
    position p (sum of steps over segments 1..p-1)."""
    steps = cut_steps(diag)
    pre = {}
    for s in range(1, diag['n_points'] + 1):
        V = len(comb.strand_visits(diag, s))
        acc = 0
        for p in range(1, V + 1):
            pre[(s, p)] = acc
            acc += steps.get((s, p), 0)
        pre[(s, V + 1)] = acc  # total winding contribution
    return pre


def sym_d(diag, d=None):
    """Lift an orbifold diagram to its d-fold cover (plabic diagram)."""
    assert diag['kind'] == 'orbifold'
    n0 = diag['n_points']
    if d is None:
        d = diag['order']
    n = n0 * d
    pre = pre_offsets(diag)

    cov = {'kind': 'postnikov', 'n_points': n, 'order': 1, 'cut': [],
           'strands': [], 'crossings': {}, 'tau': []}

    # cover crossing ids: (cid, m) -> new id (dense, stable order)
    newid = {}
    for cid in sorted(diag['crossings']):
        for m in range(d):
            newid[(cid, m)] = len(newid) + 1

    # strands: cover strand s + l*n0 starts at point s + l*n0
    visits_cov = {}
    for l in range(d):
        for s in range(1, n0 + 1):
            vis = comb.strand_visits(diag, s)
            cvis = []
            for p, cid in enumerate(vis, start=1):
                m = (l + pre[(s, p)]) % d
                cvis.append(newid[(cid, m)])
            visits_cov[s + l * n0] = cvis
    for S in range(1, n + 1):
        cov['strands'].append(visits_cov[S])

    # tau: sigma(i) = tau(i) + total_winding * n0, in copy terms
    for l in range(d):
        for s in range(1, n0 + 1):
            V = len(comb.strand_visits(diag, s))
            w = pre[(s, V + 1)]
            t0 = diag['tau'][s - 1]
            cov['tau'].append(md(t0 + (l + w) * n0, n))
    cov['tau'] = [cov['tau'][S - 1] for S in range(1, n + 1)]

    # crossings
    for cid in sorted(diag['crossings']):
        rec = diag['crossings'][cid]
        (s1, p1), (s2, p2) = rec['a'], rec['b']
        for m in range(d):
            l1 = (m - pre[(s1, p1)]) % d
            l2 = (m - pre[(s2, p2)]) % d
            va = (s1 + l1 * n0, p1)
            vb = (s2 + l2 * n0, p2)
            chir = rec['chir']
            if vb < va:
                va, vb = vb, va
                chir = 'L' if chir == 'R' else 'R'
            nrec = {'a': va, 'b': vb, 'chir': chir, 'at': None}
            if rec.get('at') is not None:
                # boundary point: use the outgoing strand's copy
                (so, po), _ = comb.out_in_visits(diag, cid)
                lo = (m - pre[(so, po)]) % d
                nrec['at'] = md(rec['at'] + lo * n0, n)
            cov['crossings'][newid[(cid, m)]] = nrec
    return cov


# ------------------------------------------------------------ isomorphism

def canonical_key(diag):
    """Canonical serialization invariant under crossing relabeling (strand ids
    and boundary points fixed)."""
    order = {}
    for vis in diag['strands']:
        for c in vis:
            if c not in order:
                order[c] = len(order) + 1
    for cid in sorted(diag['crossings']):
        if cid not in order:
            order[cid] = len(order) + 1
    strands = tuple(tuple(order[c] for c in vis) for vis in diag['strands'])
    crox = []
    for cid in sorted(diag['crossings'], key=lambda c: order[c]):
        r = diag['crossings'][cid]
        crox.append((order[cid], r['a'], r['b'], r['chir'], r.get('at')))
    return (diag['kind'], diag['n_points'], diag.get('order', 1),
            tuple(diag['tau']), strands, tuple(crox))


def rotate_diag(diag, r):
    """Rotate boundary labels by r: point p -> p + r (plabic or orbifold with
    r a multiple of nothing in particular; strand i -> i + r)."""
    n = diag['n_points']
    sh = lambda p: md(p + r, n)
    out = {'kind': diag['kind'], 'n_points': n, 'order': diag.get('order', 1),
           'cut': [], 'tau': [0] * n, 'strands': [None] * n, 'crossings': {}}
    for i in range(1, n + 1):
        out['strands'][sh(i) - 1] = list(diag['strands'][i - 1])
        out['tau'][sh(i) - 1] = sh(diag['tau'][i - 1])
    for cid, rec in diag['crossings'].items():
        (s1, p1), (s2, p2) = rec['a'], rec['b']
        va, vb = (sh(s1), p1), (sh(s2), p2)
        chir = rec['chir']
        if vb < va:
            va, vb = vb, va
            chir = 'L' if chir == 'R' else 'R'
        nrec = {'a': va, 'b': vb, 'chir': chir, 'at': None}
        if rec.get('at') is not None:
            nrec['at'] = sh(rec['at'])
        out['crossings'][cid] = nrec
    return out


def isomorphic(d1, d2, rotations=None):
    """True if d1 and d2 agree up to crossing relabeling and a boundary
    rotation (cut data ignored)."""
    if d1['kind'] != d2['kind'] or d1['n_points'] != d2['n_points']:
        return False
    n = d1['n_points']
    k2 = canonical_key(d2)
    rots = rotations if rotations is not None else range(n)
    for r in rots:
        if canonical_key(rotate_diag(d1, r)) == k2:
            return True
    return False


# ------------------------------------------------------------ quotient

def quotient(diag, d):
    """Quotient of a d-fold rotation-symmetric plabic diagram by the rotation;
    returns an orbifold diagram with a valid cut (built by BFS from the
    rotation-fixed face to the boundary between points n0 and 1)."""
    n = diag['n_points']
    assert n % d == 0
    n0 = n // d
    res = comb.find_rotation(diag, d)
    assert res is not None, "diagram is not rotation symmetric"
    smap, cmap = res

    # crossing orbits
    orbit_rep = {}
    for c in diag['crossings']:
        if c in orbit_rep:
            continue
        orb = [c]
        x = cmap[c]
        while x != c:
            orb.append(x)
            x = cmap[x]
        rep = min(orb)
        for y in orb:
            orbit_rep[y] = rep
    reps = sorted(set(orbit_rep.values()))
    newid = {r: i + 1 for i, r in enumerate(reps)}

    out = {'kind': 'orbifold', 'n_points': n0, 'order': d, 'cut': [],
           'strands': [], 'crossings': {}, 'tau': []}
    for s in range(1, n0 + 1):
        out['strands'].append([newid[orbit_rep[c]] for c in diag['strands'][s - 1]])
        out['tau'].append(md(diag['tau'][s - 1], n0))
    for r in reps:
        rec = diag['crossings'][r]
        (s1, p1), (s2, p2) = rec['a'], rec['b']
        va, vb = (md(s1, n0), p1), (md(s2, n0), p2)
        chir = rec['chir']
        if vb < va:
            va, vb = vb, va
            chir = 'L' if chir == 'R' else 'R'
        nrec = {'a': va, 'b': vb, 'chir': chir, 'at': None}
        if rec.get('at') is not None:
            nrec['at'] = md(rec['at'], n0)
        out['crossings'][newid[r]] = nrec

    out['cut'] = build_cut(diag, d, out, orbit_rep, newid)
    return out


def build_cut(cover, d, orb, orbit_rep, newid):
    """Cut for the quotient: shortest face path from the image of the cover's
    rotation-fixed face to the boundary face at arc n0."""
    n0 = orb['n_points']
    facesC, _ = comb.trace_faces(cover)
    fmapC = comb.face_of_dart(facesC)
    perm, _, _ = comb.face_rotation(cover, facesC, fmapC, d)
    fixed = [f for f, g in perm.items() if f == g
             and all(x[0] == 'seg' for x in facesC[f])]
    assert len(fixed) == 1, ("fixed faces", fixed)
    dart = facesC[fixed[0]][0]
    _, S, j, end = dart
    # project to the quotient via the orbit representative of the adjacent
    # crossing: segment j of cover strand S descends to segment j of strand
    # S mod n0, but the crossing ids must be re-read from the quotient strand
    qdart = ('seg', md(S, n0), j, end)

    facesQ, _ = comb.trace_faces(orb)
    fmapQ = comb.face_of_dart(facesQ)
    start = fmapQ[qdart]
    target = None
    for e in (0, 1):
        if ('arc', n0, e) in fmapQ:
            target = fmapQ[('arc', n0, e)]
    assert target is not None

    # face adjacency through interior segments
    adj = {}
    for s in range(1, n0 + 1):
        V = len(comb.strand_visits(orb, s))
        for j in range(1, V):
            lf = fmapQ[('seg', s, j, 0)]
            rf = fmapQ[('seg', s, j, 1)]
            if lf != rf:
                adj.setdefault(lf, []).append((rf, (s, j, 'L')))
                adj.setdefault(rf, []).append((lf, (s, j, 'R')))
    from collections import deque
    prev = {start: None}
    q = deque([start])
    while q:
        f = q.popleft()
        if f == target:
            break
        for (g, step) in adj.get(f, []):
            if g not in prev:
                prev[g] = (f, step)
                q.append(g)
    assert target in prev, "no cut path found"
    path = []
    f = target
    while prev[f] is not None:
        f, step = prev[f]
        path.append(step)
    return path[::-1]
