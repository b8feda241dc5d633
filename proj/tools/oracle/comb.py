"""Combinatorial core for strand diagrams encoded as combinatorial maps.

Data model (dict):
  n_points : int
  kind     : 'postnikov' | 'orbifold'
  order    : int (orbifold only)
  tau      : list, tau[i-1] = endpoint of strand i
  strands  : list of visit lists; strands[i-1] = [crossing ids in order]
  crossings: dict id -> {'a': (s,pos), 'b': (s,pos), 'chir': 'L'|'R', 'at': point or None}
  cut      : list of (strand, seg, flag)  ordered from center outward (orbifold)

Conventions:
  - chir 'L'  <=>  strand of visit b crosses strand of visit a from a's left.
  - winding sign: flag 'R' (+1), 'L' (-1)  -- clockwise positive.
  - segment j of strand s connects visit j and visit j+1 (1-based visits).
"""

from collections import defaultdict


def strand_visits(diag, s):
    return diag['strands'][s - 1]


def visit_role(diag, cid, which):
    return diag['crossings'][cid][which]


def other_visit(diag, cid, s, pos):
    c = diag['crossings'][cid]
    if c['a'] == (s, pos):
        return c['b']
    assert c['b'] == (s, pos), (cid, s, pos, c)
    return c['a']


def is_boundary_crossing(diag, cid):
    return diag['crossings'][cid].get('at') is not None


def out_in_visits(diag, cid):
    """For a boundary crossing: ((s_out,1-pos), (s_in,last-pos))."""
    c = diag['crossings'][cid]
    p = c['at']
    res_out = res_in = None
    for v in (c['a'], c['b']):
        s, pos = v
        if pos == 1 and s == p_of_start(diag, p):
            res_out = v
        if pos == len(strand_visits(diag, s)) and diag['tau'][s - 1] == p:
            res_in = v
    # disambiguate when a strand starts and ends at the same point
    if res_out is None or res_in is None:
        for v in (c['a'], c['b']):
            s, pos = v
            if pos == 1 and res_out is None:
                res_out = v
            elif pos == len(strand_visits(diag, s)) and res_in is None and v != res_out:
                res_in = v
    assert res_out and res_in and res_out != res_in, (cid, c)
    return res_out, res_in


def p_of_start(diag, p):
    return p  # strand i starts at point i


# ---------------------------------------------------------------- rotation map

def build_map(diag):
    """Return (rot, edges) where:
       rot: vertex -> clockwise-ordered list of darts.
       dart: ('seg', s, j, end) with end in {0,1} (0 = at visit j, 1 = at visit j+1)
             ('arc', p, end)    arc p joins point p (end 0) to point p+1 (end 1)
       vertex: ('x', cid) for crossings; ('pt', p) for strandless marked points.
       A dart is listed at the vertex it emanates from.
    """
    n = diag['n_points']
    rot = {}
    # vertex of each (strand, visit index)
    def vtx(s, j):
        return ('x', strand_visits(diag, s)[j - 1])

    point_vertex = {}
    for cid, c in diag['crossings'].items():
        if c.get('at') is not None:
            point_vertex[c['at']] = ('x', cid)
    for p in range(1, n + 1):
        if p not in point_vertex:
            point_vertex[p] = ('pt', p)

    def arc_dart(p, end):
        return ('arc', p, end)

    for cid, c in diag['crossings'].items():
        (sa, ia), (sb, ib) = c['a'], c['b']
        if c.get('at') is None:
            a_in = ('seg', sa, ia - 1, 1)
            a_out = ('seg', sa, ia, 0)
            b_in = ('seg', sb, ib - 1, 1)
            b_out = ('seg', sb, ib, 0)
            if c['chir'] == 'L':
                rot[('x', cid)] = [a_in, b_in, a_out, b_out]
            else:
                rot[('x', cid)] = [a_in, b_out, a_out, b_in]
        else:
            p = c['at']
            (so, io), (si, ii) = out_in_visits(diag, cid)
            eff = c['chir']
            if c['a'] != (so, io):
                eff = 'L' if eff == 'R' else 'R'
            o_out = ('seg', so, io, 0)          # io == 1
            i_in = ('seg', si, ii - 1, 1)
            arc_next = arc_dart(p, 0)           # toward p+1 (clockwise)
            arc_prev = arc_dart(p - 1 if p > 1 else n, 1)
            if eff == 'R':
                rot[('x', cid)] = [arc_next, o_out, i_in, arc_prev]
            else:
                rot[('x', cid)] = [arc_next, i_in, o_out, arc_prev]
    for p in range(1, n + 1):
        if point_vertex[p][0] == 'pt':
            rot[('pt', p)] = [arc_dart(p, 0), arc_dart(p - 1 if p > 1 else n, 1)]

    # sanity: every segment dart has a home
    def dart_vertex(d):
        if d[0] == 'seg':
            _, s, j, end = d
            V = len(strand_visits(diag, s))
            jj = j + end
            assert 1 <= jj <= V, d
            return vtx(s, jj)
        else:
            _, p, end = d
            q = p if end == 0 else (p % n) + 1
            return point_vertex[q]

    for v, darts in rot.items():
        for d in darts:
            assert dart_vertex(d) == v, (v, d, dart_vertex(d))
    return rot, dart_vertex, point_vertex


def opposite(diag, d):
    if d[0] == 'seg':
        _, s, j, end = d
        return ('seg', s, j, 1 - end)
    _, p, end = d
    return ('arc', p, 1 - end)


def trace_faces(diag):
    """Face walk. Returns list of faces; each face is a list of darts
    (dart = direction of traversal: we 'leave' along that dart).
    Outer face removed (and asserted to be all arcs, one direction)."""
    rot, dart_vertex, _ = build_map(diag)
    succ = {}
    for v, darts in rot.items():
        k = len(darts)
        for i, d in enumerate(darts):
            succ[d] = (v, darts[(i + 1) % k])
    used = set()
    faces = []
    for v, darts in sorted(rot.items(), key=lambda kv: str(kv[0])):
        for d0 in darts:
            if d0 in used:
                continue
            face = []
            d = d0
            while True:
                face.append(d)
                used.add(d)
                opp = opposite(diag, d)
                vv, nxt = succ[opp]
                d = nxt
                if d == d0:
                    break
                assert d not in used, "face walk does not close"
            faces.append(face)
    # identify outer face: all darts are arcs, same direction class
    outer = [f for f in faces
             if all(d[0] == 'arc' for d in f) and len(f) == diag['n_points']
             and len(set(d[2] for d in f)) == 1]
    # pick the one matching traversal orientation: there may be also an inner
    # all-arc face (empty diagram). Outer is the one traversing arcs with end=?
    # Calibrated below by Euler count.
    assert outer, "no outer face found"
    if len(outer) > 1:
        # empty diagram: drop the one with end==1 (arbitrary but fixed)
        outer = [f for f in outer if f[0][3 - 1] == 1] or [outer[0]]
    faces.remove(outer[0])
    return faces, outer[0]


def euler_check(diag):
    faces, _ = trace_faces(diag)
    n = diag['n_points']
    V = len(diag['crossings']) + sum(
        1 for p in range(1, n + 1)
        if not any(c.get('at') == p for c in diag['crossings'].values()))
    nseg = sum(max(len(v) - 1, 0) for v in diag['strands'])
    # strands with no crossings at all contribute one edge from start to end pt
    E = nseg + n
    F = len(faces)
    return V - E + F == 1, (V, E, F)


# ------------------------------------------------------------- face structure

def face_kinds(diag, faces):
    """Classify faces. Returns list of (face, kind) with kind in
    {'boundary','cyclic','alternating'}; every boundary face is alternating for
    labeling purposes but keeps the 'boundary' kind."""
    out = []
    for f in faces:
        has_arc = any(d[0] == 'arc' for d in f)
        segs = [d for d in f if d[0] == 'seg']
        # direction of traversal vs strand orientation: dart ('seg',s,j,end):
        # leaving along end=0 means walking from visit j to j+1 = forward.
        dirs = [1 if d[3] == 0 else -1 for d in segs]
        if has_arc:
            kind = 'boundary'
        elif all(x == dirs[0] for x in dirs) and dirs:
            kind = 'cyclic'
        else:
            kind = 'alternating'
        out.append((f, kind))
    return out


def face_of_dart(faces):
    m = {}
    for i, f in enumerate(faces):
        for d in f:
            m[d] = i
    return m


def left_face_of_segment(diag, faces, fmap, s, j, handed):
    """Face on the left of segment (s,j). handed=+1 means: the face that
    traverses the forward dart is on the left."""
    fwd = fmap[('seg', s, j, 0)]
    bwd = fmap[('seg', s, j, 1)]
    return fwd if handed == 1 else bwd, (bwd if handed == 1 else fwd)


# ------------------------------------------------------------------- windings

FLAG_SIGN = {'R': 1, 'L': -1}


def cut_by_strand(diag):
    m = defaultdict(list)
    for idx, (s, j, fl) in enumerate(diag.get('cut', [])):
        m[s].append((j, fl, idx))
    return m


def signed_cut_count(diag, s, seg_lo, seg_hi):
    """Sum of flag signs over cut crossings on segments seg_lo..seg_hi of s."""
    tot = 0
    for (j, fl, _) in cut_by_strand(diag).get(s, []):
        if seg_lo <= j <= seg_hi:
            tot += FLAG_SIGN[fl]
    return tot


def self_crossings(diag, s):
    """[(cid, i, j)] with i<j both visits of s."""
    res = []
    vis = strand_visits(diag, s)
    for cid in set(vis):
        c = diag['crossings'][cid]
        if c['a'][0] == s and c['b'][0] == s:
            i, j = sorted((c['a'][1], c['b'][1]))
            res.append((cid, i, j))
    return res


def S_value(diag, s):
    best = 0
    for (_, i, j) in self_crossings(diag, s):
        w = signed_cut_count(diag, s, i, j - 1)
        best = max(best, abs(w))
    return best


def double_crossings(diag, s1, s2):
    """Pairs (A,B) of common crossings with both strands A->B."""
    commons = []
    for cid, c in diag['crossings'].items():
        ss = {c['a'][0], c['b'][0]}
        if ss == {s1, s2}:
            p1 = c['a'][1] if c['a'][0] == s1 else c['b'][1]
            p2 = c['a'][1] if c['a'][0] == s2 else c['b'][1]
            commons.append((cid, p1, p2))
    pairs = []
    for i in range(len(commons)):
        for j in range(len(commons)):
            if i == j:
                continue
            (ca, a1, a2), (cb, b1, b2) = commons[i], commons[j]
            if a1 < b1 and a2 < b2:
                pairs.append((ca, cb, a1, b1, a2, b2))
    return pairs


def pair_winding(diag, s1, s2, pr):
    (ca, cb, a1, b1, a2, b2) = pr
    w = signed_cut_count(diag, s1, a1, b1 - 1) - signed_cut_count(diag, s2, a2, b2 - 1)
    return w


def L_value(diag, s1, s2):
    best = 0
    for pr in double_crossings(diag, s1, s2):
        best = max(best, abs(pair_winding(diag, s1, s2, pr)))
    return best


def orbifold_threshold(diag):
    n0 = diag['n_points']
    mS = max(S_value(diag, s) for s in range(1, n0 + 1))
    mL = 0
    for s1 in range(1, n0 + 1):
        for s2 in range(s1 + 1, n0 + 1):
            mL = max(mL, L_value(diag, s1, s2))
    return max(mS, mL)


def strand_winding(diag, s):
    V = len(strand_visits(diag, s))
    return signed_cut_count(diag, s, 0, V)


# --------------------------------------------------------------- validation

def alternation_report(diag):
    """Condition (3): per strand the crossing sides must alternate."""
    bad = []
    for s in range(1, diag['n_points'] + 1):
        sides = []
        for pos, cid in enumerate(strand_visits(diag, s), start=1):
            c = diag['crossings'][cid]
            if c['a'] == (s, pos):
                sides.append(c['chir'])
            else:
                assert c['b'] == (s, pos)
                sides.append('L' if c['chir'] == 'R' else 'R')
        for k in range(len(sides) - 1):
            if sides[k] == sides[k + 1]:
                bad.append((s, k + 1, sides))
                break
    return bad


def condition4_violations_postnikov(diag):
    bad = []
    n = diag['n_points']
    for s1 in range(1, n + 1):
        for s2 in range(s1 + 1, n + 1):
            for pr in double_crossings(diag, s1, s2):
                bad.append((s1, s2, pr[0], pr[1]))
    return bad


def condition4_violations_weak(diag):
    bad = []
    n = diag['n_points']
    for s1 in range(1, n + 1):
        for s2 in range(s1 + 1, n + 1):
            for pr in double_crossings(diag, s1, s2):
                if pair_winding(diag, s1, s2, pr) == 0:
                    bad.append((s1, s2, pr[0], pr[1]))
    return bad


def condition5_violations(diag, weak):
    bad = []
    faces, _ = trace_faces(diag)
    for s in range(1, diag['n_points'] + 1):
        for (cid, i, j) in self_crossings(diag, s):
            if weak and signed_cut_count(diag, s, i, j - 1) != 0:
                continue
            # must be an empty simple loop: no crossings strictly inside walk
            if j == i + 1:
                # monogon: face bounded by segment (s,i) alone
                ok = any(len(f) == 1 and f[0][0] == 'seg' and f[0][1] == s
                         and f[0][2] == i for f in faces)
                if ok:
                    continue
            bad.append((s, cid, i, j))
    return bad


def validate_postnikov(diag):
    ok_euler, vef = euler_check(diag)
    rep = {
        'euler': ok_euler,
        'alternation': alternation_report(diag),
        'cond4': condition4_violations_postnikov(diag),
        'cond5': condition5_violations(diag, weak=False),
    }
    rep['ok'] = ok_euler and not rep['alternation'] and not rep['cond4'] and not rep['cond5']
    return rep


def validate_weak_orbifold(diag):
    ok_euler, vef = euler_check(diag)
    rep = {
        'euler': ok_euler,
        'alternation': alternation_report(diag),
        'cond4': condition4_violations_weak(diag),
        'cond5': condition5_violations(diag, weak=True),
    }
    rep['ok'] = ok_euler and not rep['alternation'] and not rep['cond4'] and not rep['cond5']
    return rep


def check_grassmannian(diag):
    n = diag['n_points']
    tau = diag['tau']
    for k in range(n):
        if all(tau[i - 1] == ((i - 1 + k) % n) + 1 for i in range(1, n + 1)):
            return (k, n)
    return None


# ------------------------------------------------------------------ labels

def postnikov_labels(diag, handed=1):
    """Map face index -> sorted label list, for alternating+boundary faces."""
    faces, _ = trace_faces(diag)
    fmap = face_of_dart(faces)
    kinds = face_kinds(diag, faces)
    n = diag['n_points']
    labels = defaultdict(set)
    for s in range(1, n + 1):
        # two-coloring: flip across segments of s
        adj = defaultdict(list)
        for ss in range(1, n + 1):
            V = len(strand_visits(diag, ss))
            for j in range(1, V):
                f1 = fmap[('seg', ss, j, 0)]
                f2 = fmap[('seg', ss, j, 1)]
                adj[f1].append((f2, ss == s))
                adj[f2].append((f1, ss == s))
        for p in range(1, n + 1):
            f1 = fmap.get(('arc', p, 0))
            f2 = fmap.get(('arc', p, 1))
            if f1 is not None and f2 is not None and f1 != f2:
                adj[f1].append((f2, False))
                adj[f2].append((f1, False))
        color = {}
        # seed: faces traversing forward darts of s are 'left' (handed=1)
        stack = []
        for j in range(1, len(strand_visits(diag, s))):
            fwd = fmap[('seg', s, j, 0 if handed == 1 else 1)]
            if fwd not in color:
                color[fwd] = 'left'
                stack.append(fwd)
        while stack:
            f = stack.pop()
            for (g, flip) in adj[f]:
                want = ('right' if color[f] == 'left' else 'left') if flip else color[f]
                if g in color:
                    assert color[g] == want, f"inconsistent coloring strand {s}"
                else:
                    color[g] = want
                    stack.append(g)
        for i, (f, kind) in enumerate(kinds):
            if kind in ('alternating', 'boundary') and color.get(i) == 'left':
                labels[i].add(s)
    kindmap = {i: kind for i, (f, kind) in enumerate(face_kinds(diag, faces))}
    return {i: sorted(v) for i, v in labels.items() if kindmap[i] != 'cyclic'}, faces


def rotate_set(I, n0, n):
    return sorted(((x - 1 + n0) % n) + 1 for x in I)


def label_class(I, n0, n):
    orbit = []
    J = sorted(I)
    while True:
        orbit.append(tuple(J))
        J = rotate_set(J, n0, n)
        if tuple(J) == orbit[0]:
            break
    return sorted(set(orbit))


# ------------------------------------------------- direct labeling algorithm

def segment_labels(diag):
    """Step 2: per strand, list of labels per cut-gap; returns
    strand -> list of (seg_range, label) and the flat label set."""
    n0 = diag['n_points']
    d = diag['order']
    n = n0 * d
    per = {}
    allset = set()
    for s in range(1, n0 + 1):
        cuts = sorted(cut_by_strand(diag).get(s, []))  # by seg index
        lab = s
        V = len(strand_visits(diag, s))
        ranges = []
        prev = 0
        # multiple cuts can share a segment; order along strand within a
        # segment equals order along the cut for spirals -- label changes
        # accumulate regardless of intra-segment order.
        for (j, fl, _) in cuts:
            ranges.append(((prev, j), lab))
            lab = ((lab - 1 - n0) % n) + 1 if fl == 'R' else ((lab - 1 + n0) % n) + 1
            prev = j  # note: a segment with a cut crossing has two labels
        ranges.append(((prev, V), lab))
        per[s] = ranges
        for (_, l) in ranges:
            allset.add(l)
    return per, allset


def omega_left_of(diag, s, handed=1):
    """Is the cut centre to the left of strand s? If s crosses the cut, read
    the flag of its cut crossing nearest the centre; else two-colour faces."""
    for (ss, j, fl) in diag.get('cut', []):
        if ss == s:
            return fl == 'L'
    faces, _ = trace_faces(diag)
    fmap = face_of_dart(faces)
    f0 = omega_face(diag, faces, fmap, handed)
    color = {}
    V = len(strand_visits(diag, s))
    stack = []
    for j in range(1, V):
        f = fmap[('seg', s, j, 0 if handed == 1 else 1)]
        if f not in color:
            color[f] = 'left'
            stack.append(f)
    adj = defaultdict(list)
    for ss in range(1, diag['n_points'] + 1):
        Vs = len(strand_visits(diag, ss))
        for j in range(1, Vs):
            f1 = fmap[('seg', ss, j, 0)]
            f2 = fmap[('seg', ss, j, 1)]
            adj[f1].append((f2, ss == s))
            adj[f2].append((f1, ss == s))
    while stack:
        f = stack.pop()
        for (g, flip) in adj[f]:
            want = ('right' if color[f] == 'left' else 'left') if flip else color[f]
            if g in color:
                assert color[g] == want, f"inconsistent colouring strand {s}"
            else:
                color[g] = want
                stack.append(g)
    return color.get(f0) == 'left'


def omega_face(diag, faces, fmap, handed=1):
    """Face containing the cut centre = flag-side face of the innermost cut
    crossing (empty cut: undefined for labeling purposes)."""
    cut = diag.get('cut', [])
    assert cut, "no cut crossings"
    s, j, fl = cut[0]
    if handed == 1:
        end = 1 if fl == 'R' else 0
    else:
        end = 0 if fl == 'R' else 1
    return fmap[('seg', s, j, end)]


def strand_pieces(diag):
    """Split each strand at its cut crossings into labeled pieces.
    Requires at most one cut crossing per segment (asserted).
    Returns (pieces, part_pid, seg_half_side) where
      pieces: list of {'strand','label','items':[(seg, part)]} part in full/lo/hi
      part_pid: (s, seg, part) -> piece index
      seg_half_side: (s, seg) -> {'lo': side, 'hi': side} for cut segments,
        side in {'cw','ccw'} = side of the cut the half lies on."""
    per, _ = segment_labels(diag)
    segs_cut = [(s, j) for (s, j, fl) in diag.get('cut', [])]
    assert len(segs_cut) == len(set(segs_cut)), "cut crosses a segment twice"
    seg_half_side = {}
    for (s, j, fl) in diag.get('cut', []):
        hi = 'cw' if fl == 'R' else 'ccw'
        seg_half_side[(s, j)] = {'hi': hi, 'lo': 'ccw' if hi == 'cw' else 'cw'}
    pieces = []
    part_pid = {}
    for s in range(1, diag['n_points'] + 1):
        V = len(strand_visits(diag, s))
        for ((lo, hi), lab) in per[s]:
            items = []
            if lo > 0:
                items.append((lo, 'hi'))
            for j in range(lo + 1, hi):
                items.append((j, 'full'))
            if hi < V:
                items.append((hi, 'lo'))
            elif hi in [j for (ss, j, _) in diag.get('cut', []) if ss == s]:
                # cut on the last segment: the piece after it is just 'hi'
                pass
            pid = len(pieces)
            pieces.append({'strand': s, 'label': lab, 'items': items})
            for it in items:
                part_pid[(s,) + it] = pid
    return pieces, part_pid, seg_half_side


def cut_open_structure(diag, faces, fmap, handed=1):
    """Faces of the disk cut open along the cut curve.
    Returns (split, side_of, cutfaces) where
      cutfaces = [F0, F1, .., Fm] faces traversed by the cut (F0 = centre face,
        Fm = boundary face; F0 is not split, F1..Fm each split in two),
      split = set of split face indices,
      side_of: (face, dart) -> 'cw'/'ccw' for border darts of split faces
        (split darts themselves excluded)."""
    cut = diag.get('cut', [])
    assert cut
    n0 = diag['n_points']

    def lface(s, j):
        return fmap[('seg', s, j, 0 if handed == 1 else 1)]

    def rface(s, j):
        return fmap[('seg', s, j, 1 if handed == 1 else 0)]

    F0 = omega_face(diag, faces, fmap, handed)
    cutfaces = [F0]
    for (s, j, fl) in cut:
        near = rface(s, j) if fl == 'R' else lface(s, j)
        far = lface(s, j) if fl == 'R' else rface(s, j)
        assert near == cutfaces[-1], ("cut path mismatch", s, j, fl)
        cutfaces.append(far)
    Fm = cutfaces[-1]
    split = set(cutfaces[1:])
    assert len(split) == len(cutfaces) - 1, "cut re-enters a face"
    assert F0 not in split, "cut re-enters the centre face"
    # boundary exit: arc n0 (from point n0 to point 1) borders Fm
    exit_dart = None
    for e in (0, 1):
        if fmap.get(('arc', n0, e)) == Fm:
            exit_dart = ('arc', n0, e)
    assert exit_dart is not None, "cut does not exit between points n0 and 1"

    half = {'hi': {}, 'lo': {}}
    for (s, j, fl) in cut:
        hi = 'cw' if fl == 'R' else 'ccw'
        half['hi'][(s, j)] = hi
        half['lo'][(s, j)] = 'ccw' if hi == 'cw' else 'cw'

    def opp(side):
        return 'ccw' if side == 'cw' else 'cw'

    side_of = {}
    for i in range(1, len(cutfaces)):
        F = cutfaces[i]
        border = faces[F]
        s_in, j_in, _ = cut[i - 1]
        d_in = [d for d in border if d[:1] == ('seg',) and d[1] == s_in and d[2] == j_in]
        assert len(d_in) == 1, (F, s_in, j_in, border)
        d_in = d_in[0]
        if i < len(cutfaces) - 1:
            s_out, j_out, _ = cut[i]
            d_out = [d for d in border if d[:1] == ('seg',) and d[1] == s_out and d[2] == j_out]
            assert len(d_out) == 1
            d_out = d_out[0]
        else:
            d_out = exit_dart
        ii = border.index(d_in)
        io = border.index(d_out)
        # side of border items strictly between d_in and d_out (traversal order)
        SA = half['hi' if d_in[3] == 0 else 'lo'][(s_in, j_in)]
        # cross-check from the exit side
        if d_out[0] == 'seg':
            chk = half['lo' if d_out[3] == 0 else 'hi'][(d_out[1], d_out[2])]
        else:
            chk = 'ccw' if d_out[2] == 0 else 'cw'
        assert chk == SA, (F, d_in, d_out, SA, chk)
        m = len(border)
        k = (ii + 1) % m
        while k != io:
            side_of[(F, border[k])] = SA
            k = (k + 1) % m
        k = (io + 1) % m
        while k != ii:
            side_of[(F, border[k])] = opp(SA)
            k = (k + 1) % m
    return split, side_of, cutfaces


def direct_labels(diag, handed=1):
    """Steps 2-5 of the labeling algorithm on an orbifold diagram.
    Returns dict with 'regions' (face -> sorted labels, non-cyclic faces),
    'halves' (split face -> {'ccw': labels, 'cw': labels}),
    'missing', 'added', 'kinds', 'faces'."""
    faces, _ = trace_faces(diag)
    fmap = face_of_dart(faces)
    kinds = face_kinds(diag, faces)
    kindmap = {i: kind for i, (f, kind) in enumerate(kinds)}
    n0 = diag['n_points']
    d = diag['order']
    n = n0 * d
    pieces, part_pid, seg_half_side = strand_pieces(diag)
    split, side_of, cutfaces = cut_open_structure(diag, faces, fmap, handed)

    def node_at(f, dart, part=None):
        if f not in split:
            return (f, None)
        if (f, dart) in side_of:
            return (f, side_of[(f, dart)])
        # dart is a split dart of f: the relevant half is the one adjacent to
        # the given part of the cut segment
        assert part in ('lo', 'hi'), (f, dart, part)
        _, s, j, _ = dart
        return (f, seg_half_side[(s, j)][part])

    edges = []  # (nodeA, nodeB, pid, left_node)
    nodes = set()
    for s in range(1, n0 + 1):
        V = len(strand_visits(diag, s))
        for j in range(1, V):
            d0 = ('seg', s, j, 0)
            d1 = ('seg', s, j, 1)
            f0, f1 = fmap[d0], fmap[d1]
            parts = ['lo', 'hi'] if (s, j) in seg_half_side else ['full']
            for part in parts:
                nA = node_at(f0, d0, None if part == 'full' else part)
                nB = node_at(f1, d1, None if part == 'full' else part)
                pid = part_pid[(s, j, part)]
                left = nA if handed == 1 else nB
                edges.append((nA, nB, pid, left))
                nodes.add(nA)
                nodes.add(nB)

    labels = {nd: set() for nd in nodes}
    for pid, piece in enumerate(pieces):
        color = {}
        stack = []
        for (nA, nB, p2, left) in edges:
            if p2 != pid:
                continue
            right = nB if left == nA else nA
            for nd, col in ((left, 'L'), (right, 'R')):
                if nd in color:
                    assert color[nd] == col, ("seed clash", pid, nd)
                else:
                    color[nd] = col
                    stack.append(nd)
        adj = defaultdict(list)
        for (nA, nB, p2, left) in edges:
            adj[nA].append((nB, p2 == pid))
            adj[nB].append((nA, p2 == pid))
        while stack:
            nd = stack.pop()
            for (md, flip) in adj[nd]:
                want = ({'L': 'R', 'R': 'L'}[color[nd]]) if flip else color[nd]
                if md in color:
                    assert color[md] == want, ("side clash", pid, md)
                else:
                    color[md] = want
                    stack.append(md)
        assert set(color) == nodes, ("unreached nodes", pid, nodes - set(color))
        for nd in nodes:
            if color[nd] == 'L':
                labels[nd].add(piece['label'])

    # step 5: missing labels
    _, flat = segment_labels(diag)
    missing = sorted(set(range(1, n + 1)) - flat)
    added = []
    for j in missing:
        j0 = ((j - 1) % n0) + 1
        if omega_left_of(diag, j0, handed):
            added.append(j)

    regions = {}
    halves = {}
    for i in range(len(faces)):
        if kindmap[i] == 'cyclic':
            continue
        if i in split:
            ccw = labels.get((i, 'ccw'), set())
            cw = labels.get((i, 'cw'), set())
            halves[i] = {'ccw': sorted(ccw | set(added)),
                         'cw': sorted(cw | set(added))}
            regions[i] = sorted(ccw | set(added))
        else:
            regions[i] = sorted(labels.get((i, None), set()) | set(added))
    return {'regions': regions, 'halves': halves, 'missing': missing,
            'added': added, 'kinds': kindmap, 'faces': faces}


# ----------------------------------------------------------- quiver + cycles

def crossing_darts(diag, cid):
    """The four darts at crossing cid in clockwise rotation order (same as
    build_map) plus named roles."""
    c = diag['crossings'][cid]
    if c.get('at') is None:
        (sa, ia), (sb, ib) = c['a'], c['b']
        roles = {'a_in': ('seg', sa, ia - 1, 1), 'a_out': ('seg', sa, ia, 0),
                 'b_in': ('seg', sb, ib - 1, 1), 'b_out': ('seg', sb, ib, 0)}
    else:
        n = diag['n_points']
        p = c['at']
        (so, io), (si, ii) = out_in_visits(diag, cid)
        roles = {'o_out': ('seg', so, io, 0), 'i_in': ('seg', si, ii - 1, 1),
                 'arc_next': ('arc', p, 0),
                 'arc_prev': ('arc', p - 1 if p > 1 else n, 1)}
    return roles


def eff_chir(diag, cid):
    c = diag['crossings'][cid]
    if c.get('at') is None:
        return c['chir']
    (so, io), _ = out_in_visits(diag, cid)
    eff = c['chir']
    if c['a'] != (so, io):
        eff = 'L' if eff == 'R' else 'R'
    return eff


def quiver_arrows(diag, faces, fmap):
    """Arrow through each crossing: crossing id -> (src_face, tgt_face).
    The arrow runs from the in-in corner to the out-out corner (corner between
    clockwise-consecutive darts (x, y) belongs to the face leaving along y)."""
    out = {}
    for cid in sorted(diag['crossings']):
        r = crossing_darts(diag, cid)
        ch = eff_chir(diag, cid)
        if diag['crossings'][cid].get('at') is None:
            if ch == 'L':   # clockwise order (a_in, b_in, a_out, b_out)
                src, tgt = fmap[r['b_in']], fmap[r['b_out']]
            else:           # (a_in, b_out, a_out, b_in)
                src, tgt = fmap[r['a_in']], fmap[r['a_out']]
        else:
            if ch == 'R':   # (arc_next, o_out, i_in, arc_prev)
                src, tgt = fmap[r['arc_prev']], fmap[r['o_out']]
            else:           # (arc_next, i_in, o_out, arc_prev)
                src, tgt = fmap[r['i_in']], fmap[r['arc_prev']]
        out[cid] = (src, tgt)
    return out


def dart_head_crossing(diag, d):
    """Crossing id at the head (end vertex) of a segment dart."""
    assert d[0] == 'seg'
    _, s, j, end = d
    pos = j + 1 if end == 0 else j
    return strand_visits(diag, s)[pos - 1]


CCW_END = 0  # calibrated below: a cyclic face whose darts all have end==CCW_END
             # runs counterclockwise (strands traverse it in walk direction)


def fundamental_cycles(diag, faces, kinds, arrows):
    """For each cyclic face: dict with face index, sign (+1 ccw / -1 cw),
    crossing ids in chained arrow order (composition c = a_m ... a_2 a_1 reads
    right to left; we store [cid_1, cid_2, ...] with tgt(a_t) = src(a_{t+1}))."""
    res = []
    for F, (f, kind) in enumerate(kinds):
        if kind != 'cyclic':
            continue
        ends = {d[3] for d in f}
        assert len(ends) == 1
        sign = 1 if ends == {CCW_END} else -1
        cids = [dart_head_crossing(diag, d) for d in f]
        # chain the arrows
        assert len(set(cids)) == len(cids), (F, cids)
        if len(cids) > 1:
            order = [cids[0]]
            rest = set(cids[1:])
            while rest:
                nxt = [c2 for c2 in rest if arrows[c2][0] == arrows[order[-1]][1]]
                assert len(nxt) == 1, (F, order, rest, nxt)
                order.append(nxt[0])
                rest.discard(nxt[0])
            assert arrows[order[-1]][1] == arrows[order[0]][0]
            cids = order
        else:
            assert arrows[cids[0]][0] == arrows[cids[0]][1]
        res.append({'face': F, 'sign': sign, 'crossings': cids})
    return res


def strand_start_points(diag):
    """start point of each strand (1-based strand index -> point)."""
    out = {}
    for s, vis in enumerate(diag['strands'], start=1):
        at = diag['crossings'][vis[0]].get('at')
        assert at is not None, f"strand {s} first visit not a boundary crossing"
        out[s] = at
    return out


def find_rotation(diag, s_order):
    """The automorphism induced by boundary shift i -> i + n/s_order.
    Returns (strand_map, crossing_map) or None if not an automorphism."""
    n = diag['n_points']
    assert n % s_order == 0
    shift = n // s_order
    starts = strand_start_points(diag)
    bypoint = {p: s for s, p in starts.items()}
    if len(bypoint) != len(starts):
        return None
    smap = {}
    for s, p in starts.items():
        q = (p - 1 + shift) % n + 1
        if q not in bypoint:
            return None
        smap[s] = bypoint[q]
    # crossing map via visits
    visits_of = {}   # crossing -> list of (strand, pos)
    for s, vis in enumerate(diag['strands'], start=1):
        for i, c in enumerate(vis):
            visits_of.setdefault(c, []).append((s, i))
    cmap = {}
    for c, vv in visits_of.items():
        imgs = set()
        for (s, i) in vv:
            tvis = diag['strands'][smap[s] - 1]
            if i >= len(tvis):
                return None
            imgs.add(tvis[i])
        if len(imgs) != 1:
            return None
        cmap[c] = imgs.pop()
    # checks: bijection, chirality, at-shift, visit structure
    if len(set(cmap.values())) != len(cmap):
        return None
    for c, c2 in cmap.items():
        r1, r2 = diag['crossings'][c], diag['crossings'][c2]
        ia = (smap[r1['a'][0]], r1['a'][1])
        ib = (smap[r1['b'][0]], r1['b'][1])
        if r2['a'] == ia and r2['b'] == ib:
            if r1['chir'] != r2['chir']:
                return None
        elif r2['a'] == ib and r2['b'] == ia:
            # swapping the roles of the two visits flips chirality
            if r1['chir'] == r2['chir']:
                return None
        else:
            return None
        a1, a2 = r1.get('at'), r2.get('at')
        if (a1 is None) != (a2 is None):
            return None
        if a1 is not None and (a1 - 1 + shift) % n + 1 != a2:
            return None
    # tau compatibility
    tau = diag['tau']
    for i in range(1, n + 1):
        j = (i - 1 + shift) % n + 1
        if (tau[i - 1] - 1 + shift) % n + 1 != tau[j - 1]:
            return None
    return smap, cmap


def face_rotation(diag, faces, fmap, s_order):
    """Induced permutation on face ids; returns (perm, strand_map, crossing_map)."""
    res = find_rotation(diag, s_order)
    assert res is not None
    smap, cmap = res
    n = diag['n_points']
    shift = n // s_order
    perm = {}
    for fid, darts in enumerate(faces):
        d = darts[0]
        if d[0] == 'arc':
            img = ('arc', (d[1] - 1 + shift) % n + 1, d[2])
        else:
            _, s, j, end = d
            img = ('seg', smap[s], j, end)
        perm[fid] = fmap[img]
    assert len(set(perm.values())) == len(perm)
    return perm, smap, cmap
