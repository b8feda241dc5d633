"""Quiver with potential from a diagram; cyclic-derivative relations.

Arrow ids: interior/boundary crossing cid -> arrow named (cid, 0); if the
diagram is an orbifold whose central region is alternating, that region is
split into d copies (F0, i), i = 1..d, and every arrow incident with it gets d
copies (cid, i) attached to (F0, i). Vertices are face ids, or (F0, i).

Potential terms: list of (coeff, cycle) with coeff a dict {zeta_exponent:
Fraction} over Q(zeta_d) (exponent 0 = rational part; reduced later), and
cycle a chain-ordered arrow list [a1..am] with tgt(a_t) = src(a_{t+1}).
"""

from fractions import Fraction
import comb


def _cyc(exp, d, q=Fraction(1)):
    return {exp % d if d else 0: q}


def build_qp(diag, zeta_exp=1):
    faces, _ = comb.trace_faces(diag)
    fmap = comb.face_of_dart(faces)
    kinds = comb.face_kinds(diag, faces)
    kindmap = {i: k for i, (f, k) in enumerate(kinds)}
    arrows0 = comb.quiver_arrows(diag, faces, fmap)
    cycles = comb.fundamental_cycles(diag, faces, kinds, arrows0)
    d = diag.get('order', 1) if diag['kind'] == 'orbifold' else 1

    central = None
    central_kind = None
    if diag['kind'] == 'orbifold':
        central = comb.omega_face(diag, faces, fmap)
        central_kind = kindmap[central]

    split_central = (central_kind == 'alternating')

    # vertices
    vertices = []
    for i in range(len(faces)):
        if kindmap[i] == 'cyclic':
            continue
        if split_central and i == central:
            vertices += [(i, c) for c in range(1, d + 1)]
        else:
            vertices.append((i, 0))
    frozen = {v for v in vertices if kindmap[v[0]] == 'boundary'}

    # arrows
    arrows = {}  # (cid, copy) -> (src_vertex, tgt_vertex)
    for cid, (s, t) in arrows0.items():
        if split_central and (s == central or t == central):
            assert not (s == central and t == central)
            for c in range(1, d + 1):
                sv = (s, c) if s == central else (s, 0)
                tv = (t, c) if t == central else (t, 0)
                arrows[(cid, c)] = (sv, tv)
        else:
            arrows[(cid, 0)] = ((s, 0), (t, 0))

    # potential
    terms = []
    if not split_central:
        for cy in cycles:
            arrlist = [(cid, 0) for cid in cy['crossings']]
            if central is not None and cy['face'] == central:
                coeff = {0: Fraction(cy['sign'], d)}
                terms.append((coeff, arrlist * d))
            else:
                terms.append(({0: Fraction(cy['sign'])}, arrlist))
    else:
        # order the r adjacent cycles: walk the central border starting at the
        # dart crossed by the innermost cut crossing; cycle j lies across the
        # j-th border dart; the last one is the zeta-weighted one.
        border = faces[central]
        s0, j0, _ = diag['cut'][0]
        start = [k for k, dd in enumerate(border)
                 if dd[0] == 'seg' and dd[1] == s0 and dd[2] == j0]
        assert len(start) == 1
        k0 = start[0]
        adj_order = []
        for t in range(len(border)):
            dd = border[(k0 + t) % len(border)]
            assert dd[0] == 'seg'
            other = fmap[comb.opposite(diag, dd)]
            assert kindmap[other] == 'cyclic', (central, dd, other)
            adj_order.append(other)
        assert len(set(adj_order)) == len(adj_order)
        r = len(adj_order)
        jindex = {f: j + 1 for j, f in enumerate(adj_order)}

        for cy in cycles:
            incident = [cid for cid in cy['crossings']
                        if central in arrows0[cid]]
            if not incident:
                terms.append(({0: Fraction(cy['sign'])}, [(cid, 0) for cid in cy['crossings']]))
                continue
            j = jindex[cy['face']]
            for c in range(1, d + 1):
                arrlist = [(cid, c) if central in arrows0[cid] else (cid, 0)
                           for cid in cy['crossings']]
                if j == r:
                    coeff = {(zeta_exp * c) % d: Fraction(cy['sign'])}
                else:
                    coeff = {0: Fraction(cy['sign'])}
                terms.append((coeff, arrlist))

    return {'vertices': vertices, 'frozen': frozen, 'arrows': arrows,
            'terms': terms, 'central': central, 'central_kind': central_kind,
            'order': d, 'kindmap': kindmap, 'faces': faces}


def internal_arrows(qp):
    """Arrows lying on exactly two potential terms (counting multiplicity of
    distinct terms, not occurrences within the c^d expansion)."""
    count = {}
    for (coeff, cyc) in qp['terms']:
        for a in set(cyc):
            count[a] = count.get(a, 0) + 1
    return {a for a, c in count.items() if c >= 2}


def relations(qp):
    """Cyclic derivatives of the potential with respect to internal arrows.
    Returns {arrow: [(coeff, path)]}; path chain-ordered from tgt(arrow) to
    src(arrow)."""
    rels = {}
    for a in sorted(internal_arrows(qp), key=str):
        contrib = []
        for (coeff, cyc) in qp['terms']:
            for t, b in enumerate(cyc):
                if b == a:
                    path = cyc[t + 1:] + cyc[:t]
                    contrib.append((coeff, path))
        # merge identical paths
        merged = {}
        for (coeff, path) in contrib:
            key = tuple(path)
            acc = merged.setdefault(key, {})
            for e, q in coeff.items():
                acc[e] = acc.get(e, Fraction(0)) + q
        out = []
        for key, cf in sorted(merged.items(), key=str):
            cf = {e: q for e, q in cf.items() if q != 0}
            if cf:
                out.append((cf, list(key)))
        rels[a] = out
    return rels
