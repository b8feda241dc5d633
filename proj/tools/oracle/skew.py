"""Filtered dimensions of the basic idempotent subalgebra of A(P)*G for a
d-symmetric Postnikov diagram P, computed blockwise.

e = sum of e_v (x) 1 over free vertex-orbit representatives plus, for each
rotation-fixed vertex v, the d isotypic idempotents e_v (x) e_sigma.  Block
dimensions over the path-length filtration:
  free-free   (u,v reps):  sum_r dim e_u A_j e_{rho^r v}
  free-fixed / fixed-free: d * dim of the single A-block
  fixed-fixed:             d * dim of the A-block (the d^2 character pairs
                           cover each isotypic component exactly d times).
"""
import alg, comb, qp


def skew_basic_dims(cover, d, m, field):
    q = qp.build_qp(cover)
    rels = list(qp.relations(q).values())
    faces, _ = comb.trace_faces(cover)
    fmap = comb.face_of_dart(faces)
    perm, _, _ = comb.face_rotation(cover, faces, fmap, d)
    verts = q['vertices']
    vset = {f for (f, c) in verts}

    seen, orbits = set(), []
    for (f, c) in verts:
        if f in seen:
            continue
        orb = [f]
        x = perm[f]
        while x != f:
            orb.append(x)
            x = perm[x]
        seen.update(orb)
        orbits.append(sorted(orb))
    free_reps = [o[0] for o in orbits if len(o) == d]
    fixed = [o[0] for o in orbits if len(o) == 1]
    assert all(len(o) in (1, d) for o in orbits)

    pd = alg.filtered_dims_pairblocks(verts, q['arrows'], rels, m, field)

    def rot(f, r):
        for _ in range(r):
            f = perm[f]
        return f

    dims = [0] * (m + 1)
    for j in range(m + 1):
        tot = 0
        for u in free_reps:
            for v in free_reps:
                for r in range(d):
                    tot += pd[((u, 0), (rot(v, r), 0))][j]
        for u in free_reps:
            for v in fixed:
                tot += d * (pd[((u, 0), (v, 0))][j] + pd[((v, 0), (u, 0))][j])
        for v in fixed:
            for w in fixed:
                tot += d * pd[((v, 0), (w, 0))][j]
        dims[j] = tot
    return dims
