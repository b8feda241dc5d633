"""Smoke test of the python bindings against the bundled corpus."""

import os
import sys

import orbidim

CORPUS = os.environ.get("ORBIDIM_CORPUS_DIR", "corpus")


def path(name):
    return os.path.join(CORPUS, name + ".osd")


def main():
    # parse / serialize round trip is byte identical
    for name in ["ex-exam2-order3", "ex-4-10-order5", "ex-3-9-order3",
                 "ex-exam2-sym3", "ex-exam2-sym2", "ex-4-10", "ex-3-9"]:
        with open(path(name), encoding="utf-8") as fh:
            text = fh.read()
        d = orbidim.parse(text)
        assert orbidim.serialize(d) == text, name

    O = orbidim.load(path("ex-4-10-order5"))
    assert O.kind == "orbifold" and O.order == 5 and O.n_points == 2
    assert orbidim.validate(O)["ok"]
    assert orbidim.S_value(O, 1) == 2 and orbidim.S_value(O, 2) == 3
    assert orbidim.L_value(O, 1, 2) == 4
    assert orbidim.threshold(O) == 4
    assert orbidim.is_orbifold_diagram(O) == (True, 4)
    assert orbidim.grassmannian_type(O) == (4, 10, 2)

    P = orbidim.load(path("ex-4-10"))
    assert orbidim.isomorphic(orbidim.sym_d(O), P)
    assert orbidim.isomorphic(orbidim.quotient(P, 5), O)

    labels = orbidim.postnikov_labels(P)
    assert all(len(v) == 4 for v in labels.values())
    dl = orbidim.direct_labels(O)
    assert dl["missing"] == [3, 5, 10] and dl["added"] == [10]
    assert orbidim.cross_validate_labels(O)

    qp = orbidim.qp_summary(O)
    assert qp["central_kind"] == "cyclic"
    assert qp["coeff_multiset"] == ["-1", "-1", "1", "1", "1/5"]
    assert orbidim.jacobian_dims(O) == [5, 14, 27, 44, 64, 86, 108]
    assert orbidim.skew_basic_dims(orbidim.sym_d(O), 5) == \
        orbidim.jacobian_dims(O)

    bp = orbidim.boundary_presentation(O)
    assert bp["certified"] and (bp["k"], bp["nk"]) == (4, 6)

    r = orbidim.verify(O)
    assert r["relations_pass"] and r["dims_match"]
    assert r["generated_total"] == 1500
    assert orbidim.r2_dims(O) == (1500, 1500)

    svg = orbidim.render_svg(P)
    assert svg.startswith("<?xml") and "</svg>" in svg

    # error paths surface as exceptions / python errors
    try:
        orbidim.parse("strand 1 nonsense\n")
    except Exception:
        pass
    else:
        raise AssertionError("malformed .osd must raise")
    try:
        orbidim.verify(P)
    except ValueError:
        pass
    else:
        raise AssertionError("verify on a plabic diagram must raise")

    print("python smoke: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
