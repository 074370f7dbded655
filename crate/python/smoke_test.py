"""Smoke test for the horosphere_py extension module."""

import json
import pathlib

import horosphere_py as hp

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def main():
    x = hp.Variety(5)
    assert (x.dim, x.c1, x.codims) == (7, 4, (2, 2))
    assert len(x.basis()) == 12
    assert x.betti_numbers() == x.betti_numbers()[::-1]
    table = dict(x.chevalley_table())
    assert table["tau(v_5)"] == [("sigma'(u_4)", 1, 1), ("tau(v_2)", 1, 1), ("sigma'(u_0)", 2, 2)]
    report = x.semisimplicity("1")
    assert report.passes() and report.squarefree
    assert x.hasse_dot().startswith("digraph hasse {")

    ring = hp.QuotientRing(3, 3)
    assert ring.rank == 20
    assert ring.hilbert_series() == [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]
    assert ring.is_torsion_free() and ring.flatness_passes()
    assert ring.minpoly_tau1("1") == hp.Variety(3, 3, 3).h_minimal_polynomial("1")
    assert json.loads(ring.to_json())["rank"] == 20

    sets = hp.enumerate_index_sets(2, 5)
    assert len(sets) == 8
    for p in sets:
        assert hp.partition_to_index(5, hp.index_to_partition(5, p)) == p

    g2 = hp.RootSystem("G2")
    assert g2.line_bundle_cohomology([1, -1]) is None
    assert g2.line_bundle_cohomology([-2, 1]) == (1, [0, 0], 1)
    assert g2.weyl_dimension([1, 0]) == 7
    assert g2.euler_characteristic([[0, 0], [-2, 1], [1, -1], [-1, 0]]) == 0
    verdicts = hp.verify_claims((DATA / "claims" / "g2.json").read_text())
    assert all(v != "refuted" for _, v, _ in verdicts)

    try:
        hp.Variety(6)
    except ValueError:
        pass
    else:
        raise AssertionError("case 6 accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
