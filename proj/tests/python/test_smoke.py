import pytest

import surfcert


def complete(n):
    vs = list(range(1, n + 1))
    return surfcert.Graph(vs, [(a, b) for a in vs for b in vs if a < b])


def test_oracle_values():
    k5 = surfcert.min_genus(complete(5))
    assert k5["min_eg"] == 2
    assert k5["systems_searched"] == 7776
    assert surfcert.min_genus(complete(5), orientable=False)["min_eg"] == 1


def test_prove_and_verify_round_trip():
    f = surfcert.fixture("K5-torus")
    certs = surfcert.prove(f["graph"], f["scheme"], 2)
    assert surfcert.verify(f["graph"], certs)["accepted"]
    again = surfcert.Certificates.parse(certs.format())
    assert again == certs

    packed = surfcert.prove(f["graph"], f["scheme"], 2, packed=True)
    assert packed.packed
    assert surfcert.verify(f["graph"], packed)["accepted"]
    assert surfcert.unpack(packed) == certs


def test_wrong_target_is_rejected():
    f = surfcert.fixture("K5-torus")
    with pytest.raises(surfcert.ProverError):
        surfcert.prove(f["graph"], f["scheme"], 0)
    certs = surfcert.prove(f["graph"], f["scheme"], 2)
    report = surfcert.verify(f["graph"], certs, target_eg=0)
    assert not report["accepted"]
    assert any(r is not None and r[0] == "R5" for r in report["rejections"].values())


def test_relabeling_keeps_acceptance():
    f = surfcert.fixture("K4-planar")
    certs = surfcert.prove(f["graph"], f["scheme"], 0)
    g2, c2 = surfcert.relabel(f["graph"], certs, 11)
    assert surfcert.verify(g2, c2)["accepted"]
    assert not surfcert.verify(g2, certs)["accepted"]


def test_face_counts_and_bounds():
    f = surfcert.fixture("C3-twisted")
    counts = surfcert.face_counts(f["graph"], f["scheme"])
    assert (counts["phi"], counts["doubled"]) == (2, 1)
    assert surfcert.heawood_bound(0) == 5
    assert surfcert.degeneracy(complete(5)) == 4
    assert len(surfcert.rules()) >= 10


def test_fuzz_and_meter():
    k33 = surfcert.Graph([1, 2, 3, 4, 5, 6], [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
    report = surfcert.fuzz(k33, 0, trials=100, mutate_trials=20)
    assert report["passed"]
    with pytest.raises(surfcert.PreconditionError):
        surfcert.fuzz(complete(4), 0, trials=10)
    rows, ok = surfcert.meter(64)
    assert ok
    assert [n for n, _ in rows] == [8, 16, 32, 64]


def test_bad_input():
    with pytest.raises(surfcert.GraphError):
        surfcert.Graph.parse("graph 2 2\nv 1\nv 2\ne 1 2\ne 1 2\n")
    tree = surfcert.Graph([10, 20, 30], [(10, 20), (20, 30)])
    assert surfcert.verify(tree, surfcert.prove_tree(tree))["accepted"]
