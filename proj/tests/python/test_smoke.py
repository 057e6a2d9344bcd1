import pytest

import dpsquare as dq


def test_graph_roundtrip():
    g = dq.build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g.n == 4
    assert g.edge_count() == 4
    assert g.has_edge(0, 1)
    assert not g.has_edge(0, 2)


def test_generate_and_square():
    g, boundary = dq.generate("cycle", [4])
    assert boundary == []
    sq = dq.square(g)
    assert sq.edge_count() == 6  # C_4 squared is K_4
    assert dq.girth(g) == 4
    assert dq.girth(dq.generate("path", [3])[0]) is None


def test_mad_exact_values():
    theta, _ = dq.generate("theta", [2, 2, 2])
    assert dq.mad(theta) == "9/4"
    k4, _ = dq.generate("complete", [4])
    assert dq.mad(k4) == "3/1"
    assert dq.girth_mad_bound(18) == "9/4"


def test_dp_chromatic_cycle4():
    c4, _ = dq.generate("cycle", [4])
    assert dq.dp_chromatic(c4) == 3
    assert not dq.is_dp_k_colorable(c4, 2)
    assert dq.chromatic_number(c4) == 2


def test_detect_theta():
    theta, _ = dq.generate("theta", [2, 2, 2])
    kinds = [kind for kind, _ in dq.detect_reducible(theta, 6)]
    assert kinds.count("2-thread") == 3
    assert dq.detect_reducible(dq.generate("complete", [4])[0], 5) == []


def test_discharge_and_audit():
    theta, _ = dq.generate("theta", [2, 2, 2])
    assert dq.discharge_min(theta, "R1") == "9/4"
    audit = dq.audit_theorem(theta, 5)
    assert audit["applicable"]
    assert audit["passed"]
    assert audit["min_final"] == "9/4"


def test_verify_lemma():
    ids = dq.all_lemma_ids()
    assert len(ids) == 22
    rep = dq.verify_lemma("face:3:5")
    assert rep["status"] == "verified"
    assert rep["certificate"].startswith("greedy:")
    with pytest.raises(ValueError):
        dq.verify_lemma("no-such-lemma")


def test_enumerate_small():
    assert len(dq.enumerate_subcubic(1)) == 1
    assert len(dq.enumerate_subcubic(2)) == 1
    graphs = dq.enumerate_subcubic(5)
    assert all(dq.is_subcubic(g) and dq.is_connected(g) for g in graphs)
    g = dq.random_subcubic(8, seed=7, min_degree=2)
    assert dq.is_subcubic(g) and dq.is_connected(g)
