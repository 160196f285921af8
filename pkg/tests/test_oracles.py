import pytest

from rtcycles.cycles import longest_cycle
from rtcycles.graphcore import Graph, GraphError, complete_multipartite, decode_graph6, is_two_connected
from rtcycles.oracles import (
    OracleReport,
    check_bollobas,
    check_bondy,
    check_erdos_gallai,
    clique_union_boundary,
    haggkvist_hypothesis,
    sample_haggkvist,
)


def test_bondy_small():
    rep = check_bondy(6)
    assert rep.passed and rep.exhaustive
    # n = 3: only K_3 has delta >= 2
    assert rep.instances_checked > 1


def test_bollobas_small_marks_vacuous_orders():
    rep = check_bollobas(5)
    assert rep.passed
    assert rep.vacuous_orders == [3, 4]


def test_erdos_gallai_small_with_boundary():
    rep = check_erdos_gallai(5, 3)
    assert rep.passed
    assert len(rep.boundary_instances) == 2
    for g6, _ in rep.boundary_instances:
        g = decode_graph6(g6)
        # e = kn/2 exactly, yet the longest cycle has only k + 1 vertices
        assert 2 * g.m == (g.n // 3 - 1) * g.n


def test_boundary_graph_is_extremal():
    g = clique_union_boundary(3, 12)
    assert g.m == 3 * 12 // 2
    assert longest_cycle(g) == 4


def test_exhaustive_cap_and_k_floor():
    with pytest.raises(GraphError):
        check_bondy(8)
    with pytest.raises(GraphError):
        check_erdos_gallai(5, 1)


def test_report_serializes_sorted():
    rep = OracleReport("x", violations=[("B", "b"), ("A", "a")])
    assert not rep.passed
    assert rep.to_dict()["violations"] == [["A", "a"], ["B", "b"]]
    assert '"theorem": "x"' in rep.to_json()


def test_haggkvist_gate():
    assert haggkvist_hypothesis(Graph.complete(7), 2)
    assert not haggkvist_hypothesis(complete_multipartite([4, 4]), 2)  # bipartite
    two_blocks = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert not is_two_connected(two_blocks)
    assert not haggkvist_hypothesis(two_blocks, 2)


def test_haggkvist_sampling_is_seeded_and_report_only():
    a = sample_haggkvist(2, 10, 25, seed=3)
    b = sample_haggkvist(2, 10, 25, seed=3)
    assert a.to_dict() == b.to_dict()
    assert not a.exhaustive and a.passed
    assert a.observations["admitted"] == 25
    assert 0.0 <= a.observations["presence_rate"] <= 1.0
    for g6 in a.admitted:
        assert haggkvist_hypothesis(decode_graph6(g6), 2)


def test_haggkvist_argument_checks():
    with pytest.raises(GraphError):
        sample_haggkvist(1, 10, 5, seed=0)
    with pytest.raises(GraphError):
        sample_haggkvist(2, 10, 5, seed=None)
