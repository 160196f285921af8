import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtcycles.graphcore import (
    EdgeColor,
    FormatError,
    Graph,
    GraphError,
    TwoColoring,
    all_graphs,
    articulation_points,
    biconnected_block_sizes,
    blow_up,
    canonical_form,
    complete_multipartite,
    decode_graph6,
    degree_stats,
    emit_coloring,
    encode_graph6,
    is_bipartite,
    is_connected,
    is_two_connected,
    parse_coloring,
)

from naive import naive_components, naive_is_bipartite


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def colorings(draw, max_n=9):
    g = draw(graphs(max_n))
    edges = g.edges()
    colors = draw(st.lists(st.integers(0, 1), min_size=len(edges), max_size=len(edges)))
    return TwoColoring.from_assignment(g, edges, colors)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# ---------------------------------------------------------------- Graph


def test_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b01))
    with pytest.raises(GraphError):
        Graph(0, ())
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_small_families():
    assert Graph.complete(5).m == 10
    assert Graph.cycle(6).m == 6
    assert Graph.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    p = Graph.petersen()
    assert degree_stats(p) == (3, 3, 15)


def test_complement_of_complete_is_empty():
    assert Graph.complete(7).complement() == Graph.empty(7)


def test_complete_multipartite_degrees():
    g = complete_multipartite([2, 3, 4])
    assert g.n == 9 and g.m == 2 * 3 + 2 * 4 + 3 * 4
    assert [g.degree(v) for v in range(9)] == [7, 7, 6, 6, 6, 5, 5, 5, 5]


def test_blow_up_of_edge_is_complete_bipartite():
    assert blow_up(Graph.complete(2), 3) == complete_multipartite([3, 3])


@given(graphs())
def test_relabel_preserves_degrees(g):
    perm = list(range(g.n))
    random.Random(g.m).shuffle(perm)
    h = g.relabel(perm)
    assert sorted(g.degree(v) for v in range(g.n)) == sorted(h.degree(v) for v in range(h.n))
    assert h.m == g.m


def test_canonical_form_identifies_isomorphic_graphs():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)])
    h = Graph.from_edges(5, [(4, 2), (2, 0), (0, 3)])
    assert canonical_form(g) == canonical_form(h)
    star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(g) != canonical_form(star)


# ---------------------------------------------------------- predicates


@given(graphs(max_n=9))
@settings(max_examples=200)
def test_bipartite_matches_brute_force(g):
    ok, cert = is_bipartite(g)
    assert ok == naive_is_bipartite(g.n, g.edges())
    if ok:
        assert all(cert[u] != cert[v] for u, v in g.edges())
    else:
        assert len(cert) % 2 == 1 and len(set(cert)) == len(cert)
        assert all(g.has_edge(cert[i], cert[(i + 1) % len(cert)]) for i in range(len(cert)))


@given(graphs())
@settings(max_examples=200)
def test_connectivity_against_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert articulation_points(g) == set(nx.articulation_points(h))
    assert is_two_connected(g) == (g.n >= 3 and nx.is_biconnected(h))
    blocks = sorted(len(b) for b in nx.biconnected_components(h))
    assert sorted(biconnected_block_sizes(g)) == blocks


@given(graphs(max_n=10))
def test_component_count_consistent(g):
    assert is_connected(g) == (naive_components(g.n, g.edges()) == 1)


# --------------------------------------------------------------- graph6


def test_graph6_known_strings():
    assert encode_graph6(Graph.complete(3)) == "Bw"
    assert encode_graph6(Graph.empty(1)) == "@"
    assert decode_graph6("D~{") == Graph.complete(5)


@given(graphs(max_n=20))
@settings(max_examples=300)
def test_graph6_roundtrip_and_networkx_agreement(g):
    s = encode_graph6(g)
    assert decode_graph6(s) == g
    assert decode_graph6(s + "\n") == g
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert s == ref


def test_graph6_errors_carry_offsets():
    with pytest.raises(FormatError) as e:
        decode_graph6("D~")
    assert e.value.offset is not None
    with pytest.raises(FormatError) as e:
        decode_graph6("D~ {")
    assert e.value.offset == 2
    with pytest.raises(FormatError):
        decode_graph6("Bx")  # padding bits set
    with pytest.raises(FormatError):
        decode_graph6("")


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 64


# --------------------------------------------------------------- colorings


def test_two_coloring_validation():
    k3 = Graph.complete(3)
    red = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphError):
        TwoColoring(k3, red, red)
    blue = Graph.from_edges(3, [(0, 2), (1, 2)])
    c = TwoColoring(k3, red, blue)
    assert c.color_of(1, 0) is EdgeColor.RED
    assert c.swapped().color_of(0, 1) is EdgeColor.BLUE


@given(colorings())
@settings(max_examples=200)
def test_coloring_text_roundtrip(c):
    text = emit_coloring(c)
    assert text.endswith("\n")
    back = parse_coloring(text)
    assert back == c
    assert emit_coloring(back) == text


COLORING_ERRORS = [
    ("p rbcolor 3 1\ne 0 1 R\ne 0 1 R\n", "duplicate edge", 3),
    ("p rbcolor 3 2\ne 0 1 R\ne 0 1 B\n", "edge colored twice", 3),
    ("p rbcolor 3 1\ne 0 5 R\n", "vertex index >= n", 2),
    ("p rbcolor 3 2\ne 0 1 R\n", "count mismatch with header", 1),
    ("p rbcolor 3 1\ne 1 0 R\n", "u < v", 2),
    ("p rbcolor 3 1\ne 0 1 G\n", "unknown color", 2),
    ("p rbcolor 3 1\r\ne 0 1 R\n", "CR line endings", 1),
    ("x\n", "expected header", 1),
]


@pytest.mark.parametrize("text,reason,line", COLORING_ERRORS)
def test_coloring_parse_errors_locate_problem(text, reason, line):
    with pytest.raises(FormatError) as e:
        parse_coloring(text)
    assert reason in e.value.reason
    assert e.value.line == line
    assert e.value.offset is not None


def test_coloring_comments_ignored():
    text = "c a comment\np rbcolor 2 1\nc mid\ne 0 1 B\n"
    c = parse_coloring(text)
    assert c.blue.m == 1 and c.red.m == 0
