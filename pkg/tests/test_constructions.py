import pytest
from hypothesis import given
from hypothesis import strategies as st

from rtcycles.constructions import (
    Claim,
    ColoredInstance,
    check_claim,
    check_claims,
    family_free_edges,
    four_class_family,
    four_class_members,
    mask_from_int,
    pentagon_blowup,
    pentagon_swap_permutation,
    tight_example,
)
from rtcycles.cycles import spectrum
from rtcycles.graphcore import GraphError, is_bipartite

from naive import naive_is_bipartite, naive_min_degree, naive_spectrum


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_tight_example_claims(p):
    inst = tight_example(p)
    assert inst.host.n == 4 * p
    assert check_claims(inst) == []
    assert naive_min_degree(inst.host.n, inst.host.edges()) == 3 * p


@pytest.mark.parametrize("p", [1, 2])
def test_tight_example_against_brute_force(p):
    c = tight_example(p).coloring
    assert naive_is_bipartite(c.n, c.red.edges())
    assert naive_is_bipartite(c.n, c.blue.edges())


@pytest.mark.parametrize("p", [1, 2, 3])
def test_tight_example_complement_is_four_cliques(p):
    comp = tight_example(p).host.complement()
    assert comp.m == 4 * p * (p - 1) // 2
    for q in range(4):
        block = range(q * p, (q + 1) * p)
        assert all(comp.has_edge(a, b) for a in block for b in block if a < b)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_pentagon_blowup_claims(t):
    inst = pentagon_blowup(t)
    assert check_claims(inst) == []
    assert 3 not in spectrum(inst.coloring.red)
    assert 3 not in spectrum(inst.coloring.blue)


def test_pentagon_base_case_is_two_five_cycles():
    c = pentagon_blowup(1).coloring
    assert naive_spectrum(5, c.red.edges()) == [5]
    assert naive_spectrum(5, c.blue.edges()) == [5]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_pentagon_swap_symmetry(t):
    c = pentagon_blowup(t).coloring
    perm = pentagon_swap_permutation(t)
    assert c.red.relabel(perm) == c.blue
    assert c.blue.relabel(perm) == c.red


def test_family_free_edges_layout():
    assert family_free_edges(1) == [(0, 3), (1, 2)]
    assert len(family_free_edges(3)) == 18


@pytest.mark.parametrize("p", [1, 2])
def test_all_family_members_are_odd_free(p):
    seen = set()
    for inst in four_class_members(p):
        assert check_claims(inst) == []
        seen.add((inst.coloring.red, inst.coloring.blue))
    assert len(seen) == 1 << (2 * p * p)


@given(st.integers(1, 3), st.data())
def test_family_mask_conventions(p, data):
    value = data.draw(st.integers(0, (1 << (2 * p * p)) - 1))
    text = mask_from_int(p, value)
    inst = four_class_family(p, text)
    assert inst.params["mask"] == text
    for i, (u, v) in enumerate(family_free_edges(p)):
        assert inst.coloring.red.has_edge(u, v) == bool((value >> i) & 1)
    assert four_class_family(p, [int(ch) for ch in text]).coloring == inst.coloring
    assert is_bipartite(inst.coloring.red)[0] and is_bipartite(inst.coloring.blue)[0]


def test_family_rejects_bad_masks():
    with pytest.raises(GraphError):
        four_class_family(1, "101")
    with pytest.raises(GraphError):
        four_class_family(1, "2x")
    with pytest.raises(GraphError):
        mask_from_int(1, 4)


def test_constructor_argument_checks():
    for fn in (tight_example, pentagon_blowup):
        with pytest.raises(GraphError):
            fn(0)
    with pytest.raises(GraphError):
        tight_example(17)


def test_false_claim_is_reported():
    inst = tight_example(1)
    bogus = ColoredInstance(inst.coloring, "bogus", claims=(Claim("min_degree", 99),
                                                             Claim("has_cycle", 3, "R")))
    assert len(check_claims(bogus)) == 2
    with pytest.raises(ValueError):
        check_claim(bogus, Claim("nonsense"))
