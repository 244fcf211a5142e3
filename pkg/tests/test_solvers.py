import pytest
from hypothesis import given
from hypothesis import strategies as st

from perfdigraphs.core import build_digraph, induced_subdigraph
from perfdigraphs.errors import PartialAssignment
from perfdigraphs.gen import GenSpec, derive_seed, named_instance, random_digraph
from perfdigraphs.oracles import brute_chromatic_graph, brute_clique, brute_dichromatic, has_cycle_dfs
from perfdigraphs.solvers import clique_number, dichromatic_number, is_proper_coloring

from .strategies import digraphs, symmetric_digraphs

C3 = named_instance("c3")


def test_proper_coloring_examples():
    assert is_proper_coloring(C3, {0: 1, 1: 1, 2: 2})
    assert not is_proper_coloring(C3, {0: 1, 1: 1, 2: 1})
    assert not is_proper_coloring(named_instance("sym_complete", 2), {0: 1, 1: 1})
    with pytest.raises(PartialAssignment):
        is_proper_coloring(C3, {0: 1})


def test_oracle_values():
    assert brute_dichromatic(C3) == 2
    assert brute_dichromatic(named_instance("sym_cycle", 5)) == 3


def test_dichromatic_examples():
    assert dichromatic_number(C3).chi == 2
    tt = build_digraph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert dichromatic_number(tt).chi == 1
    for k in range(1, 6):
        assert dichromatic_number(named_instance("sym_complete", k)).chi == k
    assert dichromatic_number(named_instance("sym_cycle", 5)).chi == 3
    assert dichromatic_number(build_digraph(0, [])).chi == 0


def test_dichromatic_witness_is_lexicographic():
    # vertex 0 gets colour 1 with the smallest maximal acyclic class
    res = dichromatic_number(named_instance("dicycle", 4))
    assert res.classes() == [(0, 1, 2), (3,)]


def test_clique_examples():
    assert clique_number(C3).omega == 1
    assert clique_number(named_instance("sym_complete", 4)).omega == 4
    w = clique_number(named_instance("c4_complement"))
    assert w.omega == 2 and w.vertices == (0, 2)
    assert clique_number(build_digraph(0, [])).omega == 0
    assert clique_number(build_digraph(1, [])).omega == 1


@given(digraphs(max_n=7))
def test_chi_matches_exhaustive_search(d):
    res = dichromatic_number(d)
    assert res.chi == brute_dichromatic(d)
    assert is_proper_coloring(d, res.assignment)
    assert sorted(set(res.assignment.values())) == list(range(1, res.chi + 1))


@given(digraphs(max_n=7))
def test_witnesses_and_lower_bound(d):
    res, cl = dichromatic_number(d), clique_number(d)
    assert cl.omega == brute_clique(d) == len(cl.vertices)
    assert all(d.has_arc(u, v) for u in cl.vertices for v in cl.vertices if u != v)
    assert cl.omega <= res.chi
    for c in range(1, res.chi + 1):
        assert not has_cycle_dfs(d, [v for v, col in res.assignment.items() if col == c])


@given(symmetric_digraphs(max_n=7))
def test_graph_specialisation(g):
    assert dichromatic_number(g).chi == brute_chromatic_graph(g)
    assert clique_number(g).omega == brute_clique(g)


@given(digraphs(min_n=1, max_n=7), st.data())
def test_monotone_under_induced_subdigraphs(d, data):
    keep = data.draw(st.sets(st.integers(0, d.n - 1)))
    h = induced_subdigraph(d, keep)
    assert dichromatic_number(h).chi <= dichromatic_number(d).chi
    assert clique_number(h).omega <= clique_number(d).omega


def test_deterministic():
    d = random_digraph(GenSpec(8, 0.3, 0.4, derive_seed(5)))
    assert dichromatic_number(d) == dichromatic_number(d)
