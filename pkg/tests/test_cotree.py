from itertools import combinations

import pytest
from hypothesis import given

from perfdigraphs.core import build_digraph
from perfdigraphs.cotree import (
    Leaf,
    Node,
    build_cotree,
    cotree_to_graph,
    is_alternating,
    parse_cotree,
)
from perfdigraphs.errors import MalformedCotree, NotCograph, NotSymmetric
from perfdigraphs.gen import named_instance
from perfdigraphs.oracles import brute_has_p4
from perfdigraphs.patterns import induces_p4_in_symmetric

from .strategies import symmetric_digraphs

K2_K1 = build_digraph(3, [(0, 1), (1, 0)])


def all_symmetric(n):
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        arcs = [a for i, (u, v) in enumerate(pairs) if code >> i & 1 for a in ((u, v), (v, u))]
        yield build_digraph(n, arcs)


def test_single_vertex():
    assert build_cotree(named_instance("sym_complete", 1)) == Leaf(0)
    assert cotree_to_graph(Leaf(0)) == named_instance("sym_complete", 1)


def test_p4_is_not_a_cograph():
    with pytest.raises(NotCograph) as exc:
        build_cotree(named_instance("sym_p4"))
    assert exc.value.witness == (0, 1, 2, 3)


def test_k2_plus_k1():
    t = build_cotree(K2_K1)
    assert t == Node(0, (Leaf(2), Node(1, (Leaf(0), Leaf(1)))))
    assert str(t) == "0(v2 1(v0 v1))"
    assert cotree_to_graph(t) == K2_K1


def test_join_of_leaves_is_complete():
    assert cotree_to_graph(parse_cotree("1(v0 v1 v2 v3)")) == named_instance("sym_complete", 4)


def test_requires_symmetric():
    with pytest.raises(NotSymmetric):
        build_cotree(named_instance("c3"))


def test_empty_graph():
    assert build_cotree(named_instance("arcless", 0)) is None
    with pytest.raises(MalformedCotree):
        cotree_to_graph(None)


@pytest.mark.parametrize("text", ["1(v0)", "2(v0 v1)", "0(v0 v2)", "0(v0 v0)", "0(0(v0 v1) v2)"])
def test_malformed(text):
    with pytest.raises(MalformedCotree):
        cotree_to_graph(parse_cotree(text))


@pytest.mark.parametrize("text", ["", "0(v0 v1", "0(v0 v1))", "x"])
def test_parse_errors(text):
    with pytest.raises(MalformedCotree):
        parse_cotree(text)


def test_round_trip_exhaustive():
    for n in range(1, 6):
        for g in all_symmetric(n):
            if brute_has_p4(g):
                with pytest.raises(NotCograph) as exc:
                    build_cotree(g)
                assert induces_p4_in_symmetric(g, exc.value.witness)
                continue
            t = build_cotree(g)
            assert cotree_to_graph(t) == g
            assert is_alternating(t)
            assert parse_cotree(str(t)) == t
            assert build_cotree(cotree_to_graph(t)) == t


@given(symmetric_digraphs(min_n=1, max_n=8))
def test_cograph_iff_no_p4(g):
    has_p4 = any(induces_p4_in_symmetric(g, q) for q in combinations(range(g.n), 4))
    try:
        t = build_cotree(g)
    except NotCograph:
        assert has_p4
    else:
        assert not has_p4
        assert cotree_to_graph(t) == g
