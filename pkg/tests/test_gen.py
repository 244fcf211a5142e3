import pytest
from hypothesis import given
from hypothesis import strategies as st

from perfdigraphs.core import ordered_pairs, reverse
from perfdigraphs.errors import BadSize, InvalidProbabilities, UnknownName
from perfdigraphs.gen import (
    NAMED,
    GenSpec,
    PairMode,
    derive_seed,
    named_instance,
    p4c_pair,
    random_digraph,
    random_f_free,
    splitmix64,
    toggle,
)
from perfdigraphs.patterns import are_p4c_isomorphic, is_f_free, local_signature
from perfdigraphs.solvers import clique_number, dichromatic_number

from .strategies import digraphs


def test_splitmix_reference_values():
    # first two outputs of the reference generator seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert splitmix64(0x9E3779B97F4A7C15) == 7960286522194355700


def test_extreme_probabilities():
    assert random_digraph(GenSpec(5, 1.0, 0.0, 3)) == named_instance("sym_complete", 5)
    assert random_digraph(GenSpec(5, 0.0, 0.0, 3)) == named_instance("arcless", 5)
    tour = random_digraph(GenSpec(5, 0.0, 1.0, 3))
    assert tour.num_arcs == 10
    assert all(tour.has_arc(u, v) != tour.has_arc(v, u) for u, v in ordered_pairs(5))


def test_deterministic_and_seed_sensitive():
    spec = GenSpec(9, 0.3, 0.3, 42)
    assert random_digraph(spec) == random_digraph(spec)
    assert random_digraph(spec) != random_digraph(GenSpec(9, 0.3, 0.3, 43))


@pytest.mark.parametrize("ps,pa", [(-0.1, 0.0), (0.6, 0.5), (0.0, 1.5)])
def test_invalid_probabilities(ps, pa):
    with pytest.raises(InvalidProbabilities):
        GenSpec(4, ps, pa)


def test_bad_size():
    with pytest.raises(BadSize):
        GenSpec(-1, 0.1, 0.1)
    with pytest.raises(BadSize):
        named_instance("dicycle", 2)
    with pytest.raises(BadSize):
        named_instance("c3", 4)
    with pytest.raises(UnknownName):
        named_instance("petersen")


def test_named_instances():
    assert set(NAMED) >= {"c3", "sym_p4", "dicycle", "c4_complement"}
    assert named_instance("c4_complement").arcs() == [(0, 2), (0, 3), (1, 0), (1, 3), (2, 0), (2, 1), (3, 1), (3, 2)]
    for k in range(3, 9):
        d = named_instance("dicycle", k)
        assert dichromatic_number(d).chi == 2 and clique_number(d).omega == 1


def test_derive_seed_distinguishes_keys():
    seeds = {derive_seed(1, i, j) for i in range(20) for j in range(20)}
    assert len(seeds) == 400


@given(digraphs(max_n=7))
def test_reversal_pair(d):
    a, b = p4c_pair(d, PairMode.REVERSAL)
    assert a == d and b == reverse(d)


def test_mutation_on_arcless_finds_pair():
    pair = p4c_pair(named_instance("arcless", 4), PairMode.MUTATION, 50, 0)
    assert pair is not None and pair[0] != pair[1]
    assert are_p4c_isomorphic(*pair)


def test_every_toggle_of_c3_changes_signature():
    c3 = named_instance("c3")
    for u, v in ordered_pairs(3):
        assert local_signature(toggle(c3, u, v), u, v) != local_signature(c3, u, v)
    for seed in range(20):
        assert p4c_pair(c3, PairMode.MUTATION, 1, seed) is None


def test_mutation_budget_must_be_positive():
    with pytest.raises(ValueError):
        p4c_pair(named_instance("c3"), PairMode.MUTATION, 0)


@given(digraphs(max_n=6), st.integers(0, 2**32))
def test_mutation_pairs_are_p4c_isomorphic(d, seed):
    pair = p4c_pair(d, PairMode.MUTATION, 30, seed)
    if pair is not None:
        assert pair[0] == d and pair[1] != d and are_p4c_isomorphic(*pair)


def test_random_f_free():
    assert random_f_free(1, 0, 1).n == 1
    assert random_f_free(3, 5, 1, p_sym=1.0, p_asym=0.0) == named_instance("sym_complete", 3)
    for seed in range(30):
        d = random_f_free(6, seed, 500)
        assert d is not None and is_f_free(d)
    with pytest.raises(ValueError):
        random_f_free(3, 0, 0)
