import random

import pytest
from hypothesis import given

from perfdigraphs.core import Digraph, all_digraphs, build_digraph
from perfdigraphs.errors import NotFFree, StructureViolation
from perfdigraphs.gen import GenSpec, derive_seed, named_instance, random_digraph
from perfdigraphs.oracles import brute_max_matching
from perfdigraphs.patterns import is_f_free
from perfdigraphs.perfection import is_perfect_structural
from perfdigraphs.structure import check_f_free_structure, is_valid_path_cover, min_path_cover
from perfdigraphs.verify import f_free_sample

from .strategies import digraphs

TWO_DIGONS = [(0, 1), (1, 0), (2, 3), (3, 2)]


def test_complete_orientation_between_digons():
    d = build_digraph(4, TWO_DIGONS + [(0, 2), (0, 3), (1, 2), (1, 3)])
    s = check_f_free_structure(d)
    assert s.components == ((0, 1), (2, 3))
    assert s.groups == ((0,), (1,))
    assert s.cross_arcs == {(0, 1): ((0, 2), (0, 3), (1, 2), (1, 3))}


def test_single_cross_arc_is_not_f_free():
    d = build_digraph(4, TWO_DIGONS + [(0, 2)])
    with pytest.raises(NotFFree) as exc:
        check_f_free_structure(d)
    kind, verts, mid = exc.value.site
    assert kind in ("P3Plus", "P3Minus")
    assert mid in verts


def test_arcless():
    s = check_f_free_structure(build_digraph(3, []))
    assert s.components == ((0,), (1,), (2,))
    assert s.parts == 1 and s.cross_arcs == {}


def test_single_arc_refutes_multipartite_quotient():
    # F-free, yet "no arc between" is not transitive on the components {0}, {1}, {2}
    d = build_digraph(3, [(0, 2)])
    assert is_f_free(d)
    with pytest.raises(StructureViolation) as exc:
        check_f_free_structure(d)
    assert exc.value.kind == "nontransitive"


def _linked_pairs_complete(d):
    """The pairwise claim alone: any arc between two symmetric components forces a
    complete one-way orientation between them."""
    from perfdigraphs.core import symmetric_components

    comps = symmetric_components(d)
    for i, a in enumerate(comps):
        for b in comps[i + 1:]:
            cross = [(u, v) for u in a for v in b]
            hits = [d.has_arc(u, v) + d.has_arc(v, u) for u, v in cross]
            if any(hits) and hits != [1] * len(hits):
                return False
    return True


def test_pairwise_completeness_exhaustive():
    for n in range(5):
        for d in all_digraphs(n):
            if is_f_free(d):
                assert _linked_pairs_complete(d)
                try:
                    check_f_free_structure(d)
                except StructureViolation as exc:
                    assert exc.kind == "nontransitive"


@pytest.mark.parametrize("n", [5, 6, 7])
def test_pairwise_completeness_sampled(n):
    for i in range(400):
        d = f_free_sample(n, 31, i)
        assert d is not None and is_f_free(d)
        assert _linked_pairs_complete(d)
        assert is_perfect_structural(d).verdict


def test_path_cover_examples():
    p = named_instance("sym_path", 5)
    assert min_path_cover(p).count == 1
    directed = build_digraph(6, [(i, i + 1) for i in range(5)])
    assert min_path_cover(directed).paths == ((0, 1, 2, 3, 4, 5),)
    res = min_path_cover(build_digraph(3, []))
    assert res.count == 3 and res.paths == ((0,), (1,), (2,))
    assert min_path_cover(build_digraph(0, [])).count == 0


def test_digons_traversed_either_way():
    d = build_digraph(3, [(1, 0), (0, 1), (2, 1)])
    assert min_path_cover(d).paths == ((2, 1, 0),)


def random_dag(n, seed):
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    p = rng.choice([0.15, 0.3, 0.5])
    arcs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_digraph(n, arcs)


def test_path_cover_matches_matching_oracle_on_dags():
    for i in range(150):
        d = random_dag(1 + i % 10, i)
        res = min_path_cover(d)
        assert res.count == d.n - brute_max_matching(d)
        assert is_valid_path_cover(d, res.paths)


def _relabel(d: Digraph, perm):
    return build_digraph(d.n, [(perm[u], perm[v]) for u, v in d.arcs()])


@given(digraphs(max_n=7))
def test_path_cover_valid_and_relabel_invariant(d):
    res = min_path_cover(d)
    assert is_valid_path_cover(d, res.paths)
    assert res.count == len(res.paths)
    perm = list(range(d.n))
    random.Random(d.n).shuffle(perm)
    assert min_path_cover(_relabel(d, perm)).count == res.count


def test_path_cover_is_minimum_brute():
    """Compare with trying every ordering of the vertices as a sequence of cut points."""
    from itertools import permutations

    for i in range(60):
        d = random_digraph(GenSpec(5, 0.2, 0.3, derive_seed(12, i)))
        best = d.n
        for order in permutations(range(d.n)):
            breaks = sum(1 for a, b in zip(order, order[1:]) if not d.has_arc(a, b))
            best = min(best, breaks + 1)
        assert min_path_cover(d).count == best
