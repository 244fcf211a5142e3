"""Loopless digraphs on vertices 0..n-1, stored as rows of an adjacency bit matrix.

Row ``out[v]`` is an int whose bit ``w`` is set iff the arc (v, w) is present.
All operations return new digraphs; a :class:`Digraph` is never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import LoopArc, NotSymmetric, OutOfRange


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Digraph:
    n: int
    out: tuple[int, ...]
    inn: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.out) != self.n:
            raise ValueError("row count does not match n")
        inn = [0] * self.n
        for v, row in enumerate(self.out):
            for w in bits(row):
                inn[w] |= 1 << v
        object.__setattr__(self, "inn", tuple(inn))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    @property
    def num_arcs(self) -> int:
        return sum(row.bit_count() for row in self.out)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sym(self, v: int) -> int:
        """Digon neighbours of ``v`` as a mask."""
        return self.out[v] & self.inn[v]

    def nbr(self, v: int) -> int:
        """Vertices joined to ``v`` by an arc in either direction."""
        return self.out[v] | self.inn[v]

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    if n < 0:
        raise OutOfRange(f"negative vertex count {n}")
    out = [0] * n
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"arc ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopArc(f"loop at {u}")
        out[u] |= 1 << v
    return Digraph(n, tuple(out))


def symmetric_part(d: Digraph) -> Digraph:
    return Digraph(d.n, tuple(d.out[v] & d.inn[v] for v in range(d.n)))


def oriented_part(d: Digraph) -> Digraph:
    return Digraph(d.n, tuple(d.out[v] & ~d.inn[v] for v in range(d.n)))


def is_symmetric(d: Digraph) -> bool:
    return d.out == d.inn


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced by ``vertices``, relabelled by increasing original id."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < d.n:
            raise OutOfRange(f"vertex {v} outside 0..{d.n - 1}")
    pos = {v: i for i, v in enumerate(keep)}
    sel = mask_of(keep)
    out = tuple(mask_of(pos[w] for w in bits(d.out[v] & sel)) for v in keep)
    return Digraph(len(keep), out)


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.n, d.inn)


def complement(d: Digraph) -> Digraph:
    """Arc (u, v), u != v, present iff it is absent in ``d``."""
    full = d.full_mask
    return Digraph(d.n, tuple(full & ~d.out[v] & ~(1 << v) for v in range(d.n)))


def symmetric_complement(g: Digraph) -> Digraph:
    if not is_symmetric(g):
        raise NotSymmetric("symmetric_complement needs a symmetric digraph")
    return complement(g)


def is_acyclic_mask(d: Digraph, mask: int) -> bool:
    """Acyclicity of the subdigraph induced by ``mask`` by repeated source removal."""
    rest = mask
    changed = True
    while rest and changed:
        changed = False
        for v in bits(rest):
            if not d.inn[v] & rest:
                rest ^= 1 << v
                changed = True
    return rest == 0


def is_acyclic(d: Digraph) -> bool:
    return is_acyclic_mask(d, d.full_mask)


def _components(n: int, adj: tuple[int, ...] | list[int], within: int) -> list[tuple[int, ...]]:
    comps = []
    left = within
    while left:
        start = left & -left
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        comps.append(tuple(bits(seen)))
        left &= ~seen
    return comps


def symmetric_components(d: Digraph) -> list[tuple[int, ...]]:
    """Connected components of S(D), each a sorted tuple, ordered by least vertex."""
    return _components(d.n, [d.sym(v) for v in range(d.n)], d.full_mask)


def mask_components(adj: tuple[int, ...] | list[int], within: int) -> list[tuple[int, ...]]:
    """Components of the undirected graph ``adj`` restricted to ``within``."""
    return _components(len(adj), adj, within)


# Exhaustive enumeration: bit i of a code stands for the i-th ordered pair (u, v), u != v,
# in lexicographic order.

def ordered_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def from_code(n: int, code: int) -> Digraph:
    out = [0] * n
    for i, (u, v) in enumerate(ordered_pairs(n)):
        if code >> i & 1:
            out[u] |= 1 << v
    return Digraph(n, tuple(out))


def to_code(d: Digraph) -> int:
    return sum(1 << i for i, (u, v) in enumerate(ordered_pairs(d.n)) if d.has_arc(u, v))


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every loopless labelled digraph on ``n`` vertices, in code order."""
    for code in range(1 << (n * (n - 1))):
        yield from_code(n, code)
