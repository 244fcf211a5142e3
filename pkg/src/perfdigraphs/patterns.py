"""The five forbidden 3/4-vertex patterns, P4C signatures, and induced directed cycles.

Naming of the two augmented paths: for a directed path a -> b -> c, ``P3_PLUS``
adds the arc (b, a) (antiparallel to the first arc) and ``P3_MINUS`` adds (c, b).
Signatures merge the two, so only the classifier ever distinguishes them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .core import Digraph, bits
from .errors import BadSubsetSize, VertexCountMismatch


class Pattern(enum.Enum):
    NONE = "None"
    C3 = "C3"
    P3 = "P3"
    P3_PLUS = "P3Plus"
    P3_MINUS = "P3Minus"
    OTHER = "Other"


@dataclass(frozen=True)
class TriplePattern:
    kind: Pattern
    midpoint: Optional[int] = None

    def __str__(self) -> str:
        if self.midpoint is None:
            return self.kind.value
        return f"{self.kind.value}({self.midpoint})"


FORBIDDEN_TRIPLE_KINDS = frozenset({Pattern.C3, Pattern.P3, Pattern.P3_PLUS, Pattern.P3_MINUS})


def _check_subset(d: Digraph, verts, size: int) -> tuple[int, ...]:
    t = tuple(sorted(set(verts)))
    if len(t) != size or len(tuple(verts)) != size:
        raise BadSubsetSize(f"expected {size} distinct vertices, got {verts!r}")
    if t[0] < 0 or t[-1] >= d.n:
        raise BadSubsetSize(f"vertices {t} outside 0..{d.n - 1}")
    return t


def _classify(d: Digraph, a: int, b: int, c: int) -> TriplePattern:
    tri = (a, b, c)
    m = 1 << a | 1 << b | 1 << c
    outs = {v: d.out[v] & m for v in tri}
    ins = {v: d.inn[v] & m for v in tri}
    n_arcs = sum(o.bit_count() for o in outs.values())
    digon_ends = [v for v in tri if outs[v] & ins[v]]
    if n_arcs == 0:
        return TriplePattern(Pattern.NONE)
    if not digon_ends:
        if n_arcs == 3 and all(outs[v].bit_count() == 1 for v in tri):
            return TriplePattern(Pattern.C3)
        if n_arcs == 2:
            for v in tri:
                if outs[v] and ins[v]:
                    return TriplePattern(Pattern.P3, v)
        return TriplePattern(Pattern.OTHER)
    if n_arcs == 3 and len(digon_ends) == 2:
        # one digon plus one asymmetric arc; they share exactly one vertex
        x, y = digon_ends
        mid = x if (outs[x] | ins[x]).bit_count() == 2 else y
        other = (outs[mid] | ins[mid]) & ~(outs[mid] & ins[mid])
        if outs[mid] & other:
            return TriplePattern(Pattern.P3_PLUS, mid)
        return TriplePattern(Pattern.P3_MINUS, mid)
    return TriplePattern(Pattern.OTHER)


def classify_triple(d: Digraph, triple) -> TriplePattern:
    a, b, c = _check_subset(d, triple, 3)
    return _classify(d, a, b, c)


def _sym_p4(d: Digraph, q: tuple[int, ...]) -> bool:
    m = 0
    for v in q:
        m |= 1 << v
    degs = sorted((d.out[v] & d.inn[v] & m).bit_count() for v in q)
    return degs == [1, 1, 2, 2]


def induces_p4_in_symmetric(d: Digraph, quad) -> bool:
    """Whether ``quad`` induces a P4 in S(D); asymmetric arcs inside ``quad`` are ignored."""
    return _sym_p4(d, _check_subset(d, quad, 4))


def _sym_p4_in_d(d: Digraph, q: tuple[int, ...]) -> bool:
    if not _sym_p4(d, q):
        return False
    m = 0
    for v in q:
        m |= 1 << v
    return all(d.out[v] & m == d.out[v] & d.inn[v] & m for v in q)


@dataclass(frozen=True)
class PatternSignature:
    """Occurrence sets of the four P4C conditions, each sorted lexicographically."""

    p4_quads: tuple[tuple[int, int, int, int], ...] = ()
    c3_triples: tuple[tuple[int, int, int], ...] = ()
    p3_sites: tuple[tuple[tuple[int, int, int], int], ...] = ()
    p3aug_sites: tuple[tuple[tuple[int, int, int], int], ...] = ()

    def is_empty(self) -> bool:
        return not (self.p4_quads or self.c3_triples or self.p3_sites or self.p3aug_sites)

    def entries(self):
        """Flat canonical listing ``(field, entry)`` used for diffs."""
        for name in ("p4_quads", "c3_triples", "p3_sites", "p3aug_sites"):
            for e in getattr(self, name):
                yield name, e


def _triple_sites(d: Digraph, triples):
    c3, p3, aug = [], [], []
    for t in triples:
        tp = _classify(d, *t)
        if tp.kind is Pattern.C3:
            c3.append(t)
        elif tp.kind is Pattern.P3:
            p3.append((t, tp.midpoint))
        elif tp.kind in (Pattern.P3_PLUS, Pattern.P3_MINUS):
            aug.append((t, tp.midpoint))
    return c3, p3, aug


def p4c_signature(d: Digraph) -> PatternSignature:
    verts = range(d.n)
    quads = tuple(q for q in combinations(verts, 4) if _sym_p4(d, q))
    c3, p3, aug = _triple_sites(d, combinations(verts, 3))
    return PatternSignature(quads, tuple(c3), tuple(p3), tuple(aug))


def local_signature(d: Digraph, u: int, v: int) -> PatternSignature:
    """Signature restricted to sites containing both ``u`` and ``v``.

    Toggling the arc (u, v) can only change these sites.
    """
    a, b = min(u, v), max(u, v)
    others = [w for w in range(d.n) if w != a and w != b]
    triples = [tuple(sorted((a, b, w))) for w in others]
    quads = [tuple(sorted((a, b, w, x))) for w, x in combinations(others, 2)]
    quads = tuple(sorted(q for q in quads if _sym_p4(d, q)))
    c3, p3, aug = _triple_sites(d, sorted(triples))
    return PatternSignature(quads, tuple(c3), tuple(p3), tuple(aug))


def are_p4c_isomorphic(d: Digraph, e: Digraph) -> bool:
    if d.n != e.n:
        raise VertexCountMismatch(f"{d.n} vs {e.n} vertices")
    return p4c_signature(d) == p4c_signature(e)


def first_signature_difference(d: Digraph, e: Digraph):
    """First entry, in canonical order, present in exactly one signature.

    Returns ``(field, entry, side)`` with side ``"A"`` or ``"B"``, or None.
    """
    if d.n != e.n:
        raise VertexCountMismatch(f"{d.n} vs {e.n} vertices")
    sa, sb = p4c_signature(d), p4c_signature(e)
    for name in ("p4_quads", "c3_triples", "p3_sites", "p3aug_sites"):
        ea, eb = set(getattr(sa, name)), set(getattr(sb, name))
        diff = sorted(ea ^ eb)
        if diff:
            return name, diff[0], "A" if diff[0] in ea else "B"
    return None


def first_f_site(d: Digraph, p4_induced_in_d: bool = False):
    """First forbidden site as ``(kind, vertices, midpoint)``, or None if D is F-free.

    Triples are scanned before quadruples. By default a quadruple is forbidden
    when it induces a P4 in S(D), as in the signature. With
    ``p4_induced_in_d=True`` the symmetric P4 must be induced in D itself, i.e.
    carry no asymmetric arcs; that class is strictly larger and its symmetric
    parts need not be cographs.
    """
    for t in combinations(range(d.n), 3):
        tp = _classify(d, *t)
        if tp.kind in FORBIDDEN_TRIPLE_KINDS:
            return tp.kind.value, t, tp.midpoint
    p4 = _sym_p4_in_d if p4_induced_in_d else _sym_p4
    for q in combinations(range(d.n), 4):
        if p4(d, q):
            return "P4", q, None
    return None


def is_f_free(d: Digraph, p4_induced_in_d: bool = False) -> bool:
    return first_f_site(d, p4_induced_in_d) is None


def shortest_chordless_cycle(
    d: Digraph, directed: bool, accept: Callable[[int], bool]
) -> Optional[tuple[int, ...]]:
    """Shortest accepted chordless cycle, ties broken by smallest vertex sequence.

    Cycles are grown as chordless paths v0 < every other vertex; a vertex w may
    extend the path only if its sole contact with the path is the step arc from
    the last vertex, or that arc plus the arc closing back to v0. In directed
    mode steps must be asymmetric arcs and any digon is a chord; in undirected
    mode only the digons of D are used as edges.
    """
    n = d.n
    if directed:
        step = [d.out[v] & ~d.inn[v] for v in range(n)]
        touch = [d.out[v] | d.inn[v] for v in range(n)]
    else:
        step = [d.out[v] & d.inn[v] for v in range(n)]
        touch = step
    best: list = [None]

    def better(length: int) -> bool:
        return best[0] is None or length < len(best[0])

    def grow(path: list[int], pmask: int, interior: int, allowed: int) -> None:
        v0, vt = path[0], path[-1]
        for w in bits(step[vt] & allowed & ~pmask):
            if touch[w] & interior:
                continue
            if len(path) > 1 and touch[w] >> v0 & 1:
                if step[w] >> v0 & 1:
                    length = len(path) + 1
                    if accept(length) and better(length):
                        best[0] = tuple(path) + (w,)
                continue
            # the shortest cycle reachable from the longer path has len(path) + 2 vertices
            if not better(len(path) + 2):
                continue
            grow(path + [w], pmask | 1 << w, interior | (1 << vt if len(path) > 1 else 0), allowed)

    for v0 in range(n):
        if best[0] is not None and len(best[0]) <= 3:
            break
        grow([v0], 1 << v0, 0, d.full_mask & ~((2 << v0) - 1))
    return best[0]


def find_induced_directed_cycle(d: Digraph, min_len: int = 3) -> Optional[tuple[int, ...]]:
    """Induced directed cycle of length >= ``min_len`` as a vertex sequence, or None.

    The witness starts at its least vertex and is the shortest such cycle,
    with the smallest vertex sequence among those of that length.
    """
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    return shortest_chordless_cycle(d, True, lambda k: k >= min_len)
