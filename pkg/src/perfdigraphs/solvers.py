"""Exact dichromatic number and clique number."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Digraph, bits, is_acyclic_mask
from .errors import PartialAssignment


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    assignment: dict[int, int]

    def classes(self) -> list[tuple[int, ...]]:
        return [tuple(v for v in sorted(self.assignment) if self.assignment[v] == c)
                for c in range(1, self.chi + 1)]


@dataclass(frozen=True)
class CliqueWitness:
    omega: int
    vertices: tuple[int, ...]


def acyclic_table(d: Digraph) -> bytearray:
    """``table[mask]`` is 1 iff ``mask`` induces an acyclic subdigraph.

    A nonempty set is acyclic iff it has a vertex with no in-arc from the set
    whose removal leaves an acyclic set.
    """
    size = 1 << d.n
    table = bytearray(size)
    table[0] = 1
    inn = d.inn
    for mask in range(1, size):
        for v in bits(mask):
            if not inn[v] & mask and table[mask ^ (1 << v)]:
                table[mask] = 1
                break
    return table


def clique_table(d: Digraph) -> list[int]:
    """``table[mask]`` is the clique number of the subdigraph induced by ``mask``."""
    size = 1 << d.n
    sym = [d.sym(v) for v in range(d.n)]
    table = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        with_v = 1 + table[rest & sym[v]]
        table[mask] = max(table[rest], with_v)
    return table


def is_proper_coloring(d: Digraph, assignment: Mapping[int, int]) -> bool:
    missing = [v for v in range(d.n) if v not in assignment]
    if missing:
        raise PartialAssignment(f"no color for vertices {missing}")
    classes: dict[int, int] = {}
    for v in range(d.n):
        classes[assignment[v]] = classes.get(assignment[v], 0) | 1 << v
    return all(is_acyclic_mask(d, m) for m in classes.values())


def _is_maximal(acyclic: bytearray, t: int, within: int) -> bool:
    for v in bits(within & ~t):
        if acyclic[t | 1 << v]:
            return False
    return True


def dichromatic_number(d: Digraph) -> ColoringResult:
    """Minimum number of acyclic color classes, with a witness coloring.

    Values come from a DP over vertex subsets: the class holding the least
    vertex of S is chosen among acyclic subsets of S. The witness takes, at each
    step, the lexicographically smallest maximal acyclic class that keeps the
    count optimal, so color 1 holds vertex 0, color 2 the least uncolored vertex,
    and so on.
    """
    n = d.n
    if n == 0:
        return ColoringResult(0, {})
    acyclic = acyclic_table(d)
    size = 1 << n
    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        if acyclic[s]:
            chi[s] = 1
            continue
        best = n
        sub = rest
        while True:
            t = sub | low
            if acyclic[t]:
                c = chi[s ^ t]
                if c < best:
                    best = c
                    if best <= 1:
                        break
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best + 1

    assignment: dict[int, int] = {}
    s = size - 1
    color = 0
    while s:
        color += 1
        low = s & -s
        rest = s ^ low
        target = chi[s] - 1
        chosen = None
        for t in _submasks_lex(low, rest):
            if acyclic[t] and chi[s ^ t] == target and _is_maximal(acyclic, t, s):
                chosen = t
                break
        assert chosen is not None
        for v in bits(chosen):
            assignment[v] = color
        s ^= chosen
    return ColoringResult(chi[size - 1], assignment)


def _submasks_lex(low: int, rest: int):
    """Sets ``low | sub`` for sub within ``rest``, in lexicographic order of sorted tuples."""
    avail = list(bits(rest))

    def rec(i: int, cur: int):
        yield cur
        for j in range(i, len(avail)):
            yield from rec(j + 1, cur | 1 << avail[j])

    return rec(0, low)


def clique_number(d: Digraph) -> CliqueWitness:
    """Maximum clique of S(D) by branch and bound with a greedy coloring bound.

    Among maximum cliques the lexicographically smallest vertex tuple is returned.
    """
    n = d.n
    sym = [d.sym(v) for v in range(n)]
    best: list = [()]

    def color_bound(cand: int) -> int:
        # greedy sequential coloring; the number of colors bounds any clique in cand
        colors = 0
        uncolored = cand
        while uncolored:
            colors += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                uncolored &= ~(1 << v)
                avail &= ~(1 << v) & ~sym[v]
        return colors

    def expand(clique: tuple[int, ...], cand: int) -> None:
        if not cand:
            if len(clique) > len(best[0]):
                best[0] = clique
            return
        if len(clique) + color_bound(cand) <= len(best[0]):
            return
        for v in bits(cand):
            if len(clique) + cand.bit_count() <= len(best[0]):
                return
            expand(clique + (v,), cand & sym[v])
            cand &= ~(1 << v)
        if len(clique) > len(best[0]):
            best[0] = clique

    expand((), d.full_mask)
    return CliqueWitness(len(best[0]), best[0])
