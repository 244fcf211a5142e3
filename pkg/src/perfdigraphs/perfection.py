"""Perfection checkers: by definition, for graphs, and via the structural characterisation.

A digraph is perfect iff its symmetric part is a perfect graph and it has no
induced directed cycle of length >= 3. The definitional checker compares the
dichromatic and clique numbers on every induced subdigraph instead, and the
two are cross-checked in the test suite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .core import Digraph, induced_subdigraph, is_symmetric, mask_of, symmetric_complement, symmetric_part
from .errors import NotSymmetric
from .patterns import find_induced_directed_cycle, shortest_chordless_cycle
from .solvers import acyclic_table, clique_table, dichromatic_number


class Method(enum.Enum):
    DEFINITIONAL = "definitional"
    STRUCTURAL = "structural"


@dataclass(frozen=True)
class FailingSubdigraph:
    vertices: tuple[int, ...]
    chi: int
    omega: int

    def describe(self) -> str:
        return f"failing subdigraph {list(self.vertices)} chi={self.chi} omega={self.omega}"


@dataclass(frozen=True)
class OddHole:
    cycle: tuple[int, ...]

    def describe(self) -> str:
        return f"odd hole {list(self.cycle)}"


@dataclass(frozen=True)
class OddAntihole:
    cycle: tuple[int, ...]

    def describe(self) -> str:
        return f"odd antihole {list(self.cycle)}"


@dataclass(frozen=True)
class InducedDirectedCycle:
    cycle: tuple[int, ...]

    def describe(self) -> str:
        return f"induced directed cycle {list(self.cycle)}"


Witness = Union[FailingSubdigraph, OddHole, OddAntihole, InducedDirectedCycle]


@dataclass(frozen=True)
class PerfectionReport:
    verdict: bool
    method: Method
    witness: Optional[Witness] = None


def _odd_hole(g: Digraph) -> Optional[tuple[int, ...]]:
    return shortest_chordless_cycle(g, False, lambda k: k >= 5 and k % 2 == 1)


def is_perfect_undirected(g: Digraph) -> PerfectionReport:
    """Perfect-graph test: no odd hole in ``g`` and none in its complement."""
    if not is_symmetric(g):
        raise NotSymmetric("is_perfect_undirected needs a symmetric digraph")
    hole = _odd_hole(g)
    if hole is not None:
        return PerfectionReport(False, Method.STRUCTURAL, OddHole(hole))
    anti = _odd_hole(symmetric_complement(g))
    if anti is not None:
        return PerfectionReport(False, Method.STRUCTURAL, OddAntihole(anti))
    return PerfectionReport(True, Method.STRUCTURAL)


def is_perfect_structural(d: Digraph) -> PerfectionReport:
    cycle = find_induced_directed_cycle(d)
    if cycle is not None:
        return PerfectionReport(False, Method.STRUCTURAL, InducedDirectedCycle(cycle))
    return is_perfect_undirected(symmetric_part(d))


def is_perfect_bruteforce(d: Digraph) -> PerfectionReport:
    """Compare chi and omega on all 2^n induced subdigraphs (practical for n <= 12).

    Subsets are visited by increasing size, so the reported failure is a
    minimum one. While no failure has been seen, chi equals omega on every
    smaller subset, hence chi(S) = omega(S) exactly when some acyclic class T
    containing the least vertex of S leaves omega(S - T) <= omega(S) - 1.
    """
    acyclic = acyclic_table(d)
    omega = clique_table(d)
    for k in range(1, d.n + 1):
        for verts in combinations(range(d.n), k):
            s = mask_of(verts)
            target = omega[s] - 1
            low = s & -s
            rest = s ^ low
            sub = rest
            ok = False
            while True:
                t = sub | low
                if acyclic[t] and omega[s ^ t] <= target:
                    ok = True
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            if not ok:
                chi = dichromatic_number(induced_subdigraph(d, verts)).chi
                return PerfectionReport(False, Method.DEFINITIONAL, FailingSubdigraph(verts, chi, omega[s]))
    return PerfectionReport(True, Method.DEFINITIONAL)
