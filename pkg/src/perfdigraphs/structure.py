"""Structure of F-free digraphs and exact minimum path covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import Digraph, bits, mask_components, mask_of, symmetric_components
from .errors import NotFFree, StructureViolation
from .patterns import first_f_site


@dataclass(frozen=True)
class ComponentStructure:
    """Symmetric components of D grouped into the parts of a complete multipartite quotient.

    ``groups`` lists component indices; ``cross_arcs[(i, j)]`` holds the arcs
    from component i to component j, present only when nonempty.
    """

    components: tuple[tuple[int, ...], ...]
    groups: tuple[tuple[int, ...], ...]
    cross_arcs: dict = field(default_factory=dict)

    @property
    def parts(self) -> int:
        return len(self.groups)


def component_structure(d: Digraph) -> ComponentStructure:
    """Build and validate the quotient structure without requiring F-freeness."""
    comps = symmetric_components(d)
    masks = [mask_of(c) for c in comps]
    k = len(comps)
    linked = [0] * k
    cross: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
    for i, j in combinations(range(k), 2):
        fwd = tuple((u, v) for u in comps[i] for v in bits(d.out[u] & masks[j]))
        bwd = tuple((u, v) for u in comps[j] for v in bits(d.out[u] & masks[i]))
        if not fwd and not bwd:
            continue
        for u in comps[i]:
            for v in comps[j]:
                there, back = d.has_arc(u, v), d.has_arc(v, u)
                if there == back:
                    reason = "doubled cross pair" if there else "missing cross pair"
                    raise StructureViolation((i, j), (u, v), reason)
        linked[i] |= 1 << j
        linked[j] |= 1 << i
        if fwd:
            cross[(i, j)] = fwd
        if bwd:
            cross[(j, i)] = bwd
    unlinked = [((1 << k) - 1) & ~linked[i] & ~(1 << i) for i in range(k)]
    groups = mask_components(unlinked, (1 << k) - 1)
    for g in groups:
        for i, j in combinations(g, 2):
            if linked[i] >> j & 1:
                raise StructureViolation((i, j), (comps[i][0], comps[j][0]),
                                         "non-adjacency between components is not transitive",
                                         kind="nontransitive")
    return ComponentStructure(tuple(comps), tuple(groups), cross)


def check_f_free_structure(d: Digraph) -> ComponentStructure:
    """Validate that the asymmetric arcs between symmetric components of an F-free
    digraph form an orientation of a complete multipartite graph.

    Raises NotFFree when D contains a forbidden pattern and StructureViolation
    when two components are joined partially, or when "no arcs between" fails
    to be transitive; either violation would refute the claimed structure.
    """
    site = first_f_site(d)
    if site is not None:
        raise NotFFree(site)
    return component_structure(d)


@dataclass(frozen=True)
class PathCoverResult:
    count: int
    paths: tuple[tuple[int, ...], ...]


def min_path_cover(d: Digraph) -> PathCoverResult:
    """Minimum number of vertex-disjoint directed paths covering D (practical for n <= 15).

    ``cover[R]`` is the optimum for the subdigraph induced by R and
    ``tail[R][v]`` the best count of paths still needed for R when the current
    path has just reached v (v not in R) and may continue into R or stop. The
    reported cover is the lexicographically smallest sequence of paths, built
    greedily: stop the current path whenever that stays optimal, otherwise step
    to the least out-neighbour that does.
    """
    n = d.n
    if n == 0:
        return PathCoverResult(0, ())
    size = 1 << n
    out = d.out
    inf = n + 1
    cover = [0] * size
    tail = [[inf] * n for _ in range(size)]
    for r in range(size):
        if r:
            cover[r] = min(1 + tail[r ^ (1 << s)][s] for s in bits(r))
        row = tail[r]
        cr = cover[r]
        for v in range(n):
            if r >> v & 1:
                continue
            best = cr
            for w in bits(out[v] & r):
                x = tail[r ^ (1 << w)][w]
                if x < best:
                    best = x
            row[v] = best

    paths = []
    r = size - 1
    k = cover[r]
    while r:
        need = k - 1
        s = next(s for s in bits(r) if tail[r ^ (1 << s)][s] <= need)
        path = [s]
        r ^= 1 << s
        while cover[r] > need:
            w = next(w for w in bits(out[path[-1]] & r) if tail[r ^ (1 << w)][w] <= need)
            path.append(w)
            r ^= 1 << w
        paths.append(tuple(path))
        k = need
    return PathCoverResult(len(paths), tuple(paths))


def is_valid_path_cover(d: Digraph, paths) -> bool:
    seen = [v for p in paths for v in p]
    if sorted(seen) != list(range(d.n)):
        return False
    return all(d.has_arc(p[i], p[i + 1]) for p in paths for i in range(len(p) - 1))
