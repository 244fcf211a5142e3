"""Brute-force reference computations.

These deliberately share no code with the solvers they check: arc tests go
through ``Digraph.has_arc`` only, and cycles are found by plain DFS colouring.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .core import Digraph


def has_cycle_dfs(d: Digraph, verts) -> bool:
    """Directed cycle (digons included) in the subdigraph on ``verts``, by DFS colouring."""
    vs = list(verts)
    inside = set(vs)
    state = {v: 0 for v in vs}

    def visit(u) -> bool:
        state[u] = 1
        for w in vs:
            if w in inside and d.has_arc(u, w):
                if state[w] == 1:
                    return True
                if state[w] == 0 and visit(w):
                    return True
        state[u] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in vs)


def _growth_strings(n: int, k: int):
    """Assignments 0..k-1 of n items in restricted growth form (each colour class once)."""
    a = [0] * n

    def rec(i: int, used: int):
        if i == n:
            yield tuple(a)
            return
        for c in range(min(used + 1, k)):
            a[i] = c
            yield from rec(i + 1, max(used, c + 1))

    if n == 0:
        yield ()
    else:
        yield from rec(0, 0)


def brute_dichromatic(d: Digraph) -> int:
    for k in range(d.n + 1):
        for a in _growth_strings(d.n, k):
            if not any(has_cycle_dfs(d, [v for v in range(d.n) if a[v] == c]) for c in range(k)):
                return k
    raise AssertionError("unreachable")


def brute_chromatic_graph(g: Digraph) -> int:
    """Chromatic number of the undirected graph whose edges are the digons of ``g``."""
    def adj(u, v):
        return g.has_arc(u, v) and g.has_arc(v, u)

    for k in range(g.n + 1):
        for a in _growth_strings(g.n, k):
            if all(a[u] != a[v] for u, v in combinations(range(g.n), 2) if adj(u, v)):
                return k
    raise AssertionError("unreachable")


def brute_clique(d: Digraph) -> int:
    best = 0
    for k in range(1, d.n + 1):
        if any(all(d.has_arc(u, v) and d.has_arc(v, u) for u, v in combinations(s, 2))
               for s in combinations(range(d.n), k)):
            best = k
        else:
            break
    return best


def is_exact_directed_cycle(d: Digraph, verts) -> bool:
    """Whether the subdigraph induced by ``verts`` is exactly one directed cycle."""
    vs = list(verts)
    if len(vs) < 3:
        return False
    succ = {}
    for u in vs:
        outs = [w for w in vs if w != u and d.has_arc(u, w)]
        ins = [w for w in vs if w != u and d.has_arc(w, u)]
        if len(outs) != 1 or len(ins) != 1:
            return False
        succ[u] = outs[0]
    seen, u = set(), vs[0]
    while u not in seen:
        seen.add(u)
        u = succ[u]
    return len(seen) == len(vs)


def brute_induced_cycle_sets(d: Digraph, min_len: int = 3) -> list[tuple[int, ...]]:
    return [s for k in range(min_len, d.n + 1) for s in combinations(range(d.n), k)
            if is_exact_directed_cycle(d, s)]


def brute_has_p4(g: Digraph) -> bool:
    """Induced P4 in the digon graph, by trying every vertex order a-b-c-d."""
    def adj(u, v):
        return g.has_arc(u, v) and g.has_arc(v, u)

    for q in combinations(range(g.n), 4):
        for a, b, c, e in permutations(q):
            if (adj(a, b) and adj(b, c) and adj(c, e)
                    and not adj(a, c) and not adj(b, e) and not adj(a, e)):
                return True
    return False


def brute_max_matching(d: Digraph) -> int:
    """Maximum matching in the bipartite graph (out-copy u, in-copy v) for arcs (u, v)."""
    n = d.n
    nbrs = [[v for v in range(n) if d.has_arc(u, v)] for u in range(n)]

    @lru_cache(maxsize=None)
    def best(i: int, used: frozenset) -> int:
        if i == n:
            return 0
        top = best(i + 1, used)
        for v in nbrs[i]:
            if v not in used:
                top = max(top, 1 + best(i + 1, used | {v}))
        return top

    return best(0, frozenset())
