"""Cotrees of cographs (P4-free graphs given as symmetric digraphs).

Text form::

    node  := leaf | label "(" node (" " node)+ ")"
    label := "0" | "1"
    leaf  := "v" <decimal id>

A 0-node is a disjoint union of its children, a 1-node their complete join.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .core import Digraph, bits, is_symmetric, mask_components
from .errors import MalformedCotree, NotCograph, NotSymmetric
from .patterns import induces_p4_in_symmetric


@dataclass(frozen=True)
class Leaf:
    vertex: int

    @property
    def leaves(self) -> tuple[int, ...]:
        return (self.vertex,)

    def __str__(self) -> str:
        return f"v{self.vertex}"


@dataclass(frozen=True)
class Node:
    label: int
    children: tuple["Cotree", ...]

    @property
    def leaves(self) -> tuple[int, ...]:
        return tuple(sorted(v for c in self.children for v in c.leaves))

    def __str__(self) -> str:
        return f"{self.label}({' '.join(map(str, self.children))})"


Cotree = Union[Leaf, Node]


def _order_key(t: Cotree):
    leaves = t.leaves
    return len(leaves), leaves


def _find_p4(g: Digraph) -> Optional[tuple[int, ...]]:
    for q in combinations(range(g.n), 4):
        if induces_p4_in_symmetric(g, q):
            return q
    return None


def build_cotree(g: Digraph) -> Optional[Cotree]:
    """Canonical cotree of the symmetric digraph ``g``; None for the empty graph.

    Children are ordered by (size, sorted leaves). Labels alternate because a
    component of a disconnected graph is connected and a co-component of a
    disconnected complement has a connected complement.
    """
    if not is_symmetric(g):
        raise NotSymmetric("build_cotree needs a symmetric digraph")
    if g.n == 0:
        return None
    adj = list(g.out)
    full = g.full_mask
    co_adj = [full & ~adj[v] & ~(1 << v) for v in range(g.n)]

    def build(mask: int) -> Cotree:
        if mask & (mask - 1) == 0:
            return Leaf(mask.bit_length() - 1)
        comps = mask_components(adj, mask)
        label = 0
        if len(comps) == 1:
            comps = mask_components(co_adj, mask)
            label = 1
            if len(comps) == 1:
                raise NotCograph(_find_p4(g))
        kids = [build(sum(1 << v for v in c)) for c in comps]
        return Node(label, tuple(sorted(kids, key=_order_key)))

    return build(full)


def _check(t, seen: list[int], parent_label: Optional[int]) -> None:
    if isinstance(t, Leaf):
        if not isinstance(t.vertex, int) or t.vertex < 0:
            raise MalformedCotree(f"bad leaf {t.vertex!r}")
        seen.append(t.vertex)
        return
    if not isinstance(t, Node):
        raise MalformedCotree(f"not a cotree node: {t!r}")
    if t.label not in (0, 1):
        raise MalformedCotree(f"bad label {t.label!r}")
    if len(t.children) < 2:
        raise MalformedCotree("internal node with fewer than two children")
    if parent_label == t.label:
        raise MalformedCotree("labels do not alternate")
    for c in t.children:
        _check(c, seen, t.label)


def cotree_to_graph(t: Cotree) -> Digraph:
    """Symmetric digraph in which u, v are adjacent iff their lowest common ancestor is a 1-node."""
    if t is None:
        raise MalformedCotree("empty cotree")
    seen: list[int] = []
    _check(t, seen, None)
    n = len(seen)
    if sorted(seen) != list(range(n)):
        raise MalformedCotree("leaves must be exactly 0..n-1")
    adj = [0] * n

    def walk(node: Cotree) -> int:
        if isinstance(node, Leaf):
            return 1 << node.vertex
        masks = [walk(c) for c in node.children]
        if node.label == 1:
            total = sum(masks)
            for m in masks:
                for v in bits(m):
                    adj[v] |= total & ~m
        return sum(masks)

    walk(t)
    return Digraph(n, tuple(adj))


def is_alternating(t: Cotree) -> bool:
    try:
        _check(t, [], None)
    except MalformedCotree:
        return False
    return True


_TOKEN = re.compile(r"\s*(v\d+|[01]\(|\))")


def parse_cotree(text: str) -> Cotree:
    """Inverse of ``str`` on cotrees."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise MalformedCotree(f"unexpected input at offset {pos}")
        tokens.append(m.group(1))
        pos = m.end()

    def node(i: int):
        if i >= len(tokens):
            raise MalformedCotree("unexpected end of input")
        tok = tokens[i]
        if tok.startswith("v"):
            return Leaf(int(tok[1:])), i + 1
        if tok == ")":
            raise MalformedCotree("unexpected ')'")
        kids = []
        i += 1
        while i < len(tokens) and tokens[i] != ")":
            kid, i = node(i)
            kids.append(kid)
        if i >= len(tokens):
            raise MalformedCotree("missing ')'")
        return Node(int(tok[0]), tuple(kids)), i + 1

    tree, end = node(0)
    if end != len(tokens):
        raise MalformedCotree("trailing input")
    return tree
