"""Seeded random digraphs, named instances, and P4C-isomorphic pairs."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional

from .core import Digraph, build_digraph, complement, ordered_pairs
from .errors import BadSize, InvalidProbabilities, UnknownName
from .patterns import are_p4c_isomorphic, is_f_free, local_signature

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """SplitMix64 finaliser (Steele, Lea and Flood constants)."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, *keys: int) -> int:
    """Mix integer keys into a 64-bit seed; order of keys matters."""
    h = splitmix64(seed & MASK64)
    for k in keys:
        h = splitmix64(h ^ (k & MASK64))
    return h


def _unit(seed: int, *keys: int) -> float:
    return (derive_seed(seed, *keys) >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class GenSpec:
    n: int
    p_sym: float
    p_asym: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise BadSize(f"negative vertex count {self.n}")
        if self.p_sym < 0 or self.p_asym < 0 or self.p_sym + self.p_asym > 1:
            raise InvalidProbabilities(f"p_sym={self.p_sym}, p_asym={self.p_asym}")


def random_digraph(spec: GenSpec) -> Digraph:
    """Independent per-pair draws: digon w.p. p_sym, one arc (fair direction) w.p. p_asym.

    Each unordered pair {u, v}, u < v, gets its randomness from (seed, pair index),
    so the result does not depend on iteration order.
    """
    n = spec.n
    out = [0] * n
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            r = _unit(spec.seed, idx, 0)
            if r < spec.p_sym:
                out[u] |= 1 << v
                out[v] |= 1 << u
            elif r < spec.p_sym + spec.p_asym:
                if _unit(spec.seed, idx, 1) < 0.5:
                    out[u] |= 1 << v
                else:
                    out[v] |= 1 << u
            idx += 1
    return Digraph(n, tuple(out))


def _cycle(k: int, symmetric: bool) -> Digraph:
    arcs = [(i, (i + 1) % k) for i in range(k)]
    if symmetric:
        arcs += [(v, u) for u, v in arcs]
    return build_digraph(k, arcs)


def _path(k: int) -> Digraph:
    arcs = [(i, i + 1) for i in range(k - 1)]
    return build_digraph(k, arcs + [(v, u) for u, v in arcs])


_FIXED = {
    "sym_p4": lambda: _path(4),
    "c3": lambda: build_digraph(3, [(0, 1), (1, 2), (2, 0)]),
    "p3": lambda: build_digraph(3, [(0, 1), (1, 2)]),
    "p3_plus": lambda: build_digraph(3, [(0, 1), (1, 0), (1, 2)]),
    "p3_minus": lambda: build_digraph(3, [(0, 1), (1, 2), (2, 1)]),
    "c4_complement": lambda: complement(_cycle(4, False)),
}

# name -> (least k, builder)
_SIZED = {
    "dicycle": (3, lambda k: _cycle(k, False)),
    "sym_cycle": (3, lambda k: _cycle(k, True)),
    "sym_complete": (0, lambda k: build_digraph(k, [(u, v) for u in range(k) for v in range(k) if u != v])),
    "sym_path": (0, _path),
    "arcless": (0, lambda k: build_digraph(k, [])),
}

NAMED = tuple(sorted(_FIXED) + sorted(_SIZED))


def named_instance(name: str, k: Optional[int] = None) -> Digraph:
    if name in _FIXED:
        d = _FIXED[name]()
        if k is not None and k != d.n:
            raise BadSize(f"{name} has fixed size {d.n}")
        return d
    if name in _SIZED:
        least, make = _SIZED[name]
        if k is None or k < least:
            raise BadSize(f"{name} needs k >= {least}")
        return make(k)
    raise UnknownName(name)


class PairMode(enum.Enum):
    REVERSAL = "reversal"
    MUTATION = "mutation"


def toggle(d: Digraph, u: int, v: int) -> Digraph:
    out = list(d.out)
    out[u] ^= 1 << v
    return Digraph(d.n, tuple(out))


def p4c_pair(d: Digraph, mode: PairMode, budget: int = 1, seed: int = 0) -> Optional[tuple[Digraph, Digraph]]:
    """A P4C-isomorphic partner for ``d``.

    REVERSAL always succeeds with the converse digraph. MUTATION proposes
    ``budget`` uniform ordered-pair arc toggles and keeps those that leave the
    signature unchanged; it returns None when the end result equals ``d``.
    """
    if mode is PairMode.REVERSAL:
        e = Digraph(d.n, d.inn)
    else:
        if budget < 1:
            raise ValueError("budget must be >= 1")
        rng = random.Random(seed)
        pairs = ordered_pairs(d.n)
        e = d
        if pairs:
            for _ in range(budget):
                u, v = rng.choice(pairs)
                cand = toggle(e, u, v)
                if local_signature(cand, u, v) == local_signature(e, u, v):
                    e = cand
        if e == d:
            return None
    if not are_p4c_isomorphic(d, e):
        raise AssertionError("generated pair is not P4C-isomorphic")
    return d, e


def random_f_free(
    n: int, seed: int, max_attempts: int, p_sym: float = 0.3, p_asym: float = 0.2
) -> Optional[Digraph]:
    """Rejection-sample ``random_digraph`` until an F-free digraph appears."""
    if max_attempts < 1:
        raise ValueError("max_attempts must be >= 1")
    for attempt in range(max_attempts):
        d = random_digraph(GenSpec(n, p_sym, p_asym, derive_seed(seed, attempt)))
        if is_f_free(d):
            return d
    return None
