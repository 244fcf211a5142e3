"""Line-oriented digraph files.

::

    # comments run to end of line; blank lines are ignored
    n 3
    arc 0 1
    arc 1 2
    arc 2 0

A digon is written as two ``arc`` lines. Rendering emits no comments and
sorts the arcs, which is the canonical form.
"""

from __future__ import annotations

import re

from .core import Digraph
from .errors import ParseError

_INT = re.compile(r"\d+\Z")


def parse_digraph(text: str) -> Digraph:
    n = None
    out: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if not line.isascii():
            raise ParseError(lineno, "non-ASCII input")
        tok = line.split()
        if n is None:
            if len(tok) != 2 or tok[0] != "n" or not _INT.match(tok[1]):
                raise ParseError(lineno, "missing header 'n <count>'")
            n = int(tok[1])
            out = [0] * n
            continue
        if tok[0] != "arc" or len(tok) != 3 or not (_INT.match(tok[1]) and _INT.match(tok[2])):
            raise ParseError(lineno, f"malformed line {line.strip()!r}")
        u, v = int(tok[1]), int(tok[2])
        if u >= n or v >= n:
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"loop at {u}")
        if out[u] >> v & 1:
            raise ParseError(lineno, f"duplicate arc {u} {v}")
        out[u] |= 1 << v
    if n is None:
        raise ParseError(0, "missing header 'n <count>'")
    return Digraph(n, tuple(out))


def render_digraph(d: Digraph) -> str:
    lines = [f"n {d.n}"] + [f"arc {u} {v}" for u, v in d.arcs()]
    return "\n".join(lines) + "\n"


def read_digraph(path) -> Digraph:
    with open(path, encoding="ascii", errors="replace") as fh:
        return parse_digraph(fh.read())
