"""Exception hierarchy shared by all modules."""


class DigraphError(ValueError):
    """Base class for every error raised by this package."""


class LoopArc(DigraphError):
    pass


class OutOfRange(DigraphError):
    pass


class NotSymmetric(DigraphError):
    pass


class BadSubsetSize(DigraphError):
    pass


class VertexCountMismatch(DigraphError):
    pass


class PartialAssignment(DigraphError):
    pass


class NotCograph(DigraphError):
    """Raised by cotree construction; ``witness`` is an induced P4 (sorted 4-tuple)."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"not a cograph: {{{', '.join(map(str, self.witness))}}} induces P4")


class MalformedCotree(DigraphError):
    pass


class NotFFree(DigraphError):
    """``site`` is ``(kind, vertices, midpoint)``; midpoint is None for C3 and P4 sites."""

    def __init__(self, site):
        self.site = site
        kind, verts, mid = site
        where = f" midpoint {mid}" if mid is not None else ""
        super().__init__(f"not F-free: {kind} on {list(verts)}{where}")


class StructureViolation(DigraphError):
    """Cross-component arcs that do not form a complete multipartite orientation.

    ``kind`` is ``"partial"`` when two components are joined by some but not all
    cross pairs (or by a digon), and ``"nontransitive"`` when the pairwise joins
    are complete but "no arc between" is not an equivalence on components.
    """

    def __init__(self, components, pair, reason, kind="partial"):
        self.components = components
        self.pair = pair
        self.reason = reason
        self.kind = kind
        super().__init__(f"components {components}: {reason} at {pair}")


class InvalidProbabilities(DigraphError):
    pass


class UnknownName(DigraphError):
    pass


class BadSize(DigraphError):
    pass


class ParseError(DigraphError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
