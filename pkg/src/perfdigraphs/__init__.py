"""Perfect digraphs: exact solvers, perfection checkers, P4C signatures and F-free structure."""

from .core import (
    Digraph,
    build_digraph,
    complement,
    induced_subdigraph,
    is_acyclic,
    oriented_part,
    reverse,
    symmetric_complement,
    symmetric_components,
    symmetric_part,
)
from .cotree import build_cotree, cotree_to_graph
from .digraph_file import parse_digraph, render_digraph
from .gen import GenSpec, PairMode, named_instance, p4c_pair, random_digraph, random_f_free
from .patterns import (
    PatternSignature,
    are_p4c_isomorphic,
    classify_triple,
    find_induced_directed_cycle,
    induces_p4_in_symmetric,
    is_f_free,
    p4c_signature,
)
from .perfection import is_perfect_bruteforce, is_perfect_structural, is_perfect_undirected
from .solvers import clique_number, dichromatic_number, is_proper_coloring
from .structure import check_f_free_structure, min_path_cover

__version__ = "0.1.0"
