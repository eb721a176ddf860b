"""Certified long cycles in 2-connected graphs.

A 2-connected graph with minimum degree ``delta`` is Hamiltonian, has a cycle of
length at least ``2 * delta + 1``, or is a join of a ``delta``-vertex graph with a
larger edgeless graph. :func:`classify` returns which, with a certificate that
:func:`verify_verdict` re-checks from adjacency alone.
"""

from .classifier import (
    Hamiltonian,
    JoinStructure,
    LongCycle,
    Verdict,
    check_corollary,
    classify,
    classify_via_proof,
    improve_or_structure,
    recognize_join,
    verify_verdict,
)
from .connectivity import cut_vertices, is_connected, is_two_connected, two_fan
from .dirac import dirac_cycle
from .errors import GraphError, TheoremViolation
from .generators import enumerate_labeled_graphs, gen_join_family
from .graph import Cycle, Graph, JoinCertificate, Path, from_edge_list, min_degree
from .graph6 import encode_graph6, parse_graph6
from .oracles import circumference, hamilton_cycle_exact, longest_cycle_exact

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "Graph",
    "GraphError",
    "Hamiltonian",
    "JoinCertificate",
    "JoinStructure",
    "LongCycle",
    "Path",
    "TheoremViolation",
    "Verdict",
    "check_corollary",
    "circumference",
    "classify",
    "classify_via_proof",
    "cut_vertices",
    "dirac_cycle",
    "encode_graph6",
    "enumerate_labeled_graphs",
    "from_edge_list",
    "gen_join_family",
    "hamilton_cycle_exact",
    "improve_or_structure",
    "is_connected",
    "is_two_connected",
    "longest_cycle_exact",
    "min_degree",
    "parse_graph6",
    "recognize_join",
    "two_fan",
    "verify_verdict",
]
