"""Duplicate-free enumeration of combinatorial solution spaces.

Five generic schemes turn decision-style search into pull-based solution
streams with bounded delay, instantiated on six problems: feedback vertex
sets in tournaments, center strings, integer points of boxed linear
systems, simple k-vertex paths, vertex covers, and minimum-weight Steiner
trees.  Brute-force oracles and a delay-measurement harness back every
enumerator.
"""

from .core import (
    GrowContractViolation,
    MeasureViolation,
    MembershipContradiction,
    SolutionStream,
    run_bounded_tree,
    run_flashlight,
    run_iterative_compression,
    run_solution_search,
    run_union,
)
from .closest_string import enumerate_center_strings
from .fvst import enumerate_fvst
from .harness import DelayReport, enumerate_solutions, equivalence_suite, generate, measure
from .ilp import enumerate_ilp
from .instances import (
    IlpSystem,
    InvariantError,
    ParseError,
    StringSet,
    Tournament,
    UnboundedInstance,
    UndirectedGraph,
    canonicalize,
    parse_instance,
    write_instance,
)
from .longest_path import build_hash_family, enumerate_longest_paths
from .steiner import enumerate_steiner_trees
from .vertex_cover import enumerate_vertex_covers

__version__ = "0.1.0"

__all__ = [
    "DelayReport",
    "GrowContractViolation",
    "IlpSystem",
    "InvariantError",
    "MeasureViolation",
    "MembershipContradiction",
    "ParseError",
    "SolutionStream",
    "StringSet",
    "Tournament",
    "UnboundedInstance",
    "UndirectedGraph",
    "build_hash_family",
    "canonicalize",
    "enumerate_center_strings",
    "enumerate_fvst",
    "enumerate_ilp",
    "enumerate_longest_paths",
    "enumerate_solutions",
    "enumerate_steiner_trees",
    "enumerate_vertex_covers",
    "equivalence_suite",
    "generate",
    "measure",
    "parse_instance",
    "run_bounded_tree",
    "run_flashlight",
    "run_iterative_compression",
    "run_solution_search",
    "run_union",
    "write_instance",
]
