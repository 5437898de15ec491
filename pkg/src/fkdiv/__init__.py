"""Fair division of conflicting items: split a subset of items among k
agents so that no two items sharing a conflict edge go to the same agent,
maximizing the profit of the worst-off agent.

Exact solvers cover cocomparability graphs, chordal graphs, biconvex
bipartite graphs, and anything with a small tree decomposition; a rounding
layer turns any of them into a (1+eps)-approximation with polynomially many
states. Small instances can always fall back to brute force.
"""

from .biconvex import solve_biconvex
from .cocomp import solve_cocomparability
from .decomposition import (
    TreeDecomposition,
    chordal_peo,
    clique_tree,
    is_chordal,
    make_nice,
    minfill_decomposition,
    verify_decomposition,
)
from .errors import (
    BudgetExceededError,
    DecompositionError,
    EmptySetError,
    FkdivError,
    NoApplicableAlgorithmError,
    NotChordalError,
    NotCocomparabilityError,
    OrderingNotBiconvexError,
    ParseError,
    StructureMismatchError,
)
from .fptas import FptasResult, paired_rounding_check, parse_epsilon, solve_approx
from .graphs import Graph, Instance
from .instance_io import (
    ParsedInstance,
    build_report,
    parse_instance,
    serialize_instance,
    validate_report,
)
from .oracle import brute_force, decide_satisfaction_at_least, max_weight_independent_set
from .orientation import is_cocomparability, transitive_orientation
from .profiles import ProfileSet, ProfileSpace, profile_of, satisfaction
from .treedp import solve_chordal, solve_on_decomposition, solve_treewidth

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DecompositionError",
    "EmptySetError",
    "FkdivError",
    "FptasResult",
    "Graph",
    "Instance",
    "NoApplicableAlgorithmError",
    "NotChordalError",
    "NotCocomparabilityError",
    "OrderingNotBiconvexError",
    "ParseError",
    "ParsedInstance",
    "ProfileSet",
    "ProfileSpace",
    "StructureMismatchError",
    "TreeDecomposition",
    "brute_force",
    "build_report",
    "chordal_peo",
    "clique_tree",
    "decide_satisfaction_at_least",
    "is_chordal",
    "is_cocomparability",
    "make_nice",
    "max_weight_independent_set",
    "minfill_decomposition",
    "paired_rounding_check",
    "parse_epsilon",
    "parse_instance",
    "profile_of",
    "satisfaction",
    "serialize_instance",
    "solve_approx",
    "solve_biconvex",
    "solve_chordal",
    "solve_cocomparability",
    "solve_on_decomposition",
    "solve_treewidth",
    "transitive_orientation",
    "validate_report",
    "verify_decomposition",
    "__version__",
]
