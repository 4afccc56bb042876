"""Walk-count graph extension as an isomorphism prefilter."""

from .compatibility import (
    Feasibility,
    ForbiddenMatrix,
    VertexSignature,
    build_forbidden,
    compatible,
    feasibility,
    iter_forbidden,
    vertex_signature,
)
from .errors import FormatError, WalkisoError
from .extension import (
    ExtendedGraph,
    PathCountMatrix,
    extend_sequence,
    extend_step,
    extended_graph,
)
from .families import FamilySpec, generate, parse_family
from .graph import Graph, Permutation, permute, validate
from .solver import SolveConfig, SolveVerdict, Status, brute_force, solve, verify

__version__ = "0.1.0"

__all__ = [
    "ExtendedGraph", "FamilySpec", "FormatError", "Feasibility", "ForbiddenMatrix", "Graph",
    "PathCountMatrix", "Permutation", "SolveConfig", "SolveVerdict", "Status",
    "VertexSignature", "brute_force", "build_forbidden", "compatible",
    "extend_sequence", "extend_step", "extended_graph", "feasibility",
    "generate", "iter_forbidden", "parse_family", "permute", "solve",
    "WalkisoError", "validate", "verify", "vertex_signature",
]
