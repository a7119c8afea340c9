"""b-colorings and dominant colors of regular graphs."""

from .coloring import (
    Coloring,
    DominanceProfile,
    bad_edges,
    collapse_non_dominant,
    dominance_profile,
    is_b_coloring,
    is_dominant_vertex,
    is_proper,
)
from .errors import GenerationError, InfeasibleError, InputError, ParseError
from .exact import (
    ExactResult,
    SearchBudget,
    b_number_exact,
    brute_force_b,
    brute_force_f,
    chromatic_number,
    f_number_exact,
)
from .generators import GeneratorSpec, named_graph, projective_incidence, random_regular
from .graph import Graph

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "DominanceProfile",
    "ExactResult",
    "GenerationError",
    "GeneratorSpec",
    "Graph",
    "InfeasibleError",
    "InputError",
    "ParseError",
    "SearchBudget",
    "b_number_exact",
    "bad_edges",
    "brute_force_b",
    "brute_force_f",
    "chromatic_number",
    "collapse_non_dominant",
    "dominance_profile",
    "f_number_exact",
    "is_b_coloring",
    "is_dominant_vertex",
    "is_proper",
    "named_graph",
    "projective_incidence",
    "random_regular",
]
