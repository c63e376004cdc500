"""Maximum clique by Grover search over an explicit reversible oracle, with a
DNA tube-algebra model and a brute-force reference for cross-checking."""

from .circuit import GateCounts, RegisterLayout, build_layout, build_oracle, count_gates
from .graph import Graph, brute_force_max_clique, complement, is_clique, parse_dimacs
from .simulator import GroverConfig, grover_search
from .solver import SolveReport, cross_validate, solve_molecular, solve_quantum

__all__ = [
    "GateCounts",
    "Graph",
    "GroverConfig",
    "RegisterLayout",
    "SolveReport",
    "brute_force_max_clique",
    "build_layout",
    "build_oracle",
    "complement",
    "count_gates",
    "cross_validate",
    "grover_search",
    "is_clique",
    "parse_dimacs",
    "solve_molecular",
    "solve_quantum",
]
