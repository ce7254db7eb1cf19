"""Exact domination, power domination and zero forcing on graph products."""

from .errors import (
    DisconnectedInputError,
    ExprParseError,
    GraphFormatError,
    InvalidParameterError,
    InvalidVertexError,
    NoFeasibleSetError,
    PowdomError,
    SizeLimitError,
)
from .families import complete, complete_bipartite, complete_multipartite, cycle, empty, fan, path, star, wheel
from .graph import (
    Graph,
    ProductVertexMap,
    closed_neighborhood,
    induced_subgraph,
    is_bipartite,
    is_connected,
    open_neighborhood,
    universal_vertices,
)
from .monitoring import (
    PropagationTrace,
    is_connected_power_dominating,
    is_connected_zero_forcing,
    is_power_dominating,
    is_zero_forcing,
    monitored_set,
    zero_forcing_closure,
)
from .products import cartesian, g_fiber, h_fiber, lexicographic, tensor
from .solvers import CapExceeded, InvariantKind, SolveResult, all_minimum_witnesses, feasible, min_invariant

__version__ = "0.1.0"
