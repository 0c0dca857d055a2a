"""Eccentricity matrices of graphs, their spectra, and closed-form spectra of join-type operations."""

from ._backend import NAME as BACKEND
from .errors import (
    ConnectivityError,
    ContractError,
    EccxError,
    HypothesisError,
    NumericError,
    ParameterError,
    ParseError,
    PartitionError,
    StructureError,
)
from .graph import (
    Graph,
    complement,
    disjoint_union,
    family,
    incidence_matrix,
    is_connected,
    join,
    line_graph,
    regularity,
    subdivision,
    subdivision_edge_join,
    subdivision_vertex_join,
)
from .formats import parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6
from .linalg import (
    Partition,
    Spectrum,
    energy,
    group,
    is_integral,
    quotient,
    small_eigenvalues,
    spectra_equal,
    spectrum,
    sym_eigenvalues,
)

__version__ = "0.1.0"
