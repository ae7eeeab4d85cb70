"""Algebraic shifting of uniform hypergraphs and matroidality of its preimages."""

from .combinatorics import (
    HypergraphFormatError,
    SimplicialComplex,
    UniformHypergraph,
    VertexPermutation,
    apply_permutation,
    betti_homology,
    betti_shifted,
    cone,
    cone_complex,
    downward_closure,
    dominance_leq,
    enumerate_k_subsets,
    enumerate_shifted,
    f_vector,
    format_hypergraph,
    is_initial_lex_segment,
    is_shifted,
    lex_compare,
    lex_segment,
    max_lex,
    parse_hypergraph,
)
from .linalg import DEFAULT_PRIME, FieldConfig, NoConsensusError
from .exterior import (
    ConsensusShifter,
    GenericMatrix,
    ShiftReport,
    compound_minor,
    exterior_shift_complex,
    exterior_shift_uniform,
    shift_consensus,
)
from .symmetric import (
    GenericLinearForms,
    SymmetricShifter,
    gin_degree,
    symmetric_shift_complex,
    symmetric_shift_uniform,
    unsquare,
)

__version__ = "0.1.0"
