"""Algorithms on graphs of bounded twin-width, driven by a contraction sequence."""

from .coloring import EHPair, color_kt_free, color_triangle_free, eh_pair
from .dominating import k_dominating_set, k_r_dominating_set
from .errors import (
    ContractViolation,
    InputError,
    InvalidContractionError,
    InvariantError,
    ResourceError,
    SequenceValidationError,
    SizeLimitError,
    StaleIdError,
    TwinWidthError,
)
from .graph import Graph
from .ibp import IntervalBicliquePartition, apsp, build_ibp, clique_ibp, diameter, relabel_by_union_tree, sssp
from .independent import (
    DPStats,
    k_clique,
    k_independent_set,
    max_independent_set,
    r_scattered_set,
    weighted_k_independent_set,
)
from .sequence import (
    ContractionSequence,
    OrderedUnionTree,
    VertexPartition,
    build_union_tree,
    complement_sequence,
    replay,
    trigraph_at,
    verify_sequence,
)
from .stabbing import StabbingStructure
from .subgraph import induced_subgraph_isomorphism, subgraph_isomorphism
from .toolkit import (
    SequenceSearchConfig,
    SubstitutionSpec,
    cograph_sequence,
    exact_twin_width,
    greedy_sequence,
    recursive_power,
    substitute,
    unit_interval_sequence,
)
from .trigraph import ContractionRecord, Trigraph

__version__ = "0.1.0"
