"""Guaranteed error correction of bit-flipping decoders on left-regular LDPC codes.

The package computes how many worst-case errors a (gamma, rho)-regular LDPC
code of known girth is guaranteed to correct under parallel or serial
bit-flipping, brackets the size of the smallest trapping sets, and verifies
both constructively: exhaustive expansion and decoding sweeps on one side,
an explicit cage-based trapping gadget on the other.
"""

__version__ = "0.1.0"

from .alist import AlistError, parse_alist, read_alist, to_alist_string, write_alist
from .analysis import (
    ExpansionCertificate,
    LemmaCheck,
    SubsetReport,
    TrappingSearchResult,
    check_lemmas,
    classify_subset,
    expansion,
    is_potential_trapping_set,
    is_trapping_set,
    search_min_trapping_set,
    trapping_matches_decoder,
    verify_main_theorem,
)
from .bounds import (
    BoundReport,
    TrappingSetSizeBound,
    bound_report,
    brute_force_f,
    cage_upper_bound,
    guaranteed_correction_count,
    max_edges_girth_bound,
    moore_bound,
    theorem_hypothesis_ok,
    trapping_set_size_bound,
)
from .cages import (
    CageCertificate,
    CageEntry,
    Gadget,
    UnknownCage,
    build_gadget,
    cage,
    embed_gadget,
    verify_cage_candidate,
)
from .codegen import GenerationError, generate_code
from .decoder import (
    DecodeResult,
    DecodeStatus,
    ErrorPattern,
    SweepResult,
    decode_parallel,
    decode_serial,
    is_fixed_point,
    parallel_round,
    sweep_error_patterns,
    unsatisfied_checks,
)
from .graphs import (
    CheckPartition,
    Graph,
    GraphError,
    TannerGraph,
    build_tanner_graph,
    complete_graph,
    cycle_graph,
    girth,
    induced_check_partition,
)
from .transforms import (
    InverseIncidenceResult,
    augmented_graph,
    edge_vertex_incidence,
    inverse_edge_vertex_incidence,
    reduced_graph,
)
