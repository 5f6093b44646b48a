"""Exact spectral tools and controllability tests for threshold graphs."""

from .antiregular import (
    CombinedGraph,
    DisconnectedGraphError,
    antiregular,
    antiregular_string,
    certify_distinct_spectrum,
    combine,
    corollary2_check,
    graph_stats,
    interlacing_check,
    theorem6_check,
)
from .control import (
    ControllabilityReport,
    ControlMatrix,
    LocalCheckingMatrix,
    check_all,
    design_binary_B,
    design_terminal_B,
    general_rank_floor_check,
    kalman_check,
    kalman_rank,
    local_checking_matrix,
    local_control_matrix,
    min_controllers,
    pbh_check,
    theorem4_check,
)
from .exactla import char_poly, eig_sym_float, is_squarefree, mat_mul, rank_exact
from .spectra import EigenBasis, eigvecs_algorithm1, lemma1_block_report, swap_entries_eigvec, verify_eigenbasis
from .threshold import (
    DegreeSequence,
    NotThresholdError,
    Succession,
    ThresholdGraph,
    conjugate,
    conjugate_inequalities_hold,
    essential_substrings,
    format_string,
    graph_from_degrees,
    graph_from_string,
    is_graphical,
    is_threshold,
    string_from_degrees,
    successions,
    trace_of,
)

__version__ = "0.1.0"
