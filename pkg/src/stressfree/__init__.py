"""Generic stress-freeness of graphs via rigidity, shifting and minors."""

from __future__ import annotations

from .certify import (
    Certificate,
    CertificateFormatError,
    CertifyOutcome,
    ReplayReport,
    SurfaceReport,
    certify,
    heawood_number,
    replay_certificate,
    surface_analysis,
    surface_obstruction,
)
from .ff import PRIME, FieldMatrix, GenericConfiguration, generic_configuration, greedy_independent_columns, rank
from .graph import (
    CliqueSeparation,
    EdgeContractionRecord,
    Graph,
    GraphError,
    complete_graph,
    contract_edge,
    find_clique_separator,
    parse_edge_list,
    read_edge_list,
    to_edge_list,
)
from .minors import (
    MinorWitness,
    SearchBudgetExceeded,
    has_clique_minor,
    has_minor,
    is_linkless,
    linkless_obstruction,
    mader_bound,
    petersen_family,
    verify_minor_witness,
)
from .rigidity import DEFAULT_SEED, DEFAULT_TRIALS, RigidityReport, analyze_rigidity, rigidity_matrix
from .shifting import ShiftedGraph, chromatic_of_shifted, exterior_shift, is_d_acyclic, shift, symmetric_shift

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
