"""Digraph algorithms around two-block cycle subdivisions.

A two-block cycle consists of two internally disjoint directed paths with
common endpoints; this package searches digraphs for subdivisions of such
cycles, certifies generated families that avoid them, and probes the
structure (cut-vertex windows and reachability strata) that explains why
large girth forces them to appear.
"""

from .digraph import (
    Arc,
    Condensation,
    DegreeSummary,
    Digraph,
    build,
    condensation,
    degrees,
    delete,
    digraph_sha,
    parse_digraph,
    serialize,
    to_dot,
)
from .metrics import (
    INFINITE,
    Cycle,
    Path,
    distance,
    enumerate_cycles,
    girth,
    is_isometric,
    max_rho_isometric_cycle,
    rho,
    segment,
    shortest_cycle,
    shortest_path,
)
from .connectivity import (
    CutOrderResult,
    CutWindow,
    check_cut_order,
    cut_vertices_ordered,
    cut_window,
    internally_disjoint_paths,
    special_arc,
)
from .subdivision import (
    DEFAULT_BUDGET,
    Budget,
    SubdivisionWitness,
    brute_oracle,
    exists_path_min_length,
    find_subdivision,
    girth_shortcut,
    verify_witness,
)
from .generators import (
    all_position_pairs,
    complete_biorientation,
    directed_cycle,
    mutate,
    random_girth_constrained,
    ring_block,
    ring_of_cycles,
    theta,
)
from .probe import (
    ClaimReport,
    Strata,
    check_no_cross_arcs,
    check_strata_cycle_footprint,
    check_strata_overlaps,
    probe_claims,
    reachability_strata,
    window_cycle_bound,
)
from .harness import (
    SearchReport,
    TrialRecord,
    explore_gap,
    verify_construction,
    verify_theorem,
)
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
