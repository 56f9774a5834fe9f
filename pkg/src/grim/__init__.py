"""Grim workbench: exact play, value sequences, theorem verification, and
random-graph analysis for the vertex-deletion game."""

from .canon import CanonCapError, canonical_form, canonical_graph
from .engine import (
    WeightedGraph,
    blowup,
    follower,
    legal_moves,
    normalize,
    weighted_follower,
    weighted_moves,
    weighted_outcome,
)
from .families import make_family, parse_weighted_spec
from .graph6 import emit_graph6, parse_graph6
from .graphs import (
    Graph,
    GraphError,
    cartesian_product,
    complete_graph,
    complete_multipartite,
    components,
    cycle_graph,
    join,
    path_graph,
    star_graph,
    union,
    wheel_graph,
)
from .octal import (
    KNOWN_ZEROS,
    SGSequence,
    load_sequence,
    octal6_sequence,
    path_equivalence_check,
    save_sequence,
    zeros,
)
from .solver import (
    SolverCapError,
    best_move,
    outcome,
    path_sg,
    sg_value,
    winning_moves,
)
from .theory import (
    Prediction,
    classify_family,
    classify_multipartite,
    enumerate_graphs,
    find_near_involution,
    find_pairing_involution,
    verify,
)
from .randgraphs import (
    crossings,
    exact_histogram,
    monte_carlo,
    p0_bound,
    w1,
    w2,
)

__version__ = "0.1.0"
