"""Whitehead graphs, Whitehead moves and the separability decision."""

from src.whitehead.decision import (
    DecisionResult,
    OmissionWitness,
    SeparabilityWitness,
    Verdict,
    cut_vertex_move,
    decide_separable,
    omission_search,
    omits_generator,
)
from src.whitehead.graph import (
    WhiteheadGraph,
    build_graph,
    cut_vertices,
    graph_from_edges,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    is_connected,
)
from src.whitehead.moves import (
    WhiteheadMove,
    apply_move,
    enumerate_moves,
    enumerate_type_one,
    length_change,
    minimize,
    parse_move,
    total_length,
)
from src.whitehead.trace import MoveRecord, MoveTrace, RollbackResult

__all__ = [
    "DecisionResult",
    "MoveRecord",
    "MoveTrace",
    "OmissionWitness",
    "RollbackResult",
    "SeparabilityWitness",
    "Verdict",
    "WhiteheadGraph",
    "WhiteheadMove",
    "apply_move",
    "build_graph",
    "cut_vertex_move",
    "cut_vertices",
    "decide_separable",
    "enumerate_moves",
    "enumerate_type_one",
    "graph_from_edges",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "is_connected",
    "length_change",
    "minimize",
    "omission_search",
    "omits_generator",
    "parse_move",
    "total_length",
]
