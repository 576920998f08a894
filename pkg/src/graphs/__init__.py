"""Graph representations, predicates and the graph6 codec."""
from .core import (
    BipartiteGraph,
    Graph,
    GraphBuilder,
    Part,
    PathView,
    bipartition_check,
    component_mask,
    is_biconnected,
    is_connected,
    iter_bits,
    min_degree,
)
from .graph6 import decode_graph6, encode_graph6, read_graph, to_graph6_str, write_graph

__all__ = [
    "BipartiteGraph",
    "Graph",
    "GraphBuilder",
    "Part",
    "PathView",
    "bipartition_check",
    "component_mask",
    "is_biconnected",
    "is_connected",
    "iter_bits",
    "min_degree",
    "decode_graph6",
    "encode_graph6",
    "read_graph",
    "to_graph6_str",
    "write_graph",
]
