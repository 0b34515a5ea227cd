from .core import Graph, Edge, EdgeRef, EdgeLabelMap, from_edge_list, from_labeled_edges, contract
from .formats import (
    from_graph6,
    to_graph6,
    read_graph6_file,
    parse_edge_list,
    read_edge_list,
    format_edge_list,
)
from .stats import triangles_through, triangle_count, four_cycles_through, c4
from .catalog import generate, atlas_graphs, catalog, from_networkx, to_networkx, is_chordal

__all__ = [
    "Graph",
    "Edge",
    "EdgeRef",
    "EdgeLabelMap",
    "from_edge_list",
    "from_labeled_edges",
    "contract",
    "from_graph6",
    "to_graph6",
    "read_graph6_file",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "triangles_through",
    "triangle_count",
    "four_cycles_through",
    "c4",
    "generate",
    "atlas_graphs",
    "catalog",
    "from_networkx",
    "to_networkx",
    "is_chordal",
]
