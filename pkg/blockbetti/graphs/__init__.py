"""
Graphs, block structure, I/O and generators
"""

from blockbetti.graphs.blocks import (
    BlockStructure,
    Decomposition,
    LeafSurgery,
    block_structure,
    decompose,
    glue,
    is_block_graph,
    leaf_blocks,
    leaf_surgery,
    split_at,
    splitting_vertices,
)
from blockbetti.graphs.generator import (
    enumerate_block_graphs,
    generate_block_graphs,
    named_graph,
    random_block_graph,
)
from blockbetti.graphs.graph import (
    Graph,
    connected_components,
    graph_hash,
    induced_subgraph,
    relabel,
    restrict_to_non_leaves,
    same_edges,
)
from blockbetti.graphs.io import parse_graph, parse_graph6, read_graph, read_graphs, to_graph6

__all__ = [
    "Graph",
    "BlockStructure",
    "Decomposition",
    "LeafSurgery",
    "block_structure",
    "is_block_graph",
    "decompose",
    "glue",
    "leaf_blocks",
    "leaf_surgery",
    "split_at",
    "splitting_vertices",
    "induced_subgraph",
    "restrict_to_non_leaves",
    "connected_components",
    "relabel",
    "graph_hash",
    "same_edges",
    "parse_graph",
    "parse_graph6",
    "read_graph",
    "read_graphs",
    "to_graph6",
    "random_block_graph",
    "generate_block_graphs",
    "enumerate_block_graphs",
    "named_graph",
]
