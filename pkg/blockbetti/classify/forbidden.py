"""
The four forbidden graphs T0..T3 and induced-subgraph search for them
"""

from typing import Dict, List, Optional

from networkx.algorithms.isomorphism import GraphMatcher
from pydantic import BaseModel

from blockbetti.graphs.graph import Graph

# Case tag attached to each forbidden graph, in id order.
CASE_TAGS: Dict[str, str] = {"T0": "alpha", "T1": "beta", "T2": "gamma", "T3": "delta"}

T_GRAPHS: Dict[str, Graph] = {
    # three triangles sharing the vertex 1
    "T0": Graph.from_edges(
        7, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5), (1, 6), (1, 7), (6, 7)]
    ),
    # two triangles sharing 1, edge 1-6, leaves 7 and 8 on 6
    "T1": Graph.from_edges(
        8, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5), (1, 6), (6, 7), (6, 8)]
    ),
    # triangle on 1, path 4-1-5, two leaves on each of 4 and 5
    "T2": Graph.from_edges(
        9, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 6), (4, 7), (5, 8), (5, 9)]
    ),
    # center 1 adjacent to 2, 3, 4, each carrying two leaves
    "T3": Graph.from_edges(
        10, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 7), (3, 8), (4, 9), (4, 10)]
    ),
}


class ForbiddenHit(BaseModel):
    """An induced copy of a forbidden graph; ``embedding[k]`` is the image of T-vertex k+1"""
    id: str
    case: str
    embedding: List[int]


def forbidden_t_graphs() -> Dict[str, Graph]:
    return dict(T_GRAPHS)


def find_induced(g: Graph, pattern: Graph) -> List[List[int]]:
    """All induced embeddings of ``pattern`` in ``g``, sorted lexicographically"""
    if pattern.n > g.n or len(pattern.edges) > len(g.edges):
        return []
    matcher = GraphMatcher(g.to_networkx(), pattern.to_networkx())
    hits = []
    for mapping in matcher.subgraph_isomorphisms_iter():
        inverse = {t: v for v, t in mapping.items()}
        hits.append([inverse[t] for t in pattern.vertices])
    return sorted(hits)


def contains_forbidden(g: Graph) -> Optional[ForbiddenHit]:
    """First induced T-graph by id, then by lexicographic embedding"""
    for name, pattern in T_GRAPHS.items():
        hits = find_induced(g, pattern)
        if hits:
            return ForbiddenHit(id=name, case=CASE_TAGS[name], embedding=hits[0])
    return None
