"""
Block structure of connected graphs: blocks, cutpoints, clique degrees,
decomposition at free vertices and leaf surgery.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
from pydantic import BaseModel

from blockbetti.core.errors import GraphStructureError
from blockbetti.graphs.graph import Graph, induced_subgraph

logger = logging.getLogger(__name__)


class BlockStructure(BaseModel):
    """Blocks, cutpoints and clique degrees of a connected graph"""
    n: int
    edges: List[Tuple[int, int]]
    blocks: List[List[int]]
    cutpoints: List[int]
    maximal_cliques: List[List[int]]
    cdeg: Dict[int, int]
    free_vertices: List[int]
    inner_vertices: List[int]
    f: int
    i: int

    def cliques_containing(self, v: int) -> List[List[int]]:
        return [c for c in self.maximal_cliques if v in c]


class Decomposition(BaseModel):
    """Indecomposable components glued at free vertices"""
    n: int
    edges: List[Tuple[int, int]]
    components: List[Graph]
    gluing_vertices: List[int]

    @property
    def s(self) -> int:
        return len(self.components)

    @property
    def is_decomposable(self) -> bool:
        return self.s > 1


class LeafSurgery(BaseModel):
    """The graphs G', G'' and H obtained from a leaf block"""
    cutpoint: int
    leaf: List[int]
    g_prime: Graph
    g_double_prime: Graph
    h: Graph
    q: int


def _require_connected(g: Graph, operation: str) -> None:
    if g.n == 0 or not g.is_connected():
        raise GraphStructureError(f"{operation} needs a connected graph on at least one vertex")


def maximal_cliques(g: Graph) -> List[List[int]]:
    """Maximal cliques, each sorted, listed lexicographically"""
    if g.n == 0:
        return []
    return sorted(sorted(c) for c in nx.find_cliques(g.to_networkx()))


def clique_degrees(g: Graph, cliques: Optional[List[List[int]]] = None) -> Dict[int, int]:
    cliques = maximal_cliques(g) if cliques is None else cliques
    cdeg = {v: 0 for v in g.vertices}
    for clique in cliques:
        for v in clique:
            cdeg[v] += 1
    return cdeg


def block_structure(g: Graph) -> BlockStructure:
    """
    Compute blocks, cutpoints, maximal cliques and cdeg.

    Raises:
        GraphStructureError: if g is not connected
    """
    _require_connected(g, "block_structure")
    G = g.to_networkx()
    if g.n == 1:
        blocks = [[1]]
        cutpoints: List[int] = []
    else:
        blocks = sorted(sorted(b) for b in nx.biconnected_components(G))
        cutpoints = sorted(nx.articulation_points(G))
    cliques = maximal_cliques(g)
    cdeg = clique_degrees(g, cliques)
    free = [v for v in g.vertices if cdeg[v] == 1]
    inner = [v for v in g.vertices if cdeg[v] > 1]
    return BlockStructure(
        n=g.n,
        edges=list(g.edges),
        blocks=blocks,
        cutpoints=cutpoints,
        maximal_cliques=cliques,
        cdeg=cdeg,
        free_vertices=free,
        inner_vertices=inner,
        f=len(free),
        i=len(inner),
    )


def is_block_graph(g: Graph) -> bool:
    """True when every block of the connected graph g is a clique"""
    _require_connected(g, "is_block_graph")
    if g.n == 1:
        return True
    for block in nx.biconnected_components(g.to_networkx()):
        k = len(block)
        inside = sum(1 for u, v in combinations(block, 2) if g.has_edge(u, v))
        if inside != k * (k - 1) // 2:
            return False
    return True


def require_block_graph(g: Graph, operation: str) -> None:
    _require_connected(g, operation)
    if not is_block_graph(g):
        raise GraphStructureError(f"{operation} needs a block graph")


def split_sides(g: Graph, v: int) -> Optional[Tuple[List[int], List[int]]]:
    """
    Vertex sets of G1 and G2 when g splits at v into two graphs meeting only
    in v with v free in both; None otherwise.
    """
    cliques = [c for c in maximal_cliques(g) if v in c]
    if len(cliques) != 2:
        return None
    G = g.to_networkx().copy()
    G.remove_node(v)
    first = next(u for u in cliques[0] if u != v)
    side = nx.node_connected_component(G, first)
    if any(u in side for u in cliques[1] if u != v):
        return None
    left = sorted(side | {v})
    right = sorted(set(g.vertices) - side)
    return left, right


def splitting_vertices(g: Graph) -> List[int]:
    """Vertices at which g decomposes, in increasing order"""
    if g.n < 3:
        return []
    return [v for v in g.vertices if split_sides(g, v) is not None]


def split_at(g: Graph, v: int) -> Tuple[Graph, Graph]:
    """
    The binary decomposition g = G1 ∪ G2 at v.

    G1 is the side holding the lexicographically first clique through v.
    """
    sides = split_sides(g, v)
    if sides is None:
        raise GraphStructureError(f"graph does not decompose at vertex {v}")
    return induced_subgraph(g, sides[0]), induced_subgraph(g, sides[1])


def decompose(g: Graph) -> Decomposition:
    """
    Split repeatedly at the lowest splittable vertex until every part is
    indecomposable. Components come out ordered by their sorted labels.
    """
    _require_connected(g, "decompose")
    parts: List[List[int]] = [list(g.vertices)]
    gluing: Set[int] = set()
    done: List[List[int]] = []
    while parts:
        part = parts.pop()
        sub = induced_subgraph(g, part)
        vertices = splitting_vertices(sub)
        if not vertices:
            done.append(part)
            continue
        v = vertices[0]
        left, right = split_sides(sub, v)
        gluing.add(part[v - 1])
        parts.append([part[u - 1] for u in left])
        parts.append([part[u - 1] for u in right])
    done.sort()
    components = [induced_subgraph(g, part) for part in done]
    logger.debug("decomposed %d-vertex graph into %d components", g.n, len(components))
    return Decomposition(
        n=g.n,
        edges=list(g.edges),
        components=components,
        gluing_vertices=sorted(gluing),
    )


def glue(decomposition: Decomposition) -> Graph:
    """Rebuild the graph from its components through their labels"""
    edges = set()
    for component in decomposition.components:
        for u, v in component.edges:
            a, b = component.label(u), component.label(v)
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(decomposition.n, sorted(edges))


def leaf_blocks(g: Graph) -> List[List[int]]:
    """Blocks containing exactly one vertex of cdeg greater than one"""
    bs = block_structure(g)
    return [b for b in bs.blocks if sum(1 for v in b if bs.cdeg[v] > 1) == 1]


def leaf_surgery(g: Graph, leaf: Sequence[int]) -> LeafSurgery:
    """
    Build G', G'' and H for the leaf block ``leaf`` with cutpoint i.

    G' replaces the blocks through i by one clique on their union, so i
    becomes free. G'' = G - i and H = G' - i; q counts the components of
    G'' minus one.

    Raises:
        GraphStructureError: if g is not a block graph, has no inner vertex,
            or ``leaf`` is not a leaf block of g
    """
    require_block_graph(g, "leaf_surgery")
    bs = block_structure(g)
    if bs.i == 0:
        raise GraphStructureError("leaf surgery needs a graph with an inner vertex")
    leaf = sorted(leaf)
    if leaf not in bs.blocks:
        raise GraphStructureError(f"{leaf} is not a block")
    inner = [v for v in leaf if bs.cdeg[v] > 1]
    if len(inner) != 1:
        raise GraphStructureError(f"{leaf} is not a leaf block")
    i = inner[0]

    union = sorted({u for clique in bs.cliques_containing(i) for u in clique})
    edges = set(g.edges) | set(combinations(union, 2))
    g_prime = Graph.from_edges(g.n, sorted(edges))
    rest = [v for v in g.vertices if v != i]
    g_double_prime = induced_subgraph(g, rest)
    h = induced_subgraph(g_prime, rest)
    q = nx.number_connected_components(g_double_prime.to_networkx()) - 1
    return LeafSurgery(
        cutpoint=i,
        leaf=leaf,
        g_prime=g_prime,
        g_double_prime=g_double_prime,
        h=h,
        q=q,
    )
