"""
Finite simple undirected graphs on vertices 1..n
"""

import hashlib
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from blockbetti.core.errors import GraphStructureError

Edge = Tuple[int, int]


class Graph(BaseModel):
    """
    A simple graph on vertices 1..n.

    ``edges`` is kept sorted with u < v in every pair. ``labels`` optionally
    maps vertex k to a vertex of the root graph this one was cut out of;
    it never takes part in equality or hashing.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    edges: Tuple[Edge, ...] = ()
    labels: Tuple[int, ...] = ()

    @field_validator("edges", mode="before")
    @classmethod
    def _normalise_edges(cls, value: Iterable[Sequence[int]]) -> Tuple[Edge, ...]:
        seen = set()
        for pair in value:
            u, v = (int(x) for x in pair)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            edge = (min(u, v), max(u, v))
            if edge in seen:
                raise ValueError(f"duplicate edge {edge[0]} {edge[1]}")
            seen.add(edge)
        return tuple(sorted(seen))

    @model_validator(mode="after")
    def _check_vertices(self) -> "Graph":
        for u, v in self.edges:
            if u < 1 or v > self.n:
                raise ValueError(f"edge {u} {v} outside vertex range 1..{self.n}")
        if self.labels and len(self.labels) != self.n:
            raise ValueError("labels must name every vertex")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[int] = ()
    ) -> "Graph":
        return cls(n=n, edges=tuple(tuple(e) for e in edges), labels=tuple(labels))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(1, n + 1), 2))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def label(self, v: int) -> int:
        """Root-graph name of vertex ``v``"""
        return self.labels[v - 1] if self.labels else v

    def neighbors(self, v: int) -> FrozenSet[int]:
        return adjacency(self)[v]

    def degree(self, v: int) -> int:
        return len(adjacency(self)[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in adjacency(self)[u]

    def to_networkx(self) -> nx.Graph:
        """Shared networkx view; callers must not mutate it"""
        return _as_networkx(self)

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(_as_networkx(self))

    def edge_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=4096)
def adjacency(g: Graph) -> Dict[int, FrozenSet[int]]:
    adj: Dict[int, set] = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return {v: frozenset(nbrs) for v, nbrs in adj.items()}


@lru_cache(maxsize=4096)
def _as_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    return G


def same_edges(a: Graph, b: Graph) -> bool:
    """Equality of the labelled graphs, ignoring provenance labels"""
    return a.n == b.n and a.edges == b.edges


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """
    Induced subgraph on ``vertices``, relabelled 1..|W| in increasing order.

    The result's ``labels`` map back to the root graph of ``g``.

    Raises:
        GraphStructureError: if the vertex set is empty or not inside 1..n
    """
    W = sorted(set(vertices))
    if not W:
        raise GraphStructureError("induced subgraph needs a non-empty vertex set")
    if W[0] < 1 or W[-1] > g.n:
        raise GraphStructureError(f"vertex set {W} not contained in 1..{g.n}")
    position = {w: k for k, w in enumerate(W, start=1)}
    edges = [(position[u], position[v]) for u, v in g.edges if u in position and v in position]
    return Graph.from_edges(len(W), edges, labels=[g.label(w) for w in W])


def restrict_to_non_leaves(g: Graph) -> Graph:
    """
    G|P for P = vertices of degree other than 1.

    An empty P yields the graph with no vertices.
    """
    P = [v for v in g.vertices if g.degree(v) != 1]
    if not P:
        return Graph(n=0)
    return induced_subgraph(g, P)


def connected_components(g: Graph) -> List[Graph]:
    """Components as induced subgraphs, ordered by smallest vertex"""
    components = nx.connected_components(_as_networkx(g))
    parts = sorted((sorted(c) for c in components), key=lambda c: c[0])
    return [induced_subgraph(g, part) for part in parts]


def relabel(g: Graph, mapping: Dict[int, int]) -> Graph:
    """Apply a permutation ``old -> new`` of 1..n to the vertices"""
    if sorted(mapping) != list(g.vertices) or sorted(mapping.values()) != list(g.vertices):
        raise GraphStructureError("relabelling must be a permutation of 1..n")
    return Graph.from_edges(g.n, [(mapping[u], mapping[v]) for u, v in g.edges])


def graph_hash(g: Graph) -> str:
    """Stable identifier of the labelled graph"""
    return hashlib.sha256(g.edge_text().encode("utf-8")).hexdigest()[:16]
