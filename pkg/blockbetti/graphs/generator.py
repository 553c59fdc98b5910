"""
Block graph generators - seeded random sampling, exhaustive enumeration
up to isomorphism, and the named graphs used across tests and corpora
"""

import random
import re
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional

import networkx as nx

from blockbetti.core.errors import GraphStructureError, UnknownNameError
from blockbetti.graphs.blocks import block_structure, splitting_vertices
from blockbetti.graphs.graph import Graph

MAX_ATTEMPTS = 1000


def _attach_clique(edges: List[tuple], n: int, at: int, size: int) -> int:
    """Glue a new K_size to vertex ``at``; returns the new vertex count"""
    members = [at] + list(range(n + 1, n + size))
    edges.extend(combinations(members, 2))
    return n + size - 1


def _shuffled(rng: random.Random, n: int, edges: List[tuple]) -> Graph:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    mapping = {v: perm[v - 1] for v in range(1, n + 1)}
    return Graph.from_edges(n, [(mapping[u], mapping[v]) for u, v in edges])


def _one_sample(rng: random.Random, n_max: int, max_clique: int) -> Graph:
    target = rng.randint(2, n_max)
    first = rng.randint(2, min(max_clique, target))
    edges: List[tuple] = list(combinations(range(1, first + 1), 2))
    n = first
    while n < target:
        at = rng.randint(1, n)
        size = rng.randint(2, min(max_clique, target - n + 1))
        n = _attach_clique(edges, n, at, size)
    return _shuffled(rng, n, edges)


def _repair_indecomposable(rng: random.Random, g: Graph, n_max: int) -> Optional[Graph]:
    """Hang pendant edges on splitting vertices while room remains"""
    while True:
        vertices = splitting_vertices(g)
        if not vertices:
            return g
        if g.n >= n_max:
            return None
        edges = list(g.edges)
        n = _attach_clique(edges, g.n, rng.choice(vertices), 2)
        g = Graph.from_edges(n, edges)


def random_block_graph(
    n_max: int,
    max_clique: int,
    require_indecomposable: bool = False,
    seed: int = 0,
) -> Graph:
    """
    Sample a connected block graph by repeatedly gluing cliques at a vertex.

    Args:
        n_max: Upper bound on the vertex count (at least 2)
        max_clique: Upper bound on the block size (at least 2)
        require_indecomposable: Reject graphs with a vertex of cdeg 2; raises
            GraphStructureError when no attempt yields one
        seed: Random seed; equal arguments give equal graphs

    Returns:
        The sampled graph, vertices randomly relabelled
    """
    if n_max < 2 or max_clique < 2:
        raise GraphStructureError("random block graphs need n_max >= 2 and max_clique >= 2")
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        g = _one_sample(rng, n_max, max_clique)
        if not require_indecomposable:
            return g
        repaired = _repair_indecomposable(rng, g, n_max)
        if repaired is not None:
            return repaired
    raise GraphStructureError(
        f"no indecomposable sample with n_max={n_max}, max_clique={max_clique} "
        f"after {MAX_ATTEMPTS} attempts (seed {seed})"
    )


def generate_block_graphs(
    count: int,
    n_max: int,
    max_clique: int = 4,
    require_indecomposable: bool = False,
    seed: int = 42,
) -> List[Graph]:
    """``count`` samples; sample k is drawn with the k-th of ``sample_seeds``"""
    return [
        random_block_graph(n_max, max_clique, require_indecomposable, s)
        for s in sample_seeds(count, seed)
    ]


def sample_seeds(count: int, seed: int) -> List[int]:
    rng = random.Random(seed)
    return [rng.randrange(2**31) for _ in range(count)]


def _bucket_key(G: nx.Graph) -> tuple:
    degrees = tuple(sorted(d for _, d in G.degree()))
    return (G.number_of_nodes(), G.number_of_edges(), degrees, nx.weisfeiler_lehman_graph_hash(G))


def enumerate_block_graphs(
    n_max: int, indecomposable: Optional[bool] = None
) -> Iterator[Graph]:
    """
    Every connected block graph on 2..n_max vertices, one per isomorphism
    class, in order of vertex count.

    Args:
        n_max: Largest vertex count
        indecomposable: True keeps only indecomposable graphs, False only
            decomposable ones, None keeps all
    """
    levels: Dict[int, List[Graph]] = {1: [Graph(n=1)]}
    buckets: Dict[tuple, List[nx.Graph]] = {}
    for m in range(1, n_max):
        for g in levels.get(m, []):
            for at in g.vertices:
                for size in range(2, n_max - m + 2):
                    edges = list(g.edges)
                    n = _attach_clique(edges, m, at, size)
                    candidate = Graph.from_edges(n, edges)
                    G = candidate.to_networkx()
                    key = _bucket_key(G)
                    bucket = buckets.setdefault(key, [])
                    if any(nx.is_isomorphic(G, other) for other in bucket):
                        continue
                    bucket.append(G)
                    levels.setdefault(n, []).append(candidate)

    for n in range(2, n_max + 1):
        for g in levels.get(n, []):
            if indecomposable is None or indecomposable == (not splitting_vertices(g)):
                yield g


def _path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(1, n)])


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(1, n)] + [(1, n)])


def _star(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(1, v) for v in range(2, k + 2)])


FIXED_GRAPHS: Dict[str, Callable[[], Graph]] = {
    "paw": lambda: Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)]),
    "bowtie": lambda: Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]),
    "double_star": lambda: Graph.from_edges(6, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
    "k4_pendant": lambda: Graph.from_edges(5, list(combinations(range(1, 5), 2)) + [(4, 5)]),
}

PATTERNS: Dict[str, Callable[[int], Graph]] = {
    "K": Graph.complete,
    "P": _path,
    "C": _cycle,
    "star": _star,
}


def named_graph(name: str) -> Graph:
    """
    Look up a named graph: K<n>, P<n>, C<n>, star<k> (center 1),
    paw, bowtie, double_star, k4_pendant and the forbidden graphs T0..T3.
    """
    if name in FIXED_GRAPHS:
        return FIXED_GRAPHS[name]()
    from blockbetti.classify.forbidden import T_GRAPHS

    if name in T_GRAPHS:
        return T_GRAPHS[name]
    match = re.fullmatch(r"(K|P|C|star)(\d+)", name)
    if match:
        kind, size = match.group(1), int(match.group(2))
        if size >= 1 and not (kind == "C" and size < 3):
            return PATTERNS[kind](size)
    raise UnknownNameError(
        "graph", name, list(FIXED_GRAPHS) + list(T_GRAPHS) + ["K<n>", "P<n>", "C<n>", "star<k>"]
    )


def describe(g: Graph) -> Dict[str, int]:
    bs = block_structure(g)
    return {"n": g.n, "f": bs.f, "i": bs.i, "blocks": len(bs.blocks)}
