"""
Graph readers and writers: edge-list text, graph6, JSON and DOT
"""

import json
import logging
from pathlib import Path
from typing import List, Union

import networkx as nx

from blockbetti.core.errors import GraphParseError
from blockbetti.graphs.graph import Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(text: str) -> Graph:
    """
    Parse the edge-list format.

    The first non-blank line holds n; each further line holds one edge
    "u v". Text after '#' is ignored. Endpoints may come in either order.

    Raises:
        GraphParseError: on a malformed line, an out-of-range vertex, a loop
            or a duplicate edge, naming the offending line
    """
    n = None
    edges: List[tuple] = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1 or not tokens[0].isdigit():
                raise GraphParseError(f"expected vertex count, got '{line}'", lineno)
            n = int(tokens[0])
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got '{line}'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in '{line}'", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"vertex out of range 1..{n} in '{line}'", lineno)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise GraphParseError(
                f"duplicate edge {edge[0]} {edge[1]} (first on line {seen[edge]})", lineno
            )
        seen[edge] = lineno
        edges.append(edge)
    if n is None:
        raise GraphParseError("empty graph file: missing vertex count")
    return Graph.from_edges(n, edges)


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 record; vertex k of the record becomes vertex k+1"""
    data = line.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    try:
        G = nx.from_graph6_bytes(data.encode("ascii"))
    except (ValueError, nx.NetworkXError) as e:
        raise GraphParseError(f"invalid graph6 record: {e}") from e
    return Graph.from_edges(G.number_of_nodes(), [(u + 1, v + 1) for u, v in G.edges()])


def to_graph6(g: Graph) -> str:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((u - 1, v - 1) for u, v in g.edges)
    return nx.to_graph6_bytes(G, header=False).decode("ascii").strip()


def graph_from_dict(data: dict) -> Graph:
    try:
        return Graph.from_edges(int(data["n"]), data.get("edges", []))
    except (KeyError, TypeError, ValueError) as e:
        raise GraphParseError(f"invalid graph record: {e}") from e


def read_graphs(path: Union[str, Path]) -> List[Graph]:
    """
    Read every graph stored in ``path``.

    ``.g6`` files hold one graph6 record per line, ``.jsonl`` files one
    {"n", "edges"} object per line, ``.json`` one object or a list of them;
    anything else is a single edge-list graph.
    """
    path = Path(path)
    if not path.exists():
        raise GraphParseError(f"graph file not found: {path}")
    text = path.read_text(encoding="utf-8")
    suffix = path.suffix.lower()

    if suffix == ".g6" or text.startswith(GRAPH6_HEADER):
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if suffix == ".jsonl":
        graphs = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise GraphParseError(f"invalid JSON: {e.msg}", lineno) from e
            graphs.append(graph_from_dict(record.get("graph", record)))
        return graphs
    if suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphParseError(f"invalid JSON: {e.msg}", e.lineno) from e
        records = data if isinstance(data, list) else [data]
        return [graph_from_dict(r) for r in records]
    return [parse_graph(text)]


def read_graph(path: Union[str, Path]) -> Graph:
    """Read a file that must hold exactly one graph"""
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise GraphParseError(f"{path} holds {len(graphs)} graphs, expected one")
    logger.debug("read %d-vertex graph from %s", graphs[0].n, path)
    return graphs[0]


def to_dot(g: Graph, name: str = "G", highlight: List[int] = ()) -> str:
    """Graphviz rendering; ``highlight`` vertices are drawn filled"""
    lines = [f"graph \"{name}\" {{"]
    for v in g.vertices:
        style = ' [style=filled, fillcolor="lightgrey"]' if v in highlight else ""
        lines.append(f"  {v}{style};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(g: Graph, path: Union[str, Path], name: str = "G", highlight: List[int] = ()) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_dot(g, name=name, highlight=highlight), encoding="utf-8")
    return path
