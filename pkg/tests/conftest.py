from pathlib import Path

import pytest

from blockbetti.graphs.generator import named_graph
from blockbetti.graphs.graph import Graph


@pytest.fixture
def graph():
    """Look up a named graph: ``graph("paw")``"""
    return named_graph


@pytest.fixture
def write_graph(tmp_path: Path):
    """Write a graph in edge-list format and return the file path"""

    def _write(g: Graph, name: str = "g") -> Path:
        path = tmp_path / f"{name}.txt"
        path.write_text(g.edge_text(), encoding="utf-8")
        return path

    return _write
