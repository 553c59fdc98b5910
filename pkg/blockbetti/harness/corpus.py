"""
Corpus loader - build graph corpora from spec strings, files and built-in
YAML corpora

Spec strings, joined with '+':
    exhaustive:n<=N[:indecomposable|:decomposable]
    random:COUNT:n<=N[:indecomposable][:k<=K]
    named:K3,P4,paw
    file:PATH
    builtin:NAME  (or just NAME)
"""

import re
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel

from blockbetti.core.errors import BlockBettiError, UnknownNameError
from blockbetti.graphs.generator import (
    enumerate_block_graphs,
    named_graph,
    random_block_graph,
    sample_seeds,
)
from blockbetti.graphs.graph import Graph
from blockbetti.graphs.io import graph_from_dict, read_graphs

# Built-in corpora directory
BUILTIN_CORPORA_DIR = Path(__file__).parent / "builtin"

DEFAULT_MAX_CLIQUE = 4


class CorpusItem(BaseModel):
    graph: Graph
    name: Optional[str] = None
    seed: Optional[int] = None


class CorpusSpecError(BlockBettiError, ValueError):
    """A corpus spec string that cannot be parsed"""


def _bound(text: str, variable: str, spec: str) -> int:
    match = re.fullmatch(rf"{variable}<=(\d+)", text.strip())
    if not match:
        raise CorpusSpecError(f"expected '{variable}<=N' in corpus spec '{spec}', got '{text}'")
    return int(match.group(1))


def _exhaustive(args: List[str], spec: str) -> List[CorpusItem]:
    if not args or len(args) > 2:
        raise CorpusSpecError(f"usage: exhaustive:n<=N[:indecomposable|:decomposable] ({spec})")
    n_max = _bound(args[0], "n", spec)
    indecomposable = None
    if len(args) == 2:
        if args[1] not in ("indecomposable", "decomposable"):
            raise CorpusSpecError(f"unknown filter '{args[1]}' in '{spec}'")
        indecomposable = args[1] == "indecomposable"
    return [CorpusItem(graph=g) for g in enumerate_block_graphs(n_max, indecomposable)]


def _random(args: List[str], spec: str, seed: int) -> List[CorpusItem]:
    if len(args) < 2:
        raise CorpusSpecError(f"usage: random:COUNT:n<=N[:indecomposable][:k<=K] ({spec})")
    try:
        count = int(args[0])
    except ValueError:
        raise CorpusSpecError(f"non-integer count in '{spec}'") from None
    n_max = _bound(args[1], "n", spec)
    indecomposable = False
    max_clique = DEFAULT_MAX_CLIQUE
    for extra in args[2:]:
        if extra == "indecomposable":
            indecomposable = True
        else:
            max_clique = _bound(extra, "k", spec)
    return [
        CorpusItem(
            graph=random_block_graph(n_max, max_clique, indecomposable, s),
            name=f"random-{k}",
            seed=s,
        )
        for k, s in enumerate(sample_seeds(count, seed))
    ]


def _named(args: List[str], spec: str) -> List[CorpusItem]:
    names = [x.strip() for x in ":".join(args).split(",") if x.strip()]
    if not names:
        raise CorpusSpecError(f"no graph names in '{spec}'")
    return [CorpusItem(graph=named_graph(name), name=name) for name in names]


def _file(args: List[str]) -> List[CorpusItem]:
    path = Path(":".join(args))
    return [
        CorpusItem(graph=g, name=f"{path.name}#{k}") for k, g in enumerate(read_graphs(path))
    ]


def parse_corpus(spec: str, seed: int = 0) -> List[CorpusItem]:
    """
    Build a corpus from a spec string.

    Args:
        spec: One or more corpus specs joined with '+'
        seed: Seed for random corpora

    Returns:
        Corpus items in spec order
    """
    items: List[CorpusItem] = []
    for part in spec.split("+"):
        part = part.strip()
        if not part:
            continue
        kind, *args = part.split(":")
        if kind == "exhaustive":
            items.extend(_exhaustive(args, part))
        elif kind == "random":
            items.extend(_random(args, part, seed))
        elif kind == "named":
            items.extend(_named(args, part))
        elif kind == "file":
            items.extend(_file(args))
        elif kind == "builtin":
            items.extend(load_builtin_corpus(":".join(args), seed))
        else:
            items.extend(load_builtin_corpus(part, seed))
    return items


def list_builtin_corpora() -> List[Dict[str, str]]:
    """
    List all available built-in corpora.

    Returns:
        List of dicts with 'name' and 'description'
    """
    corpora = []
    if not BUILTIN_CORPORA_DIR.exists():
        return corpora
    for path in sorted(BUILTIN_CORPORA_DIR.glob("*.yaml")):
        data = _read_yaml(path)
        corpora.append({"name": path.stem, "description": data.get("description", "")})
    return corpora


def load_builtin_corpus(name: str, seed: int = 0) -> List[CorpusItem]:
    """
    Load a built-in corpus by name, or a corpus YAML file by path.

    A corpus file lists ``include`` spec strings and explicit ``graphs``
    records ({name, n, edges}).
    """
    path = Path(name)
    if not (path.is_file() and path.suffix in (".yaml", ".yml")):
        path = BUILTIN_CORPORA_DIR / f"{name}.yaml"
        if not path.exists():
            raise UnknownNameError(
                "corpus", name, [c["name"] for c in list_builtin_corpora()]
            )
    data = _read_yaml(path)
    items: List[CorpusItem] = []
    for spec in data.get("include", []):
        items.extend(parse_corpus(spec, seed))
    for record in data.get("graphs", []):
        items.append(CorpusItem(graph=graph_from_dict(record), name=record.get("name")))
    return items


def _read_yaml(path: Path) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    # Handle nested 'corpus' key
    if "corpus" in data:
        data = data["corpus"]
    return data
