import json

import pytest

from blockbetti.core.errors import UnknownNameError
from blockbetti.graphs.blocks import is_block_graph, splitting_vertices
from blockbetti.graphs.generator import named_graph
from blockbetti.harness.corpus import (
    CorpusSpecError,
    list_builtin_corpora,
    load_builtin_corpus,
    parse_corpus,
)


def test_named_corpus():
    items = parse_corpus("named:K3,P4, paw")
    assert [item.name for item in items] == ["K3", "P4", "paw"]
    assert items[1].graph == named_graph("P4")


@pytest.mark.parametrize(
    "spec,count",
    [
        ("exhaustive:n<=4", 7),
        ("exhaustive:n<=5:indecomposable", 7),
        ("exhaustive:n<=5:decomposable", 9),
        ("exhaustive:n<=3+named:K2", 4),
    ],
)
def test_exhaustive_corpus(spec, count):
    assert len(parse_corpus(spec)) == count


def test_random_corpus_is_seeded():
    a = parse_corpus("random:6:n<=8:k<=3", seed=9)
    b = parse_corpus("random:6:n<=8:k<=3", seed=9)
    assert [x.graph for x in a] == [x.graph for x in b]
    assert [x.name for x in a] == [f"random-{k}" for k in range(6)]
    assert all(x.seed is not None for x in a)
    assert all(is_block_graph(x.graph) and x.graph.n <= 8 for x in a)


def test_random_indecomposable_corpus():
    items = parse_corpus("random:5:n<=9:indecomposable", seed=1)
    assert all(not splitting_vertices(x.graph) for x in items)


def test_file_corpus(tmp_path):
    path = tmp_path / "graphs.jsonl"
    path.write_text(json.dumps({"n": 2, "edges": [[1, 2]]}) + "\n")
    items = parse_corpus(f"file:{path}")
    assert [x.name for x in items] == ["graphs.jsonl#0"]
    assert items[0].graph == named_graph("K2")


@pytest.mark.parametrize(
    "spec",
    [
        "exhaustive",
        "exhaustive:n<4",
        "exhaustive:n<=4:trees",
        "random:many:n<=4",
        "random:3",
        "named:",
    ],
)
def test_malformed_specs(spec):
    with pytest.raises(CorpusSpecError):
        parse_corpus(spec)


def test_unknown_corpus():
    with pytest.raises(UnknownNameError) as info:
        parse_corpus("nonexistent")
    assert "acceptance" in str(info.value)


def test_builtin_corpora_are_listed():
    names = [c["name"] for c in list_builtin_corpora()]
    assert names == ["acceptance", "cliques", "forbidden"]
    assert all(c["description"] for c in list_builtin_corpora())


def test_acceptance_corpus():
    items = load_builtin_corpus("acceptance")
    names = [x.name for x in items]
    assert names[:5] == ["K2", "K3", "K4", "K5", "K6"]
    assert names[-4:] == ["T0", "T1", "T2", "T3"]
    assert parse_corpus("builtin:acceptance") == items


def test_forbidden_corpus_holds_block_graphs():
    items = load_builtin_corpus("forbidden")
    assert {"T0", "T1", "T2", "T3"} <= {x.name for x in items}
    assert all(is_block_graph(x.graph) for x in items)


def test_corpus_file_by_path(tmp_path):
    path = tmp_path / "mine.yaml"
    path.write_text(
        "corpus:\n"
        "  description: test\n"
        "  include: ['named:K2']\n"
        "  graphs:\n"
        "    - {name: tri, n: 3, edges: [[1, 2], [2, 3], [1, 3]]}\n"
    )
    items = parse_corpus(str(path))
    assert [x.name for x in items] == ["K2", "tri"]
    assert items[1].graph == named_graph("K3")
