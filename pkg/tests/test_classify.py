import pytest

from blockbetti.classify import (
    CASE_TAGS,
    T_GRAPHS,
    classify,
    contains_forbidden,
    find_induced,
    forbidden_t_graphs,
    satisfies_cutpoint_condition,
)
from blockbetti.core.errors import GraphStructureError
from blockbetti.graphs.blocks import block_structure, decompose, is_block_graph
from blockbetti.graphs.generator import enumerate_block_graphs, named_graph
from blockbetti.graphs.graph import Graph


def _with_leaf(g: Graph, at: int) -> Graph:
    return Graph.from_edges(g.n + 1, list(g.edges) + [(at, g.n + 1)])


@pytest.mark.parametrize("name", ["T0", "T1", "T2", "T3"])
def test_forbidden_graphs_are_indecomposable_block_graphs(name):
    g = T_GRAPHS[name]
    assert is_block_graph(g)
    assert not decompose(g).is_decomposable
    assert all(block_structure(g).cdeg[v] >= 3 for v in block_structure(g).inner_vertices)


def test_forbidden_t_graphs_returns_a_copy():
    graphs = forbidden_t_graphs()
    graphs.pop("T0")
    assert "T0" in T_GRAPHS
    assert list(CASE_TAGS) == ["T0", "T1", "T2", "T3"]


@pytest.mark.parametrize("name", ["T0", "T1", "T2", "T3"])
def test_each_forbidden_graph_finds_itself_first(name):
    hit = contains_forbidden(T_GRAPHS[name])
    assert hit.id == name
    assert hit.case == CASE_TAGS[name]
    assert hit.embedding == list(range(1, T_GRAPHS[name].n + 1))


def test_find_induced_ignores_non_induced_copies():
    # P3 sits in K3 as a subgraph but never as an induced one
    assert find_induced(named_graph("K3"), named_graph("P3")) == []
    hits = find_induced(named_graph("P4"), named_graph("P3"))
    assert hits == [[1, 2, 3], [2, 3, 4], [3, 2, 1], [4, 3, 2]]


def test_find_induced_skips_larger_patterns():
    assert find_induced(named_graph("K3"), T_GRAPHS["T0"]) == []


@pytest.mark.parametrize(
    "name,violations",
    [
        ("T0", [(1, 3)]),
        ("T1", [(1, 3)]),
        ("T2", [(1, 3)]),
        ("T3", [(1, 3)]),
        ("K4", []),
        ("star3", []),
        ("double_star", []),
    ],
)
def test_cutpoint_condition(name, violations):
    check = satisfies_cutpoint_condition(named_graph(name))
    assert check.ok is (not violations)
    assert [(v.vertex, v.cliques) for v in check.violations] == violations


@pytest.mark.parametrize(
    "name,predicted,forbidden",
    [
        ("K2", True, None),
        ("K5", True, None),
        ("star3", True, None),
        ("double_star", True, None),
        ("T0", False, "T0"),
        ("T1", False, "T1"),
        ("T2", False, "T2"),
        ("T3", False, "T3"),
    ],
)
def test_classify_indecomposable(name, predicted, forbidden):
    verdict = classify(named_graph(name))
    assert verdict.indecomposable
    assert verdict.predicted_single_extremal is predicted
    assert (verdict.forbidden.id if verdict.forbidden else None) == forbidden
    assert verdict.decomposition is None


def test_classify_decomposable_uses_components():
    verdict = classify(named_graph("P4"))
    assert not verdict.indecomposable
    assert len(verdict.components) == 3
    assert verdict.predicted_single_extremal
    assert verdict.decomposition.gluing_vertices == [2, 3]


def test_forbidden_component_spoils_the_gluing():
    g = _with_leaf(T_GRAPHS["T1"], 2)
    verdict = classify(g)
    assert not verdict.indecomposable
    assert [c.predicted_single_extremal for c in verdict.components] == [False, True]
    assert not verdict.predicted_single_extremal
    assert verdict.forbidden.id == "T1"


@pytest.mark.parametrize("name", ["C4", "C5"])
def test_classify_rejects_non_block_graphs(name):
    with pytest.raises(GraphStructureError):
        classify(named_graph(name))


def test_characterisations_agree_on_small_graphs():
    for g in enumerate_block_graphs(7, indecomposable=True):
        verdict = classify(g)
        assert (verdict.forbidden is None) == verdict.cutpoint_condition.ok


@pytest.mark.slow
def test_characterisations_agree_up_to_ten_vertices():
    for g in enumerate_block_graphs(10, indecomposable=True):
        verdict = classify(g)
        assert (verdict.forbidden is None) == verdict.cutpoint_condition.ok
