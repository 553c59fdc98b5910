import pytest

from blockbetti.core.errors import BudgetExceeded, GraphStructureError
from blockbetti.graphs.generator import named_graph
from blockbetti.graphs.graph import Graph
from blockbetti.groebner.buchberger import buchberger_basis, buchberger_initial_ideal
from blockbetti.groebner.monomials import Monomial, MonomialIdeal, minimalize, variable_position
from blockbetti.groebner.normal_form import (
    ReducedBasis,
    hilbert_function,
    normal_form,
    standard_monomials,
)
from blockbetti.groebner.paths import (
    admissible_basis,
    admissible_paths,
    binomial_generators,
    initial_ideal,
)
from blockbetti.groebner.separation import support_split


def test_monomial_parse_and_str():
    m = Monomial.parse("x1*y2^2", 2)
    assert m.exponents == (1, 0, 0, 2)
    assert str(m) == "x1*y2^2"
    assert str(Monomial.one(2)) == "1"
    assert m.degree == 3
    assert not m.is_squarefree()


def test_variable_position_bounds():
    assert variable_position("y1", 3) == 3
    with pytest.raises(ValueError):
        variable_position("x4", 3)
    with pytest.raises(ValueError):
        variable_position("z1", 3)


def test_lex_order_prefers_x_variables():
    assert Monomial.parse("x1*y2", 2) > Monomial.parse("x2*y1", 2)
    assert Monomial.parse("x2", 2) > Monomial.parse("y1", 2)


def test_minimalize_drops_multiples():
    gens = [Monomial.parse(t, 2) for t in ["x1*y2", "x1*x2*y2", "y1", "y1*y2"]]
    assert [str(m) for m in minimalize(gens)] == ["x1*y2", "y1"]


def test_monomial_ideal_membership_and_sum():
    a = MonomialIdeal.parse(2, ["x1*y2"])
    b = MonomialIdeal.parse(2, ["x2*y1", "x1*x2*y2"])
    total = a + b
    assert total.to_strings() == ["x1*y2", "x2*y1"]
    assert total.contains(Monomial.parse("x1*x2*y2", 2))
    assert not total.contains(Monomial.parse("x1*x2", 2))
    assert total.is_squarefree()


def test_binomial_generators():
    assert [str(b) for b in binomial_generators(named_graph("P3"))] == [
        "x1*y2 - x2*y1",
        "x2*y3 - x3*y2",
    ]


@pytest.mark.parametrize(
    "name,expected",
    [
        ("K2", ["x1*y2"]),
        ("K3", ["x1*y2", "x1*y3", "x2*y3"]),
        ("P3", ["x1*y2", "x2*y3"]),
        ("star2", ["x1*y2", "x1*y3", "x2*y1*y3"]),
    ],
)
def test_initial_ideal_from_admissible_paths(name, expected):
    assert initial_ideal(named_graph(name)).to_strings() == expected


def test_admissible_paths_of_star():
    paths = admissible_paths(named_graph("star2"))
    assert [p.vertices for p in paths] == [(1, 2), (1, 3), (2, 1, 3)]
    assert paths[2].to_dict() == {"vertices": [2, 1, 3], "u": "y1", "generator": "x2*y1*y3"}
    assert str(paths[2].binomial()) == "x2*y1*y3 - x3*y1*y2"


def test_non_minimal_paths_are_excluded():
    # 2-1-3 is not minimal in K3 because of the edge 2-3
    assert [p.vertices for p in admissible_paths(named_graph("K3"))] == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("name", ["K4", "P4", "star3", "paw", "bowtie", "double_star"])
def test_admissible_paths_match_buchberger(name):
    g = named_graph(name)
    assert buchberger_initial_ideal(g) == initial_ideal(g)
    ours = sorted(str(b) for b in admissible_basis(g))
    theirs = sorted(str(b) for b in buchberger_basis(g))
    assert ours == theirs


@pytest.mark.slow
@pytest.mark.parametrize("name", ["T0", "T1"])
def test_admissible_paths_match_buchberger_on_forbidden_graphs(name):
    g = named_graph(name)
    assert buchberger_initial_ideal(g) == initial_ideal(g)


def test_buchberger_budget():
    with pytest.raises(BudgetExceeded) as info:
        buchberger_basis(named_graph("K5"), max_variables=8)
    assert info.value.limit == "buchberger_variables"
    assert (info.value.value, info.value.maximum) == (10, 8)


def test_buchberger_on_edgeless_graph():
    assert buchberger_basis(Graph(n=3)) == []


def test_normal_form_of_k2():
    g = named_graph("K2")
    x1 = Monomial.parse("x1", 2)
    result = normal_form(x1, variable_position("y2", 2), g)
    assert result == {Monomial.parse("x2*y1", 2): 1}


def test_reduced_basis_sources_agree():
    g = named_graph("paw")
    ours = ReducedBasis.from_admissible_paths(g)
    theirs = ReducedBasis.from_buchberger(g)
    assert ours.initial_ideal == theirs.initial_ideal
    m = Monomial.parse("x1*x3*y2*y4", 4)
    assert ours.normal_form(m) == theirs.normal_form(m)
    assert ours.is_standard(ours.reduce(m.exponents))


def test_for_graph_falls_back_to_admissible_paths():
    basis = ReducedBasis.for_graph(named_graph("K3"), max_buchberger_variables=4)
    assert basis.source == "admissible-paths"
    assert ReducedBasis.for_graph(named_graph("K3")).source == "buchberger"


@pytest.mark.parametrize("degree,count", [(0, 1), (1, 4), (2, 9)])
def test_hilbert_function_of_k2(degree, count):
    assert hilbert_function(named_graph("K2"), degree) == count


def test_standard_monomials_exclude_initial_ideal():
    monomials = standard_monomials(named_graph("K2"), 2)
    assert Monomial.parse("x1*y2", 2) not in monomials
    assert Monomial.parse("x2*y1", 2) in monomials
    assert monomials == sorted(monomials, reverse=True)


@pytest.mark.parametrize("name,vertex", [("P3", 2), ("bowtie", 3), ("paw", 3), ("k4_pendant", 4)])
def test_support_separates_at_gluing_vertex(name, vertex):
    split = support_split(named_graph(name), vertex)
    assert split.ok, split.violations
    assert sorted(split.left + split.right) == sorted(split.whole)


def test_support_split_relabels_sides():
    split = support_split(named_graph("paw"), 3)
    assert split.m == 3
    assert split.relabelling == {1: 1, 2: 2, 3: 3, 4: 4}


def test_support_split_rejects_non_gluing_vertex():
    with pytest.raises(GraphStructureError):
        support_split(named_graph("star3"), 1)
