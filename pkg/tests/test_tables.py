import pytest

from blockbetti.core.errors import PartialTableError
from blockbetti.resolutions.cliques import clique_betti_oracle, path_betti_oracle
from blockbetti.resolutions.table import (
    BettiEntry,
    BettiTable,
    betti_polynomial_product,
    extremal_product,
    table_analytics,
)

K2 = BettiTable({(0, 0): 1, (1, 2): 1})
P3 = BettiTable({(0, 0): 1, (1, 2): 2, (2, 4): 1})
# two extremal entries: (1,3) on strand 2 and (2,3) on strand 1
TWO_CORNERS = BettiTable({(0, 0): 1, (1, 2): 1, (1, 3): 1, (2, 3): 1})


def _positions(entries):
    return [(e.i, e.j, e.beta) for e in entries]


def test_zero_entries_are_dropped():
    t = BettiTable({(0, 0): 1, (1, 2): 0})
    assert t.entries == {(0, 0): 1}
    assert t.get(1, 2) == 0


@pytest.mark.parametrize("entries", [{(0, 0): -1}, {(2, 1): 1}, {(-1, 0): 1}])
def test_invalid_entries_are_rejected(entries):
    with pytest.raises(ValueError):
        BettiTable(entries)


def test_regularity_and_projdim():
    assert (P3.regularity, P3.projdim) == (2, 2)
    assert (TWO_CORNERS.regularity, TWO_CORNERS.projdim) == (2, 2)


def test_zero_module_has_no_regularity():
    with pytest.raises(ValueError):
        BettiTable({}).regularity


def test_single_extremal_table():
    assert _positions(P3.extremal()) == [(2, 4, 1)]
    assert P3.is_single_extremal()


def test_two_extremal_entries():
    assert _positions(TWO_CORNERS.extremal()) == [(1, 3, 1), (2, 3, 1)]
    d = TWO_CORNERS.distinguished()
    assert (d.regularity.i, d.regularity.j) == (1, 3)
    assert (d.projdim.i, d.projdim.j) == (2, 3)
    assert not TWO_CORNERS.is_single_extremal()


def test_polynomial():
    assert P3.polynomial() == "1 + 2*s*t^2 + s^2*t^4"
    assert BettiTable({}).polynomial() == "0"


def test_product_of_gluing_parts():
    assert K2.product(K2).entries == P3.entries
    assert betti_polynomial_product(K2, K2).same_entries(P3)


def test_extremal_product():
    assert _positions(extremal_product(K2, K2)) == [(2, 4, 1)]
    assert extremal_product(P3, K2) == [BettiEntry(i=3, j=6, beta=1)]


def test_shift_to_ideal():
    ideal = P3.shift_to_ideal()
    assert ideal.module == "ideal"
    assert ideal.entries == {(0, 2): 2, (1, 4): 1}
    with pytest.raises(ValueError):
        ideal.shift_to_ideal()


def test_hilbert_numerator():
    assert P3.hilbert_numerator() == {0: 1, 2: -2, 4: 1}
    assert clique_betti_oracle(3).hilbert_numerator() == {0: 1, 2: -3, 3: 2}


def test_leq():
    assert K2.leq(P3)
    assert not P3.leq(K2)


def test_partial_tables_guard_unknown_entries():
    partial = P3.restricted([(2, 4), (2, 5)])
    assert not partial.is_total
    assert partial.get(2, 4) == 1
    assert partial.get(2, 5) == 0
    with pytest.raises(PartialTableError):
        partial.get(1, 2)
    with pytest.raises(PartialTableError):
        partial.regularity
    with pytest.raises(PartialTableError):
        partial.extremal()
    with pytest.raises(PartialTableError):
        partial.product(K2)
    with pytest.raises(PartialTableError):
        partial.leq(P3)


def test_render_marks_unknown_entries():
    assert "total:" in P3.render()
    assert "?" in P3.restricted([(2, 4)]).render()
    assert BettiTable({}).render() == "total: 0"


def test_render_layout():
    lines = K2.render().splitlines()
    assert lines[1].split() == ["total:", "1", "1"]
    assert lines[2].split() == ["0:", "1", "."]
    assert lines[3].split() == ["1:", ".", "1"]


def test_document_carries_analytics():
    doc = P3.to_document()
    assert doc.total
    assert (doc.reg, doc.pd) == (2, 2)
    assert _positions(doc.extremal) == [(2, 4, 1)]
    assert BettiTable.from_document(doc).same_entries(P3)


def test_partial_document():
    doc = P3.restricted([(2, 4)]).to_document()
    assert not doc.total
    assert doc.computed == [(2, 4)]
    assert doc.reg is None
    assert BettiTable.from_document(doc).computed == frozenset({(2, 4)})


def test_table_analytics():
    analytics = table_analytics(TWO_CORNERS)
    assert analytics.reg == 2
    assert analytics.pd == 2
    assert not analytics.single_extremal
    assert analytics.betti_polynomial == "1 + s*t^2 + s*t^3 + s^2*t^3"
    with pytest.raises(PartialTableError):
        table_analytics(P3.restricted([(0, 0)]))


@pytest.mark.parametrize(
    "n,entries",
    [
        (1, {(0, 0): 1}),
        (2, {(0, 0): 1, (1, 2): 1}),
        (3, {(0, 0): 1, (1, 2): 3, (2, 3): 2}),
        (4, {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}),
    ],
)
def test_clique_oracle(n, entries):
    assert clique_betti_oracle(n).entries == entries


def test_path_oracle():
    assert path_betti_oracle(3).entries == P3.entries
    assert path_betti_oracle(4).entries == {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1}


def test_oracles_need_a_vertex():
    with pytest.raises(ValueError):
        clique_betti_oracle(0)
    with pytest.raises(ValueError):
        path_betti_oracle(0)
