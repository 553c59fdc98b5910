"""
Checks on decomposable block graphs: the Betti polynomial product, the
extremal entry of the glued graph and the extremal product rule
"""

from math import prod
from typing import List, Optional

from blockbetti.core.config import Config
from blockbetti.core.errors import BudgetExceeded, GraphStructureError
from blockbetti.graphs.blocks import (
    decompose,
    require_block_graph,
    split_at,
    splitting_vertices,
)
from blockbetti.graphs.graph import Graph
from blockbetti.groebner.separation import support_split
from blockbetti.harness.base import BaseCheck, Evidence, Report, Workbench, quadrant
from blockbetti.harness.theorem_main import assert_extremal_entry
from blockbetti.resolutions.table import BettiEntry, extremal_product


def _entries(entries: List[BettiEntry]) -> List[List[int]]:
    return [[e.i, e.j, e.beta] for e in entries]


class PropProductCheck(BaseCheck):
    """B_{S/J_G}(s,t) = B_{S/J_G1}(s,t) B_{S/J_G2}(s,t) for a binary split"""

    name = "prop-product"
    description = "Betti polynomial of a gluing is the product of the parts"
    applies_to = "decomposable"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        v = splitting_vertices(g)[0]
        g1, g2 = split_at(g, v)
        evidence.record("split_vertex", v)

        split = support_split(g, v)
        evidence.require("support_separation", split.ok, "; ".join(split.violations))

        try:
            whole = bench.binomial_table(g)
            left = bench.binomial_table(g1)
            right = bench.binomial_table(g2)
        except BudgetExceeded as e:
            evidence.skip("binomial", e)
            return
        expected = left.product(right)
        evidence.record("parts", [left.polynomial(), right.polynomial()])
        evidence.expect(
            "betti_polynomial",
            whole.polynomial(),
            expected.polynomial(),
            "product of the Betti polynomials of G1 and G2",
        )


class CorollaryProductCheck(BaseCheck):
    """
    For G = G_1 u ... u G_s glued at free vertices, beta at homological
    degree n-1 and internal degree (n-1) + sum i(G_t) + s equals
    prod (f(G_t) - 1) and is extremal.
    """

    name = "corollary-product"
    description = "extremal entry of a decomposable graph from its components"
    applies_to = "decomposable"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        d = decompose(g)
        parts = [bench.block_structure(c) for c in d.components]
        n, s = g.n, d.s
        degree = (n - 1) + sum(p.i for p in parts) + s
        printed = (n - 1) + bench.block_structure(g).i + s
        value = prod(p.f - 1 for p in parts)
        evidence.record("s", s)
        evidence.record("components", [[p.f, p.i] for p in parts])
        evidence.record("degree", degree)
        evidence.record("printed_degree", printed)
        if printed != degree:
            evidence.note(
                f"the printed exponent (n-1)+i(G)+s gives {printed}; "
                f"the table places the entry at {degree}"
            )

        target = (n - 1, degree)
        window = quadrant(n, n - 1, degree - n + 1)
        if printed <= 2 * n:
            window |= {(n - 1, printed)}
        try:
            table = bench.binomial_total_or_window(g, window)
        except BudgetExceeded as e:
            evidence.skip("binomial", e)
            return
        assert_extremal_entry(
            evidence, "binomial", table, target, value, "product of f(G_t) - 1 over the components"
        )
        if printed != degree and printed <= 2 * n:
            evidence.record(f"binomial.beta[{n - 1},{printed}]", table.get(n - 1, printed))


class ExtremalProductCheck(BaseCheck):
    """
    The products of extremal entries of G1 and G2 are extremal in G, and the
    distinguished entries of G are products of those of G1 and G2.
    """

    name = "extremal-product"
    description = "extremal and distinguished entries multiply across a gluing"
    applies_to = "decomposable"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        g1, g2 = split_at(g, splitting_vertices(g)[0])
        try:
            whole = bench.binomial_table(g)
            left = bench.binomial_table(g1)
            right = bench.binomial_table(g2)
        except BudgetExceeded as e:
            evidence.skip("binomial", e)
            return

        predicted = extremal_product(left, right)
        actual = whole.extremal()
        evidence.record("predicted", _entries(predicted))
        evidence.record("extremal", _entries(actual))
        missing = [e for e in predicted if e not in actual]
        evidence.require("predicted_subset", not missing, f"missing {_entries(missing)}")

        d, d1, d2 = whole.distinguished(), left.distinguished(), right.distinguished()
        for kind in ("regularity", "projdim"):
            a, b = getattr(d1, kind), getattr(d2, kind)
            evidence.expect(
                f"distinguished.{kind}",
                [getattr(d, kind).i, getattr(d, kind).j, getattr(d, kind).beta],
                [a.i + b.i, a.j + b.j, a.beta * b.beta],
                "product of the distinguished entries of G1 and G2",
            )


def check_prop_product(g: Graph, config: Optional[Config] = None) -> Report:
    """
    Raises:
        GraphStructureError: if g is not a decomposable block graph
    """
    _require_decomposable(g, "check_prop_product")
    return PropProductCheck().run(g, Workbench(config))


def check_corollary_product(g: Graph, config: Optional[Config] = None) -> Report:
    """
    Raises:
        GraphStructureError: if g is not a decomposable block graph
    """
    _require_decomposable(g, "check_corollary_product")
    return CorollaryProductCheck().run(g, Workbench(config))


def _require_decomposable(g: Graph, operation: str) -> None:
    require_block_graph(g, operation)
    if not decompose(g).is_decomposable:
        raise GraphStructureError(
            f"{operation} needs a decomposable graph; use the theorem-main check instead"
        )
