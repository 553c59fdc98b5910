"""
Checks on indecomposable block graphs: the extremal entry at homological
degree n-1, the projective dimension, and the leaf induction step
"""

from typing import Optional, Tuple

from blockbetti.core.config import Config
from blockbetti.core.errors import BudgetExceeded, GraphStructureError
from blockbetti.graphs.blocks import decompose, leaf_blocks, leaf_surgery, require_block_graph
from blockbetti.graphs.graph import Graph
from blockbetti.harness.base import BaseCheck, Evidence, Report, Workbench, quadrant
from blockbetti.resolutions.table import Bidegree, BettiTable

SIDES = ("monomial", "binomial", "both")


def assert_extremal_entry(
    evidence: Evidence,
    side: str,
    table: BettiTable,
    target: Bidegree,
    value: int,
    provenance: str,
) -> None:
    """Value at ``target`` and that nothing in the table blocks it"""
    i, j = target
    evidence.expect(f"{side}.beta[{i},{j}]", table.get(i, j), value, provenance)
    if table.is_total:
        extremal = [(e.i, e.j) for e in table.extremal()]
        evidence.require(f"{side}.extremal", target in extremal, f"extremal entries {extremal}")
        return
    blockers = sorted(
        (k, m) for k, m in table.entries if (k, m) != target and k >= i and m - k >= j - i
    )
    evidence.require(f"{side}.extremal", not blockers, f"blocked by {blockers}")
    evidence.note(f"{side} side computed on a window of {len(table.computed)} bidegrees")


class TheoremMainCheck(BaseCheck):
    """beta_{n-1, n+i(G)} = f(G) - 1 and is extremal, for S/in(J_G) and S/J_G"""

    name = "theorem-main"
    description = "extremal entry f(G)-1 at (n-1, n+i(G)) on both sides"
    applies_to = "indecomposable"

    def __init__(self, sides: str = "both"):
        if sides not in SIDES:
            raise ValueError(f"sides must be one of {SIDES}")
        self.sides = sides

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        bs = bench.block_structure(g)
        n = g.n
        target = (n - 1, n + bs.i)
        provenance = f"f(G) - 1 with f(G) = {bs.f}"
        evidence.record("target", list(target))

        if self.sides in ("monomial", "both"):
            try:
                table = bench.monomial_table(g)
            except BudgetExceeded as e:
                evidence.skip("monomial", e)
            else:
                assert_extremal_entry(evidence, "monomial", table, target, bs.f - 1, provenance)
                evidence.expect(
                    "monomial.projdim", table.projdim, n - 1, "pd(S/in(J_G)) = n - 1"
                )

        if self.sides in ("binomial", "both"):
            try:
                table = bench.binomial_total_or_window(g, quadrant(n, n - 1, bs.i + 1))
            except BudgetExceeded as e:
                evidence.skip("binomial", e)
            else:
                assert_extremal_entry(evidence, "binomial", table, target, bs.f - 1, provenance)


class ProjdimCheck(BaseCheck):
    """pd(S/J_G) = pd(S/in(J_G)) = n - 1"""

    name = "projdim"
    description = "projective dimension n-1 on every total table"
    applies_to = "indecomposable"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        sides = (("monomial", bench.monomial_table), ("binomial", bench.binomial_table))
        for side, compute in sides:
            try:
                table = compute(g)
            except BudgetExceeded as e:
                evidence.skip(side, e)
                continue
            evidence.expect(f"{side}.projdim", table.projdim, g.n - 1, "n - 1")


class LeafInductionCheck(BaseCheck):
    """
    The induction step on a leaf block with cutpoint i: i(G') = i(H) =
    i(G) - 1, f(H) = f(G), q >= 2, and beta_{n-1, n+i(G)}(S/J_G) equals
    beta_{n-2, (n-2)+i(H)+1}(S'/J_H).
    """

    name = "leaf-induction"
    description = "leaf surgery invariants and the shifted Betti number of H"
    applies_to = "indecomposable"

    def applies(self, g: Graph, bench: Workbench) -> bool:
        return super().applies(g, bench) and bench.block_structure(g).i > 0

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        bs = bench.block_structure(g)
        leaf = leaf_blocks(g)[0]
        surgery = leaf_surgery(g, leaf)
        prime = bench.block_structure(surgery.g_prime)
        h = bench.block_structure(surgery.h)
        evidence.record("leaf", leaf)
        evidence.record("cutpoint", surgery.cutpoint)
        evidence.expect("i(G')", prime.i, bs.i - 1, "i(G) - 1")
        evidence.expect("i(H)", h.i, bs.i - 1, "i(G) - 1")
        evidence.expect("f(H)", h.f, bs.f, "f(G)")
        evidence.record("q", surgery.q)
        evidence.require("q>=2", surgery.q >= 2, f"q = {surgery.q}")

        n = g.n
        left: Tuple[int, int] = (n - 1, n + bs.i)
        right: Tuple[int, int] = (n - 2, n - 1 + h.i)
        try:
            beta_g = bench.binomial_table(g, frozenset([left])).get(*left)
            beta_h = bench.binomial_table(surgery.h, frozenset([right])).get(*right)
        except BudgetExceeded as e:
            evidence.skip("binomial", e)
            return
        evidence.record(f"beta_G[{left[0]},{left[1]}]", beta_g)
        evidence.expect(
            f"beta_H[{right[0]},{right[1]}]", beta_h, beta_g, "beta_{n-1,n+i(G)}(S/J_G)"
        )


def check_theorem_main(
    g: Graph, sides: str = "both", config: Optional[Config] = None
) -> Report:
    """
    Raises:
        GraphStructureError: if g is not a connected indecomposable block graph
    """
    require_block_graph(g, "check_theorem_main")
    if decompose(g).is_decomposable:
        raise GraphStructureError(
            "graph is decomposable; use the corollary-product check instead"
        )
    return TheoremMainCheck(sides).run(g, Workbench(config))
