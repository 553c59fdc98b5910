"""
Checks on the single-extremal classification, the regularity bound, and
the comparison between S/J_G and S/in(J_G)
"""

from typing import Optional

from blockbetti.classify.verdict import ClassificationVerdict, classify
from blockbetti.core.config import Config
from blockbetti.core.errors import BudgetExceeded, GraphStructureError, VerificationFailure
from blockbetti.graphs.blocks import decompose, require_block_graph
from blockbetti.graphs.graph import Graph
from blockbetti.harness.base import BaseCheck, Evidence, Report, Workbench, quadrant

DEPTHS = ("combinatorial", "monomial", "binomial")


def _classification(g: Graph, evidence: Evidence) -> Optional[ClassificationVerdict]:
    """Run classify, turning a disagreement into a failed assertion"""
    try:
        verdict = classify(g)
    except VerificationFailure as e:
        evidence.record("disagreement", e.payload)
        evidence.require("forbidden_iff_cutpoint", False, str(e))
        return None
    evidence.record("forbidden", verdict.forbidden.model_dump() if verdict.forbidden else None)
    evidence.record(
        "cutpoint_violations", [v.model_dump() for v in verdict.cutpoint_condition.violations]
    )
    evidence.record("predicted_single_extremal", verdict.predicted_single_extremal)
    evidence.require("forbidden_iff_cutpoint", True)
    return verdict


class HopeCombinatorialCheck(BaseCheck):
    """No forbidden induced T-graph iff every cutpoint of G|P lies in two cliques"""

    name = "hope-ii-iii"
    description = "forbidden-subgraph test agrees with the cutpoint condition"
    applies_to = "indecomposable"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        _classification(g, evidence)


class HopeCheck(BaseCheck):
    """
    reg(S/J_G) >= i(G) + 1, and S/J_G has one extremal Betti number exactly
    when the classification predicts it.

    The monomial depth records the sandwich reg(J) <= reg(in J) = i(G)+1
    when S/in(J_G) has a single extremal entry. The binomial depth counts
    extremal entries of the total table; when that is over budget and the
    prediction is negative, a window over strands i(G)+2 and above looks
    for an entry past the bound.
    """

    name = "hope"
    description = "regularity bound and single-extremal prediction"
    applies_to = "indecomposable"

    def __init__(self, depth: str = "binomial"):
        if depth not in DEPTHS:
            raise ValueError(f"depth must be one of {DEPTHS}")
        self.depth = depth

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        verdict = _classification(g, evidence)
        if verdict is None or self.depth == "combinatorial":
            return
        i = bench.block_structure(g).i
        predicted = verdict.predicted_single_extremal
        evidence.record("i", i)

        try:
            monomial = bench.monomial_table(g)
        except BudgetExceeded as e:
            evidence.skip("monomial", e)
        else:
            evidence.record("monomial.regularity", monomial.regularity)
            evidence.record("monomial.extremal", len(monomial.extremal()))
            evidence.require(
                "monomial.regularity>=i+1",
                monomial.regularity >= i + 1,
                f"reg = {monomial.regularity}, i(G) = {i}",
            )
            if monomial.is_single_extremal():
                evidence.record("binomial.regularity_from_sandwich", i + 1)
                evidence.note("single extremal entry for S/in(J_G) forces reg(S/J_G) = i(G) + 1")
        if self.depth == "monomial":
            return

        try:
            binomial = bench.binomial_table(g)
        except BudgetExceeded as e:
            if predicted:
                evidence.skip("binomial", e)
                return
            self._stretch(g, i, bench, evidence)
            return
        evidence.record("binomial.regularity", binomial.regularity)
        evidence.record("binomial.extremal", [[x.i, x.j, x.beta] for x in binomial.extremal()])
        evidence.require(
            "binomial.regularity>=i+1",
            binomial.regularity >= i + 1,
            f"reg = {binomial.regularity}, i(G) = {i}",
        )
        evidence.expect(
            "binomial.single_extremal",
            binomial.is_single_extremal(),
            predicted,
            "classification of G",
        )

    @staticmethod
    def _stretch(g: Graph, i: int, bench: Workbench, evidence: Evidence) -> None:
        try:
            table = bench.binomial_table(g, quadrant(g.n, 0, i + 2))
        except BudgetExceeded as e:
            evidence.skip("binomial-window", e)
            evidence.note("reg(S/J_G) > i(G) + 1 not certified: window over budget")
            return
        beyond = sorted(table.entries)
        evidence.record("binomial.entries_beyond_bound", [list(b) for b in beyond])
        if evidence.require(
            "binomial.regularity>i+1", bool(beyond), "no entry on strands i(G)+2 and above"
        ):
            evidence.note("reg(S/J_G) > i(G) + 1 verified on a window")


class SemicontinuityCheck(BaseCheck):
    """beta_{i,j}(S/J_G) <= beta_{i,j}(S/in(J_G)) entrywise"""

    name = "semicontinuity"
    description = "Betti numbers of J_G are bounded by those of in(J_G)"
    applies_to = "any"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        try:
            monomial = bench.monomial_table(g)
            binomial = bench.binomial_table(g)
        except BudgetExceeded as e:
            evidence.skip("both", e)
            return
        evidence.require(
            "binomial<=monomial",
            binomial.leq(monomial),
            f"{binomial.polynomial()} against {monomial.polynomial()}",
        )


class ConjectureExtremalCheck(BaseCheck):
    """Extremal entries of S/J_G and S/in(J_G) agree in position and value"""

    name = "conjecture-extremal"
    description = "extremal Betti numbers coincide for J_G and in(J_G)"
    applies_to = "any"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        try:
            monomial = bench.monomial_table(g)
            binomial = bench.binomial_table(g)
        except BudgetExceeded as e:
            evidence.skip("both", e)
            return
        ours = [[x.i, x.j, x.beta] for x in binomial.extremal()]
        theirs = [[x.i, x.j, x.beta] for x in monomial.extremal()]
        if evidence.expect("binomial.extremal", ours, theirs, "extremal entries of S/in(J_G)"):
            return
        evidence.note("COUNTEREXAMPLE: extremal entries of J_G and in(J_G) differ")


def check_hope(g: Graph, depth: str = "binomial", config: Optional[Config] = None) -> Report:
    """
    Raises:
        GraphStructureError: if g is not a connected indecomposable block graph
    """
    require_block_graph(g, "check_hope")
    if decompose(g).is_decomposable:
        raise GraphStructureError("check_hope needs an indecomposable graph")
    return HopeCheck(depth).run(g, Workbench(config))
