"""
Restriction check: Betti numbers of an induced subgraph's ideal are
bounded by those of the whole graph
"""

from typing import Iterable, List, Optional

from blockbetti.core.config import Config
from blockbetti.core.errors import BudgetExceeded, GraphStructureError
from blockbetti.graphs.graph import Graph, induced_subgraph
from blockbetti.harness.base import BaseCheck, Evidence, Report, Workbench


class RestrictionCheck(BaseCheck):
    """
    beta_{i,j}(J_{G|W}) <= beta_{i,j}(J_G) for induced subgraphs G|W.

    With no explicit vertex sets every W = V - {v} is tried, plus W = V.
    """

    name = "matsuda-murai"
    description = "induced subgraphs have entrywise smaller Betti tables"
    applies_to = "any"

    def __init__(self, subsets: Optional[List[List[int]]] = None):
        self.subsets = subsets

    def _subsets(self, g: Graph) -> Iterable[List[int]]:
        if self.subsets is not None:
            return self.subsets
        everything = list(g.vertices)
        return [everything] + [[u for u in everything if u != v] for v in everything]

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        try:
            whole = bench.binomial_table(g).shift_to_ideal()
        except BudgetExceeded as e:
            evidence.skip("binomial", e)
            return
        for w in self._subsets(g):
            if not w:
                continue
            key = "W=" + ",".join(str(v) for v in sorted(w))
            sub = induced_subgraph(g, w)
            try:
                part = bench.binomial_table(sub).shift_to_ideal()
            except BudgetExceeded as e:
                evidence.skip(key, e)
                continue
            evidence.require(
                key, part.leq(whole), f"{part.polynomial()} against {whole.polynomial()}"
            )
            if len(w) == g.n:
                evidence.require(f"{key} equality", part.same_entries(whole))


def check_matsuda_murai(g: Graph, w: Iterable[int], config: Optional[Config] = None) -> Report:
    """
    Raises:
        GraphStructureError: if W is empty or names a vertex outside g
    """
    w = sorted(set(w))
    if not w or w[0] < 1 or w[-1] > g.n:
        raise GraphStructureError(f"vertex set {w} is not a nonempty subset of 1..{g.n}")
    return RestrictionCheck([w]).run(g, Workbench(config))
