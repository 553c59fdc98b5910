"""
Base interface for verification checks, the Report model and the shared
per-graph computation cache
"""

import json
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, Field

from blockbetti.core.config import Config
from blockbetti.core.errors import BudgetExceeded
from blockbetti.graphs.blocks import BlockStructure, block_structure, decompose, is_block_graph
from blockbetti.graphs.graph import Graph, graph_hash
from blockbetti.groebner.monomials import MonomialIdeal
from blockbetti.groebner.paths import initial_ideal
from blockbetti.resolutions.koszul import KoszulEngine
from blockbetti.resolutions.monomial import LatticeEngine
from blockbetti.resolutions.table import Bidegree, BettiTable


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED_BUDGET = "skipped:budget"


class Expected(BaseModel):
    """An expected value and where it comes from"""
    value: Any
    provenance: str


class InstanceDescriptor(BaseModel):
    """Everything needed to reproduce a report"""
    graph_hash: str
    name: Optional[str] = None
    n: int
    edges: List[Tuple[int, int]]
    f: Optional[int] = None
    i: Optional[int] = None
    s: Optional[int] = None
    seed: Optional[int] = None
    p: int = 2

    @classmethod
    def for_graph(
        cls, g: Graph, p: int = 2, name: Optional[str] = None, seed: Optional[int] = None
    ) -> "InstanceDescriptor":
        f = i = s = None
        if g.n > 0 and g.is_connected() and is_block_graph(g):
            bs = block_structure(g)
            f, i = bs.f, bs.i
            s = decompose(g).s
        return cls(
            graph_hash=graph_hash(g),
            name=name,
            n=g.n,
            edges=list(g.edges),
            f=f,
            i=i,
            s=s,
            seed=seed,
            p=p,
        )

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


class SkippedSide(BaseModel):
    side: str
    limit: str
    value: int
    maximum: int


class Report(BaseModel):
    """Outcome of one claim on one instance"""
    claim: str
    instance: InstanceDescriptor
    verdict: Verdict
    computed: Dict[str, Any] = Field(default_factory=dict)
    expected: Dict[str, Expected] = Field(default_factory=dict)
    failures: List[str] = Field(default_factory=list)
    skipped: List[SkippedSide] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    wall_time: Optional[float] = None

    @property
    def sort_key(self) -> Tuple[str, str, str]:
        return (self.instance.graph_hash, self.claim, self.instance.name or "")

    def to_json_line(self, include_timing: bool = False) -> str:
        exclude = None if include_timing else {"wall_time"}
        return json.dumps(
            self.model_dump(mode="json", exclude=exclude), sort_keys=True, ensure_ascii=False
        )


class Evidence:
    """Collects assertions, budget skips and notes while a check runs"""

    def __init__(self):
        self.computed: Dict[str, Any] = {}
        self.expected: Dict[str, Expected] = {}
        self.failures: List[str] = []
        self.skipped: List[SkippedSide] = []
        self.notes: List[str] = []
        self.checked = 0

    def expect(self, key: str, computed: Any, expected: Any, provenance: str) -> bool:
        self.computed[key] = computed
        self.expected[key] = Expected(value=expected, provenance=provenance)
        self.checked += 1
        if computed != expected:
            self.failures.append(f"{key}: computed {computed!r}, expected {expected!r}")
            return False
        return True

    def require(self, key: str, holds: bool, detail: str = "") -> bool:
        self.computed[key] = holds
        self.checked += 1
        if not holds:
            self.failures.append(f"{key} does not hold" + (f": {detail}" if detail else ""))
        return holds

    def record(self, key: str, value: Any) -> None:
        self.computed[key] = value

    def skip(self, side: str, error: BudgetExceeded) -> None:
        self.skipped.append(
            SkippedSide(side=side, limit=error.limit, value=error.value, maximum=error.maximum)
        )

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def vacuous(self) -> bool:
        """Nothing was asserted and nothing was skipped"""
        return self.checked == 0 and not self.skipped

    @property
    def verdict(self) -> Verdict:
        if self.failures:
            return Verdict.FAIL
        if self.checked == 0 and self.skipped:
            return Verdict.SKIPPED_BUDGET
        return Verdict.PASS


def quadrant(n: int, k0: int, l0: int) -> FrozenSet[Bidegree]:
    """
    Bidegrees (k, k+l) with k >= k0, l >= l0 and k+l <= 2n: every
    position that could block an extremal entry at (k0, k0+l0).
    """
    return frozenset(
        (k, k + l) for k in range(k0, 2 * n + 1) for l in range(l0, 2 * n - k + 1)
    )


class Workbench:
    """Per-process cache of tables and combinatorial data, keyed by graph"""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()
        self._initial: Dict[Graph, MonomialIdeal] = {}
        self._blocks: Dict[Graph, BlockStructure] = {}
        self._tables: Dict[Tuple[str, int, Graph, Optional[FrozenSet[Bidegree]]], BettiTable] = {}

    @property
    def p(self) -> int:
        return self.config.p

    @property
    def budgets(self):
        return self.config.budgets

    def block_structure(self, g: Graph) -> BlockStructure:
        if g not in self._blocks:
            self._blocks[g] = block_structure(g)
        return self._blocks[g]

    def initial_ideal(self, g: Graph) -> MonomialIdeal:
        if g not in self._initial:
            self._initial[g] = initial_ideal(g)
        return self._initial[g]

    def monomial_table(
        self, g: Graph, window: Optional[FrozenSet[Bidegree]] = None, p: Optional[int] = None
    ) -> BettiTable:
        """Table of S/in_<(J_G)"""
        p = self.p if p is None else p
        key = ("monomial", p, g, window)
        if key not in self._tables:
            engine = LatticeEngine(p, self.budgets)
            self._tables[key] = engine.compute(self.initial_ideal(g), window)
        return self._tables[key]

    def binomial_table(
        self, g: Graph, window: Optional[FrozenSet[Bidegree]] = None, p: Optional[int] = None
    ) -> BettiTable:
        """Table of S/J_G"""
        p = self.p if p is None else p
        key = ("binomial", p, g, window)
        if key not in self._tables:
            self._tables[key] = KoszulEngine(p, self.budgets).compute(g, window)
        return self._tables[key]

    def binomial_total_or_window(
        self, g: Graph, window: FrozenSet[Bidegree]
    ) -> BettiTable:
        """The total table when in budget, the windowed one otherwise"""
        try:
            return self.binomial_table(g)
        except BudgetExceeded:
            return self.binomial_table(g, window)


class BaseCheck(ABC):
    """
    Abstract base class for verification checks.

    Each check states one claim about block graphs and turns a graph into
    a Report.
    """

    name: str = "base"
    description: str = "Base check"
    applies_to: str = "any"  # "indecomposable", "decomposable" or "any"

    def applies(self, g: Graph, bench: Workbench) -> bool:
        """Whether the claim's hypotheses hold for g"""
        if self.applies_to == "any":
            return True
        if g.n < 2 or not g.is_connected() or not is_block_graph(g):
            return False
        decomposable = decompose(g).is_decomposable
        return decomposable if self.applies_to == "decomposable" else not decomposable

    @abstractmethod
    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        """
        Run the claim on g, recording into ``evidence``.

        Budget aborts on one side are recorded with ``evidence.skip`` and
        never escape.
        """
        pass

    def run(
        self,
        g: Graph,
        bench: Workbench,
        name: Optional[str] = None,
        seed: Optional[int] = None,
    ) -> Report:
        evidence = Evidence()
        self.evaluate(g, bench, evidence)
        if evidence.vacuous and not evidence.notes:
            evidence.note("nothing was compared")
        return Report(
            claim=self.name,
            instance=InstanceDescriptor.for_graph(g, bench.p, name=name, seed=seed),
            verdict=evidence.verdict,
            computed=evidence.computed,
            expected=evidence.expected,
            failures=evidence.failures,
            skipped=evidence.skipped,
            notes=evidence.notes,
        )
