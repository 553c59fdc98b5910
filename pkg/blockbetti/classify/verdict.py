"""
Combinatorial classification of block graphs with a single extremal
Betti number: the cutpoint condition on G|P against the forbidden graphs
"""

import logging
from typing import List, Optional

from pydantic import BaseModel, Field

from blockbetti.classify.forbidden import ForbiddenHit, contains_forbidden
from blockbetti.core.errors import VerificationFailure
from blockbetti.graphs.blocks import (
    Decomposition,
    block_structure,
    decompose,
    require_block_graph,
)
from blockbetti.graphs.graph import Graph, connected_components, restrict_to_non_leaves

logger = logging.getLogger(__name__)


class CutpointViolation(BaseModel):
    vertex: int
    cliques: int


class CutpointCheck(BaseModel):
    """Whether every cutpoint of G|P lies in exactly two maximal cliques"""
    ok: bool
    violations: List[CutpointViolation] = Field(default_factory=list)


class ClassificationVerdict(BaseModel):
    indecomposable: bool
    forbidden: Optional[ForbiddenHit] = None
    cutpoint_condition: CutpointCheck
    predicted_single_extremal: bool
    decomposition: Optional[Decomposition] = None
    components: List["ClassificationVerdict"] = Field(default_factory=list)


def satisfies_cutpoint_condition(g: Graph) -> CutpointCheck:
    """
    Restrict to P = {v : deg v != 1} and check each cutpoint of every
    component of G|P lies in exactly two maximal cliques. Violations are
    reported with vertex names of ``g``.
    """
    restricted = restrict_to_non_leaves(g)
    violations = []
    if restricted.n:
        for component in connected_components(restricted):
            if component.n < 3:
                continue
            bs = block_structure(component)
            for v in bs.cutpoints:
                if bs.cdeg[v] != 2:
                    violations.append(
                        CutpointViolation(vertex=component.label(v), cliques=bs.cdeg[v])
                    )
    violations.sort(key=lambda x: x.vertex)
    return CutpointCheck(ok=not violations, violations=violations)


def _classify_indecomposable(g: Graph) -> ClassificationVerdict:
    hit = contains_forbidden(g)
    condition = satisfies_cutpoint_condition(g)
    if (hit is None) != condition.ok:
        raise VerificationFailure(
            "forbidden-graph test and cutpoint condition disagree",
            {
                "edges": [list(e) for e in g.edges],
                "forbidden": hit.model_dump() if hit else None,
                "cutpoint_condition": condition.model_dump(),
            },
        )
    return ClassificationVerdict(
        indecomposable=True,
        forbidden=hit,
        cutpoint_condition=condition,
        predicted_single_extremal=condition.ok,
    )


def classify(g: Graph) -> ClassificationVerdict:
    """
    Classify a connected block graph.

    For indecomposable g both characterisations are computed and must agree.
    A decomposable g gets one verdict per component; its prediction is the
    conjunction of theirs since extremal entries multiply across gluing.

    Raises:
        GraphStructureError: if g is not a connected block graph
        VerificationFailure: if the two characterisations disagree
    """
    require_block_graph(g, "classify")
    decomposition = decompose(g)
    if not decomposition.is_decomposable:
        return _classify_indecomposable(g)

    components = [_classify_indecomposable(c) for c in decomposition.components]
    logger.debug("classified %d components", len(components))
    return ClassificationVerdict(
        indecomposable=False,
        forbidden=contains_forbidden(g),
        cutpoint_condition=satisfies_cutpoint_condition(g),
        predicted_single_extremal=all(c.predicted_single_extremal for c in components),
        decomposition=decomposition,
        components=components,
    )
