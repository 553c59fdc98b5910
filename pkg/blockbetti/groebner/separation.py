"""
Support separation of the initial ideal across a gluing vertex
"""

from typing import Dict, List

from pydantic import BaseModel, Field

from blockbetti.core.errors import GraphStructureError
from blockbetti.graphs.blocks import split_sides
from blockbetti.graphs.graph import Graph, relabel
from blockbetti.groebner.monomials import Monomial, MonomialIdeal
from blockbetti.groebner.paths import initial_ideal


class SupportSplit(BaseModel):
    """
    in_<(J_G) against in_<(J_G1) + in_<(J_G2) after relabelling so that
    V(G1) = [1, m] and V(G2) = [m, n].
    """
    m: int
    relabelling: Dict[int, int]
    left: List[str]
    right: List[str]
    whole: List[str]
    ok: bool
    violations: List[str] = Field(default_factory=list)


def _separating_labels(g: Graph, v: int) -> Dict[int, int]:
    sides = split_sides(g, v)
    if sides is None:
        raise GraphStructureError(f"graph does not decompose at vertex {v}")
    left = [u for u in sides[0] if u != v]
    right = [u for u in sides[1] if u != v]
    order = left + [v] + right
    return {old: new for new, old in enumerate(order, start=1)}


def _shift(ideal: MonomialIdeal, offset: int, n: int) -> List[Monomial]:
    """Embed generators of a k-vertex ring into vertices offset+1..offset+k of an n-vertex ring"""
    k = ideal.n
    result = []
    for gen in ideal.generators:
        positions = []
        for pos, e in enumerate(gen.exponents):
            if e:
                target = pos + offset if pos < k else n + (pos - k) + offset
                positions.extend([target] * e)
        result.append(Monomial.from_positions(n, positions))
    return result


def support_split(g: Graph, m: int) -> SupportSplit:
    """
    Check the gluing at vertex ``m`` of g separates the initial ideal.

    Raises:
        GraphStructureError: if g does not decompose at m
    """
    mapping = _separating_labels(g, m)
    h = relabel(g, mapping)
    glue_at = mapping[m]
    left_graph = Graph.from_edges(glue_at, [e for e in h.edges if e[1] <= glue_at])
    right_graph = Graph.from_edges(
        h.n - glue_at + 1,
        [(u - glue_at + 1, v - glue_at + 1) for u, v in h.edges if u >= glue_at],
    )
    left = _shift(initial_ideal(left_graph), 0, h.n)
    right = _shift(initial_ideal(right_graph), glue_at - 1, h.n)
    whole = initial_ideal(h)

    n = h.n
    violations = []
    left_allowed = {pos for pos in range(glue_at - 1)} | {n + pos for pos in range(glue_at)}
    right_allowed = {pos for pos in range(glue_at - 1, n)} | {n + pos for pos in range(glue_at, n)}
    for gen, allowed in [(x, left_allowed) for x in left] + [(x, right_allowed) for x in right]:
        used = {pos for pos, e in enumerate(gen.exponents) if e}
        if not used <= allowed:
            violations.append(f"{gen} crosses the gluing vertex")
    if MonomialIdeal(n, left + right) != whole:
        violations.append("in(J_G) differs from in(J_G1) + in(J_G2)")

    return SupportSplit(
        m=glue_at,
        relabelling=mapping,
        left=[str(x) for x in left],
        right=[str(x) for x in right],
        whole=whole.to_strings(),
        ok=not violations,
        violations=violations,
    )
