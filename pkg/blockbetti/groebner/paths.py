"""
Admissible paths of a labelled graph and the Gröbner basis and initial
ideal of its binomial edge ideal they describe.

A path i = i_0, i_1, ..., i_r = j with i < j is admissible when its
vertices are distinct, every internal vertex is < i or > j, and no proper
subset of its vertices carries another path from i to j.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from blockbetti.groebner.monomials import Binomial, Monomial, MonomialIdeal
from blockbetti.graphs.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmissiblePath:
    vertices: Tuple[int, ...]
    u: Monomial
    generator: Monomial

    @property
    def i(self) -> int:
        return self.vertices[0]

    @property
    def j(self) -> int:
        return self.vertices[-1]

    def binomial(self) -> Binomial:
        """u_pi * (x_i y_j - x_j y_i)"""
        n = self.u.n
        trail = self.u.times_variable(self.j - 1).times_variable(n + self.i - 1)
        return Binomial(self.generator, trail)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "u": str(self.u),
            "generator": str(self.generator),
        }


def _is_minimal(g: Graph, path: List[int]) -> bool:
    """No proper subset of the path's vertices holds another i-j path"""
    internal = path[1:-1]
    if not internal:
        return True
    G = g.to_networkx()
    i, j = path[0], path[-1]
    for w in internal:
        keep = [v for v in path if v != w]
        if nx.has_path(G.subgraph(keep), i, j):
            return False
    return True


def _monomials(n: int, path: List[int]) -> Tuple[Monomial, Monomial]:
    i, j = path[0], path[-1]
    u_positions = []
    for w in path[1:-1]:
        u_positions.append(w - 1 if w > j else n + w - 1)
    u = Monomial.from_positions(n, u_positions)
    generator = u.times_variable(i - 1).times_variable(n + j - 1)
    return u, generator


def admissible_paths(g: Graph) -> List[AdmissiblePath]:
    """
    Every admissible path of g, sorted by endpoints then vertex sequence.

    Candidates are grown as induced paths through allowed vertices; each
    complete candidate is then checked for minimality.
    """
    found: List[AdmissiblePath] = []
    for i in g.vertices:
        for j in range(i + 1, g.n + 1):
            allowed = {v for v in g.vertices if v < i or v > j}
            stack = [[i]]
            while stack:
                path = stack.pop()
                last = path[-1]
                for w in sorted(g.neighbors(last)):
                    if w == j:
                        if _is_minimal(g, path + [j]):
                            u, generator = _monomials(g.n, path + [j])
                            found.append(AdmissiblePath(tuple(path + [j]), u, generator))
                        continue
                    if w not in allowed or w in path:
                        continue
                    # only induced paths can be minimal
                    if any(g.has_edge(w, p) for p in path[:-1]):
                        continue
                    stack.append(path + [w])
    found.sort(key=lambda p: (p.i, p.j, p.vertices))
    logger.debug("found %d admissible paths on %d vertices", len(found), g.n)
    return found


def admissible_basis(g: Graph) -> List[Binomial]:
    """The reduced Gröbner basis {u_pi f_ij} in lex order"""
    return [p.binomial() for p in admissible_paths(g)]


def initial_ideal(g: Graph) -> MonomialIdeal:
    """in_<(J_G), minimally generated by the x_i y_j u_pi"""
    return MonomialIdeal(g.n, [p.generator for p in admissible_paths(g)])


def binomial_generators(g: Graph) -> List[Binomial]:
    """x_i y_j - x_j y_i for every edge {i, j} with i < j"""
    result = []
    for i, j in g.edges:
        lead = Monomial.from_positions(g.n, [i - 1, g.n + j - 1])
        trail = Monomial.from_positions(g.n, [j - 1, g.n + i - 1])
        result.append(Binomial(lead, trail))
    return result
