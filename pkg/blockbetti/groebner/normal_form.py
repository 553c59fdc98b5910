"""
Normal forms modulo J_G.

Every element of the reduced basis is u (lead - trail) with coefficients
+1 and -1, so the normal form of a monomial is a single standard monomial
with coefficient 1. Leads are squarefree, so divisibility reduces to a
support test.
"""

import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from blockbetti.core.errors import BudgetExceeded
from blockbetti.groebner.buchberger import DEFAULT_MAX_VARIABLES, buchberger_basis
from blockbetti.groebner.monomials import Binomial, Exponents, Monomial, MonomialIdeal
from blockbetti.groebner.paths import admissible_basis
from blockbetti.graphs.graph import Graph

logger = logging.getLogger(__name__)


class ReducedBasis:
    """Rewriting system lead -> trail for a reduced binomial Gröbner basis"""

    def __init__(self, n: int, binomials: List[Binomial], source: str):
        self.n = n
        self.source = source
        self.binomials = list(binomials)
        self._rules: List[Tuple[int, Exponents, Exponents]] = []
        for b in self.binomials:
            if not b.lead.is_squarefree():
                raise ValueError(f"lead term {b.lead} is not squarefree")
            self._rules.append((b.lead.support, b.lead.exponents, b.trail.exponents))
        self.initial_ideal = MonomialIdeal(n, [b.lead for b in self.binomials])
        self._lead_masks = self.initial_ideal.masks()
        self._cache: Dict[Exponents, Exponents] = {}

    @classmethod
    def from_buchberger(
        cls, g: Graph, max_variables: int = DEFAULT_MAX_VARIABLES
    ) -> "ReducedBasis":
        return cls(g.n, buchberger_basis(g, max_variables), "buchberger")

    @classmethod
    def from_admissible_paths(cls, g: Graph) -> "ReducedBasis":
        return cls(g.n, admissible_basis(g), "admissible-paths")

    @classmethod
    def for_graph(
        cls, g: Graph, max_buchberger_variables: int = DEFAULT_MAX_VARIABLES
    ) -> "ReducedBasis":
        """Buchberger when within budget, the admissible-path basis otherwise"""
        try:
            return cls.from_buchberger(g, max_buchberger_variables)
        except BudgetExceeded:
            logger.debug("using admissible-path basis for %d vertices", g.n)
            return cls.from_admissible_paths(g)

    @staticmethod
    def _mask(exps: Exponents) -> int:
        mask = 0
        for pos, e in enumerate(exps):
            if e:
                mask |= 1 << pos
        return mask

    def is_standard(self, exps: Exponents) -> bool:
        mask = self._mask(exps)
        return not any(lead & mask == lead for lead in self._lead_masks)

    def reduce(self, exps: Exponents) -> Exponents:
        """Standard monomial congruent to ``exps`` (coefficient 1)"""
        cached = self._cache.get(exps)
        if cached is not None:
            return cached
        current = exps
        while True:
            mask = self._mask(current)
            for lead_mask, lead, trail in self._rules:
                if lead_mask & mask == lead_mask:
                    current = tuple(c - a + b for c, a, b in zip(current, lead, trail))
                    break
            else:
                break
        self._cache[exps] = current
        return current

    def normal_form(self, m: Monomial) -> Monomial:
        return Monomial(self.reduce(m.exponents))


def normal_form(
    m: Monomial,
    variable: int,
    g: Graph,
    p: int = 2,
    basis: Optional[ReducedBasis] = None,
) -> Dict[Monomial, int]:
    """
    Normal form of z * m modulo J_G as {standard monomial: coefficient}.

    Args:
        m: A standard monomial
        variable: Exponent position of z (x_v at v-1, y_v at n+v-1)
        g: The graph
        p: Field characteristic; the coefficient is 1 in every field
        basis: Reduced basis to reuse; built from g when omitted
    """
    basis = basis or ReducedBasis.for_graph(g)
    result = basis.normal_form(m.times_variable(variable))
    return {result: 1}


def standard_monomials(
    g: Graph, degree: int, basis: Optional[ReducedBasis] = None
) -> List[Monomial]:
    """Degree-``degree`` monomials outside in_<(J_G), descending in lex"""
    basis = basis or ReducedBasis.for_graph(g)
    result = []
    for positions in combinations_with_replacement(range(2 * g.n), degree):
        m = Monomial.from_positions(g.n, positions)
        if basis.is_standard(m.exponents):
            result.append(m)
    return sorted(result, reverse=True)


def hilbert_function(g: Graph, degree: int, basis: Optional[ReducedBasis] = None) -> int:
    return len(standard_monomials(g, degree, basis))
