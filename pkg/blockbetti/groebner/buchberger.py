"""
Reduced lex Gröbner basis of J_G computed by sympy's Buchberger
implementation, used as an oracle for the admissible-path description.
"""

import logging
from typing import List

from sympy import groebner, symbols

from blockbetti.core.errors import VerificationFailure, check_budget
from blockbetti.groebner.monomials import Binomial, Monomial, MonomialIdeal
from blockbetti.graphs.graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_MAX_VARIABLES = 16


def ring_symbols(n: int):
    """x1..xn, y1..yn in lex order"""
    if n == 0:
        return ()
    xs = symbols(f"x1:{n + 1}")
    ys = symbols(f"y1:{n + 1}")
    return tuple(xs) + tuple(ys)


def buchberger_basis(g: Graph, max_variables: int = DEFAULT_MAX_VARIABLES) -> List[Binomial]:
    """
    Reduced lex Gröbner basis of J_G over QQ.

    Raises:
        BudgetExceeded: if 2n exceeds ``max_variables``
        VerificationFailure: if an element is not a binomial with
            coefficients 1 and -1
    """
    check_budget("buchberger_variables", 2 * g.n, max_variables)
    if not g.edges:
        return []
    gens = ring_symbols(g.n)
    xs, ys = gens[: g.n], gens[g.n:]
    polys = [xs[i - 1] * ys[j - 1] - xs[j - 1] * ys[i - 1] for i, j in g.edges]
    basis = groebner(polys, *gens, order="lex", domain="QQ")

    binomials = []
    for poly in basis.polys:
        terms = poly.terms(order="lex")
        coefficients = [c for _, c in terms]
        if len(terms) != 2 or coefficients[0] != 1 or coefficients[1] != -1:
            raise VerificationFailure(
                "Gröbner basis element is not a unit binomial",
                {"element": str(poly.as_expr()), "edges": [list(e) for e in g.edges]},
            )
        lead, trail = (Monomial(tuple(int(e) for e in monom)) for monom, _ in terms)
        binomials.append(Binomial(lead, trail))
    binomials.sort(key=lambda b: b.lead, reverse=True)
    logger.debug("Buchberger: %d elements for %d edges", len(binomials), len(g.edges))
    return binomials


def buchberger_initial_ideal(g: Graph, max_variables: int = DEFAULT_MAX_VARIABLES) -> MonomialIdeal:
    return MonomialIdeal(g.n, [b.lead for b in buchberger_basis(g, max_variables)])
