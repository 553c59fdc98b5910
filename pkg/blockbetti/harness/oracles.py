"""
Oracle checks: Gröbner bases against Buchberger, monomial engines against
each other, and one field characteristic against another
"""

from typing import Dict

from blockbetti.core.errors import BudgetExceeded
from blockbetti.graphs.graph import Graph
from blockbetti.groebner.buchberger import buchberger_initial_ideal
from blockbetti.harness.base import BaseCheck, Evidence, Workbench
from blockbetti.resolutions.monomial import HochsterEngine, LatticeEngine, TaylorEngine


class GroebnerOracleCheck(BaseCheck):
    """in_<(J_G) from admissible paths equals the one from Buchberger's algorithm"""

    name = "groebner-oracle"
    description = "admissible-path initial ideal matches Buchberger"
    applies_to = "any"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        ours = bench.initial_ideal(g)
        try:
            theirs = buchberger_initial_ideal(g, bench.budgets.max_buchberger_variables)
        except BudgetExceeded as e:
            evidence.skip("buchberger", e)
            return
        evidence.expect(
            "initial_ideal", ours.to_strings(), theirs.to_strings(), "Buchberger over QQ"
        )


class EngineOraclesCheck(BaseCheck):
    """The lcm-lattice, Hochster and Taylor tables of in_<(J_G) coincide"""

    name = "engine-oracles"
    description = "monomial engines agree on the initial ideal"
    applies_to = "any"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        ideal = bench.initial_ideal(g)
        if not ideal.generators:
            evidence.note("no generators")
            return
        engines = [
            ("lattice", LatticeEngine(bench.p, bench.budgets)),
            ("lattice-order", LatticeEngine(bench.p, bench.budgets, method="order")),
            ("hochster", HochsterEngine(bench.p, bench.budgets)),
            ("taylor", TaylorEngine(bench.p, bench.budgets)),
        ]
        polynomials: Dict[str, str] = {}
        for label, engine in engines:
            try:
                polynomials[label] = engine.compute(ideal).polynomial()
            except BudgetExceeded as e:
                evidence.skip(label, e)
        evidence.record("polynomials", polynomials)
        if len(polynomials) < 2:
            evidence.note("fewer than two engines within budget")
            return
        reference = next(iter(polynomials))
        for label, polynomial in polynomials.items():
            if label != reference:
                evidence.expect(label, polynomial, polynomials[reference], f"{reference} engine")


class CharacteristicCheck(BaseCheck):
    """Tables over the working prime and the confirmation prime agree"""

    name = "characteristic"
    description = "Betti tables agree over two primes"
    applies_to = "any"

    def evaluate(self, g: Graph, bench: Workbench, evidence: Evidence) -> None:
        p, q = bench.p, bench.config.coefficients.confirm_p
        if q is None or q == p:
            evidence.note("no confirmation prime configured")
            return
        evidence.record("primes", [p, q])
        sides = (("monomial", bench.monomial_table), ("binomial", bench.binomial_table))
        for side, compute in sides:
            try:
                ours = compute(g, p=p)
                theirs = compute(g, p=q)
            except BudgetExceeded as e:
                evidence.skip(side, e)
                continue
            evidence.expect(side, ours.polynomial(), theirs.polynomial(), f"table over F_{q}")
