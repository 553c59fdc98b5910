"""
Betti table engines for monomial and binomial edge ideals
"""

from typing import Dict, List, Optional, Type

from blockbetti.core.config import Budgets
from blockbetti.core.errors import UnknownNameError
from blockbetti.resolutions.base import BaseEngine, Window
from blockbetti.resolutions.cliques import clique_betti_oracle, path_betti_oracle
from blockbetti.resolutions.koszul import (
    KoszulEngine,
    betti_binomial,
    hilbert_numerator_from_counts,
)
from blockbetti.resolutions.lattice import LcmLattice, lcm_lattice
from blockbetti.resolutions.matrix import ExactMatrix, rank
from blockbetti.resolutions.monomial import (
    HochsterEngine,
    LatticeEngine,
    TaylorEngine,
    betti_monomial,
    hochster_betti,
    taylor_betti,
)
from blockbetti.resolutions.simplicial import (
    IntegralHomology,
    SimplicialComplex,
    homology_ranks,
)
from blockbetti.resolutions.table import (
    BettiEntry,
    BettiTable,
    BettiTableDocument,
    Distinguished,
    TableAnalytics,
    betti_polynomial_product,
    extremal_product,
    table_analytics,
)

ENGINES: Dict[str, Type[BaseEngine]] = {
    LatticeEngine.name: LatticeEngine,
    HochsterEngine.name: HochsterEngine,
    TaylorEngine.name: TaylorEngine,
    KoszulEngine.name: KoszulEngine,
}


def get_engine(name: str, p: int = 2, budgets: Optional[Budgets] = None) -> BaseEngine:
    """
    Factory function to get a Betti table engine by name.

    Args:
        name: One of the registered engine names
        p: Field characteristic
        budgets: Size guards passed to the engine

    Returns:
        Initialized engine instance
    """
    engine_class = ENGINES.get(name)
    if engine_class is None:
        raise UnknownNameError("engine", name, list_engines())
    return engine_class(p=p, budgets=budgets)


def list_engines() -> List[str]:
    return sorted(ENGINES)


__all__ = [
    "BaseEngine",
    "BettiEntry",
    "BettiTable",
    "BettiTableDocument",
    "Distinguished",
    "ENGINES",
    "ExactMatrix",
    "HochsterEngine",
    "IntegralHomology",
    "KoszulEngine",
    "LatticeEngine",
    "LcmLattice",
    "SimplicialComplex",
    "TableAnalytics",
    "TaylorEngine",
    "Window",
    "betti_binomial",
    "betti_monomial",
    "betti_polynomial_product",
    "clique_betti_oracle",
    "extremal_product",
    "get_engine",
    "hilbert_numerator_from_counts",
    "hochster_betti",
    "homology_ranks",
    "lcm_lattice",
    "list_engines",
    "path_betti_oracle",
    "rank",
    "table_analytics",
    "taylor_betti",
]
