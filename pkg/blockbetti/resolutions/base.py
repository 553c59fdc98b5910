"""
Base interface for Betti table engines
"""

from abc import ABC, abstractmethod
from typing import FrozenSet, Iterable, Optional, Set, Tuple

from blockbetti.core.config import Budgets
from blockbetti.resolutions.table import Bidegree, BettiTable

Window = Optional[Iterable[Bidegree]]


class BaseEngine(ABC):
    """
    Abstract base class for Betti table engines.

    Monomial engines take a MonomialIdeal, binomial engines take a Graph;
    both return the table of the quotient ring.
    """

    name: str = "base"
    side: str = "monomial"

    def __init__(self, p: int = 2, budgets: Optional[Budgets] = None):
        """
        Initialize the engine.

        Args:
            p: Field characteristic, a prime or 0 for the rationals
            budgets: Size guards; defaults apply when omitted
        """
        self.p = p
        self.budgets = budgets or Budgets()

    @abstractmethod
    def compute(self, target, window: Window = None) -> BettiTable:
        """
        Compute the Betti table of S/target.

        Args:
            target: The ideal (or graph) to resolve
            window: Bidegrees to compute; None asks for the total table

        Returns:
            A total table, or a partial one recording ``window``
        """
        pass

    @staticmethod
    def freeze(window: Window) -> Optional[FrozenSet[Bidegree]]:
        return None if window is None else frozenset((int(i), int(j)) for i, j in window)

    @staticmethod
    def wanted(window: Optional[FrozenSet[Bidegree]], j: int) -> Optional[Set[int]]:
        """Homological degrees needed at internal degree j; None means all"""
        if window is None:
            return None
        return {i for i, jj in window if jj == j}

    def table(self, entries: dict, window: Optional[FrozenSet[Bidegree]]) -> BettiTable:
        if window is not None:
            entries = {k: v for k, v in entries.items() if k in window}
        return BettiTable(entries, char=self.p, computed=window)

    def describe(self) -> Tuple[str, str, int]:
        return (self.name, self.side, self.p)
