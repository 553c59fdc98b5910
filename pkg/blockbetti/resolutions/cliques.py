"""
Closed-form Betti tables used as oracles
"""

from math import comb

from blockbetti.resolutions.table import BettiTable


def clique_betti_oracle(n: int, p: int = 2) -> BettiTable:
    """
    Betti table of S/J_{K_n}: the ideal of 2-minors of a generic 2 x n
    matrix is resolved linearly by the Eagon-Northcott complex, so
    beta_{i,i+1} = i * C(n, i+1) for 1 <= i <= n-1.
    """
    if n < 1:
        raise ValueError("a clique needs at least one vertex")
    entries = {(0, 0): 1}
    for i in range(1, n):
        entries[(i, i + 1)] = i * comb(n, i + 1)
    return BettiTable(entries, char=p)


def path_betti_oracle(n: int, p: int = 2) -> BettiTable:
    """
    Betti table of S/J_{P_n}: the n-1 edge binomials form a regular
    sequence, so the table is the Koszul complex on n-1 quadrics.
    """
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    entries = {(i, 2 * i): comb(n - 1, i) for i in range(n)}
    return BettiTable(entries, char=p)
