"""
Betti tables of monomial ideals: the lcm-lattice engine and the Hochster
and Taylor oracles
"""

import logging
from typing import Dict, List, Optional, Tuple

from blockbetti.core.config import Budgets
from blockbetti.core.errors import check_budget
from blockbetti.groebner.monomials import Exponents, MonomialIdeal
from blockbetti.resolutions.base import BaseEngine, Window
from blockbetti.resolutions.lattice import lcm_lattice
from blockbetti.resolutions.matrix import ExactMatrix
from blockbetti.resolutions.simplicial import SimplicialComplex, bits
from blockbetti.resolutions.table import Bidegree, BettiTable

logger = logging.getLogger(__name__)

Multigraded = Dict[Tuple[int, Exponents], int]


def _check_ideal(ideal: MonomialIdeal, budgets: Budgets) -> None:
    if any(g.degree == 0 for g in ideal.generators):
        raise ValueError("the unit ideal has no Betti table")
    used = bin(ideal.used_variables()).count("1")
    check_budget("monomial_variables", used, budgets.max_monomial_variables)


def _aggregate(multigraded: Multigraded) -> Dict[Bidegree, int]:
    entries: Dict[Bidegree, int] = {}
    for (i, b), beta in multigraded.items():
        key = (i, sum(b))
        entries[key] = entries.get(key, 0) + beta
    return entries


class LatticeEngine(BaseEngine):
    """
    beta_{i,b}(S/I) = dim H~_{i-2} of a complex attached to each lcm
    lattice element b.

    method="order" uses the order complex of the open interval (0, b) of
    the lcm lattice. method="koszul", the default, uses the upper Koszul
    complex K^b = {F in supp(b) : x^(b-F) in I}, whose facets are b minus
    a for the generators a dividing b. Both compute the same number:
    beta_{i,b}(S/I) = dim H~_{i-2}(K^b) = dim H~_{i-2}((0, b)) for every
    b in the lattice, and b outside the lattice carries no Betti number.

    K^b has at most 2^|supp b| faces and needs no chain enumeration; the
    order complex is capped by max_order_complex_elements and is kept as
    the cross-check run by the engine-oracles claim.
    """

    name = "lattice"
    side = "monomial"

    def __init__(self, p: int = 2, budgets: Optional[Budgets] = None, method: str = "koszul"):
        super().__init__(p, budgets)
        if method not in ("koszul", "order"):
            raise ValueError(f"unknown lattice method: {method}")
        self.method = method

    def multigraded(self, ideal: MonomialIdeal, window: Window = None) -> Multigraded:
        """Nonzero multigraded Betti numbers keyed by (i, exponent vector)"""
        _check_ideal(ideal, self.budgets)
        window = self.freeze(window)
        bottom: Exponents = (0,) * (2 * ideal.n)
        result: Multigraded = {}
        if window is None or (0, 0) in window:
            result[(0, bottom)] = 1
        if not ideal.generators:
            return result

        lattice = lcm_lattice(
            ideal,
            max_generators=self.budgets.max_lattice_generators,
            max_elements=self.budgets.max_lattice_elements,
        )
        for b in lattice.elements:
            wanted = self.wanted(window, sum(b))
            if wanted is not None and not wanted:
                continue
            if self.method == "order":
                complex_ = lattice.order_complex(
                    b, self.budgets.max_order_complex_elements, self.budgets.max_complex_faces
                )
            else:
                complex_ = lattice.upper_koszul_complex(b, self.budgets.max_complex_faces)
                common = -1
                for facet in complex_.facets:
                    common &= facet
                if common:
                    # a cone has no reduced homology
                    continue
            degrees = None if wanted is None else sorted(i - 2 for i in wanted)
            for k, rank in complex_.homology_ranks(self.p, degrees).items():
                if rank:
                    result[(k + 2, b)] = rank
        return result

    def compute(self, ideal: MonomialIdeal, window: Window = None) -> BettiTable:
        window = self.freeze(window)
        return self.table(_aggregate(self.multigraded(ideal, window)), window)


class HochsterEngine(BaseEngine):
    """
    beta_{i,W}(S/I) = dim H~_{|W|-i-1} of the Stanley-Reisner complex
    restricted to W, summed over variable subsets W.
    """

    name = "hochster"
    side = "monomial"

    def compute(self, ideal: MonomialIdeal, window: Window = None) -> BettiTable:
        if not ideal.is_squarefree():
            raise ValueError("Hochster's formula needs a squarefree monomial ideal")
        _check_ideal(ideal, self.budgets)
        used = ideal.used_variables()
        check_budget(
            "hochster_variables", bin(used).count("1"), self.budgets.max_hochster_variables
        )
        window = self.freeze(window)
        gens = ideal.masks()
        entries: Dict[Bidegree, int] = {}

        W = used
        while True:
            inside = [g for g in gens if g & W == g]
            union = 0
            for g in inside:
                union |= g
            size = bin(W).count("1")
            wanted = self.wanted(window, size)
            # W must be covered by the generators it contains, else a cone
            if union == W and (wanted is None or wanted):
                check_budget("complex_faces", 1 << size, self.budgets.max_complex_faces)
                faces = []
                sub = W
                while True:
                    if not any(g & sub == g for g in inside):
                        faces.append(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & W
                complex_ = SimplicialComplex.from_faces(
                    faces, max_faces=self.budgets.max_complex_faces
                )
                degrees = None if wanted is None else sorted(size - i - 1 for i in wanted)
                for k, rank in complex_.homology_ranks(self.p, degrees).items():
                    if rank:
                        key = (size - k - 1, size)
                        entries[key] = entries.get(key, 0) + rank
            if W == 0:
                break
            W = (W - 1) & used
        return self.table(entries, window)


class TaylorEngine(BaseEngine):
    """
    Homology of the Taylor complex tensored with the residue field, one
    lcm at a time: faces sigma with lcm(sigma) = b, boundary keeping only
    faces whose lcm is still b.
    """

    name = "taylor"
    side = "monomial"

    def compute(self, ideal: MonomialIdeal, window: Window = None) -> BettiTable:
        _check_ideal(ideal, self.budgets)
        gens = [g.exponents for g in ideal.generators]
        check_budget("taylor_generators", len(gens), self.budgets.max_taylor_generators)
        window = self.freeze(window)
        bottom: Exponents = (0,) * (2 * ideal.n)

        lcms: List[Exponents] = [bottom] * (1 << len(gens))
        groups: Dict[Exponents, Dict[int, List[int]]] = {}
        for mask in range(1 << len(gens)):
            if mask:
                low = (mask & -mask).bit_length() - 1
                rest = lcms[mask ^ (1 << low)]
                lcms[mask] = tuple(x if x >= y else y for x, y in zip(rest, gens[low]))
            size = bin(mask).count("1")
            groups.setdefault(lcms[mask], {}).setdefault(size, []).append(mask)

        entries: Dict[Bidegree, int] = {}
        for b, by_size in groups.items():
            j = sum(b)
            wanted = self.wanted(window, j)
            if wanted is not None and not wanted:
                continue
            ranks: Dict[int, int] = {}

            def boundary_rank(size: int) -> int:
                if size not in ranks:
                    sources = by_size.get(size, [])
                    targets = {m: k for k, m in enumerate(by_size.get(size - 1, []))}
                    rows = []
                    for sigma in sources:
                        row = {}
                        for t, g in enumerate(bits(sigma)):
                            tau = sigma ^ (1 << g)
                            if tau in targets:
                                row[targets[tau]] = -1 if t % 2 else 1
                        rows.append(row)
                    matrix = ExactMatrix(len(rows), len(targets), rows, self.p)
                    matrix.check_size(self.budgets.max_matrix_nonzeros)
                    ranks[size] = matrix.rank()
                return ranks[size]

            for size in sorted(by_size):
                if wanted is not None and size not in wanted:
                    continue
                beta = len(by_size[size]) - boundary_rank(size) - boundary_rank(size + 1)
                if beta:
                    entries[(size, j)] = entries.get((size, j), 0) + beta
        return self.table(entries, window)


def betti_monomial(
    ideal: MonomialIdeal,
    p: int = 2,
    window: Window = None,
    budgets: Optional[Budgets] = None,
    method: str = "koszul",
) -> BettiTable:
    return LatticeEngine(p, budgets, method=method).compute(ideal, window)


def hochster_betti(
    ideal: MonomialIdeal, p: int = 2, window: Window = None, budgets: Optional[Budgets] = None
) -> BettiTable:
    return HochsterEngine(p, budgets).compute(ideal, window)


def taylor_betti(
    ideal: MonomialIdeal, p: int = 2, window: Window = None, budgets: Optional[Budgets] = None
) -> BettiTable:
    return TaylorEngine(p, budgets).compute(ideal, window)
