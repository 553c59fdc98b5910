"""
The lcm lattice of a monomial ideal and the simplicial complexes whose
homology gives its multigraded Betti numbers
"""

import logging
from typing import Dict, List, Sequence

from blockbetti.core.errors import check_budget
from blockbetti.groebner.monomials import Exponents, Monomial, MonomialIdeal
from blockbetti.resolutions.simplicial import SimplicialComplex

logger = logging.getLogger(__name__)


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


class LcmLattice:
    """
    Distinct lcms of nonempty generator subsets, closed under join.

    ``elements`` excludes the bottom element 1 and is sorted by degree
    then descending lex, so every element comes after all its divisors.
    """

    def __init__(self, ideal: MonomialIdeal, elements: Sequence[Exponents]):
        self.ideal = ideal
        self.generators: List[Exponents] = [g.exponents for g in ideal.generators]
        self.elements: List[Exponents] = sorted(
            elements, key=lambda e: (sum(e), [-x for x in e])
        )
        self.bottom: Exponents = (0,) * (2 * ideal.n)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def top(self) -> Exponents:
        top = self.bottom
        for g in self.generators:
            top = _lcm(top, g)
        return top

    def monomials(self) -> List[Monomial]:
        return [Monomial(e) for e in self.elements]

    def atoms_below(self, b: Exponents) -> List[Exponents]:
        return [g for g in self.generators if _divides(g, b)]

    def upper_koszul_complex(self, b: Exponents, max_faces: int) -> SimplicialComplex:
        """
        K^b: squarefree tau inside supp(b) with x^(b - tau) in the ideal.
        Facets are {v in supp b : a_v < b_v} for generators a dividing b.
        """
        facets = []
        for a in self.atoms_below(b):
            mask = 0
            for pos, (x, y) in enumerate(zip(a, b)):
                if x < y:
                    mask |= 1 << pos
            facets.append(mask)
        return SimplicialComplex(facets, max_faces=max_faces)

    def open_interval(self, b: Exponents) -> List[Exponents]:
        return [e for e in self.elements if e != b and _divides(e, b)]

    def order_complex(self, b: Exponents, max_elements: int, max_faces: int) -> SimplicialComplex:
        """Chains of the open interval (1, b); the empty interval gives {∅}"""
        interval = self.open_interval(b)
        check_budget("order_complex_elements", len(interval), max_elements)
        index = {e: k for k, e in enumerate(interval)}
        greater: Dict[int, List[int]] = {
            k: [index[f] for f in interval if f != e and _divides(e, f)]
            for k, e in enumerate(interval)
        }
        # covering relations only, so every extension ends in a maximal chain
        above = {
            k: [u for u in ups if not any(u in greater[w] for w in ups)]
            for k, ups in greater.items()
        }
        below = {k: 0 for k in index.values()}
        for k, ups in above.items():
            for u in ups:
                below[u] += 1

        facets = []

        def extend(chain_mask: int, last: int) -> None:
            nexts = above[last]
            if not nexts:
                facets.append(chain_mask)
                return
            for u in nexts:
                extend(chain_mask | (1 << u), u)

        for k in index.values():
            if below[k] == 0:
                extend(1 << k, k)
        if not interval:
            facets.append(0)
        return SimplicialComplex(facets, max_faces=max_faces)


def lcm_lattice(
    ideal: MonomialIdeal,
    max_generators: int = 26,
    max_elements: int = 50_000,
) -> LcmLattice:
    """
    Join-closure of the generators by fixpoint iteration.

    Raises:
        BudgetExceeded: on too many generators or lattice elements
    """
    check_budget("lattice_generators", len(ideal.generators), max_generators)
    gens = [g.exponents for g in ideal.generators]
    elements = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for e in frontier:
            for g in gens:
                joined = _lcm(e, g)
                if joined not in elements:
                    elements.add(joined)
                    fresh.append(joined)
        check_budget("lattice_elements", len(elements), max_elements)
        frontier = fresh
    logger.debug("lcm lattice: %d generators, %d elements", len(gens), len(elements))
    return LcmLattice(ideal, list(elements))
