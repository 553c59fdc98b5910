"""
Betti tables of binomial edge ideals via Koszul homology.

J_G is homogeneous for the grading deg x_v = (e_v, 1), deg y_v = (e_v, 0)
in Z^n + Z. The Koszul complex on all 2n variables tensored with S/J_G
splits into finite pieces, one per multidegree (a, c). A piece of K_i has
the basis e_sigma (x) m with sigma a set of i variables and m a standard
monomial, and

    d(e_sigma (x) m) = sum_t (-1)^t e_{sigma - sigma_t} (x) NF(z_{sigma_t} m).

The initial ideal is squarefree, so every Betti multidegree of S/J_G has
vertex components at most 2, and is a multidegree where S/in_<(J_G) has a
nonzero Betti number in the same homological degree. Swapping x and y
maps J_G to itself, so beta at (a, c) equals beta at (a, |a| - c).
"""

import logging
from itertools import product
from math import comb
from typing import Dict, List, Optional, Set, Tuple

from blockbetti.core.config import Budgets
from blockbetti.core.errors import BudgetExceeded, check_budget
from blockbetti.graphs.graph import Graph
from blockbetti.groebner.monomials import Exponents
from blockbetti.groebner.normal_form import ReducedBasis, hilbert_function
from blockbetti.resolutions.base import BaseEngine, Window
from blockbetti.resolutions.matrix import ExactMatrix
from blockbetti.resolutions.monomial import LatticeEngine
from blockbetti.resolutions.simplicial import bits
from blockbetti.resolutions.table import Bidegree, BettiTable

logger = logging.getLogger(__name__)

VertexDegree = Tuple[int, ...]
Sigma = Tuple[int, int, int, VertexDegree]  # mask, size, x count, degree used


class _Piece:
    """The Koszul complex in one multidegree (a, c)"""

    def __init__(self, engine: "KoszulEngine", a: VertexDegree, c: int):
        self.engine = engine
        self.a = a
        self.c = c
        self._bases: Dict[int, List[Tuple[int, Exponents]]] = {}
        self._ranks: Dict[int, int] = {}

    def basis(self, i: int) -> List[Tuple[int, Exponents]]:
        if i not in self._bases:
            elements = []
            if i >= 0:
                for mask, _, xcount, used in self.engine.sigmas(self.a).get(i, []):
                    rest = tuple(x - u for x, u in zip(self.a, used))
                    for m in self.engine.standard(rest, self.c - xcount):
                        elements.append((mask, m))
            self._bases[i] = elements
        return self._bases[i]

    def rank(self, i: int) -> int:
        """Rank of d_i : K_i -> K_{i-1}"""
        if i not in self._ranks:
            sources = self.basis(i)
            if i <= 0 or not sources:
                self._ranks[i] = 0
                return 0
            targets = {key: k for k, key in enumerate(self.basis(i - 1))}
            reduce = self.engine.reduced_basis.reduce
            rows = []
            for mask, m in sources:
                row: Dict[int, int] = {}
                for t, pos in enumerate(bits(mask)):
                    lifted = list(m)
                    lifted[pos] += 1
                    target = targets[(mask ^ (1 << pos), reduce(tuple(lifted)))]
                    row[target] = row.get(target, 0) + (-1 if t % 2 else 1)
                rows.append(row)
            matrix = ExactMatrix(len(rows), len(targets), rows, self.engine.p)
            matrix.check_size(self.engine.budgets.max_matrix_nonzeros)
            self._ranks[i] = matrix.rank()
        return self._ranks[i]

    def betti(self, i: int) -> int:
        return len(self.basis(i)) - self.rank(i) - self.rank(i + 1)


class KoszulEngine(BaseEngine):
    """Bigraded Betti numbers of S/J_G over F_p"""

    name = "koszul"
    side = "binomial"

    def __init__(
        self,
        p: int = 2,
        budgets: Optional[Budgets] = None,
        use_initial_support: bool = True,
    ):
        super().__init__(p, budgets)
        self.use_initial_support = use_initial_support
        self.n = 0
        self.reduced_basis: Optional[ReducedBasis] = None
        self._sigmas: Dict[VertexDegree, Dict[int, List[Sigma]]] = {}
        self._standard: Dict[Tuple[VertexDegree, int], List[Exponents]] = {}

    def _prepare(self, g: Graph) -> None:
        self.n = g.n
        self.reduced_basis = ReducedBasis.for_graph(g, self.budgets.max_buchberger_variables)
        self._sigmas = {}
        self._standard = {}

    def sigmas(self, a: VertexDegree) -> Dict[int, List[Sigma]]:
        """Squarefree variable sets of degree at most a, grouped by size"""
        if a not in self._sigmas:
            n = self.n
            per_vertex = []
            for v, av in enumerate(a):
                options = [(0, 0, 0)]
                if av >= 1:
                    options += [(1 << v, 1, 1), (1 << (n + v), 1, 0)]
                if av >= 2:
                    options.append(((1 << v) | (1 << (n + v)), 2, 1))
                per_vertex.append(options)
            grouped: Dict[int, List[Sigma]] = {}
            for choice in product(*per_vertex):
                mask = size = xcount = 0
                for m, s, x in choice:
                    mask |= m
                    size += s
                    xcount += x
                used = tuple(s for _, s, _ in choice)
                grouped.setdefault(size, []).append((mask, size, xcount, used))
            self._sigmas[a] = grouped
        return self._sigmas[a]

    def standard(self, rest: VertexDegree, c: int) -> List[Exponents]:
        """Standard monomials of multidegree (rest, c)"""
        key = (rest, c)
        if key not in self._standard:
            n = self.n
            found: List[Exponents] = []
            if 0 <= c <= sum(rest):
                vertices = [v for v in range(n) if rest[v]]
                split = [0] * n

                def place(k: int, remaining: int) -> None:
                    if k == len(vertices):
                        if remaining == 0:
                            exps = [0] * (2 * n)
                            for v in range(n):
                                exps[v] = split[v]
                                exps[n + v] = rest[v] - split[v]
                            exps_t = tuple(exps)
                            if self.reduced_basis.is_standard(exps_t):
                                found.append(exps_t)
                        return
                    v = vertices[k]
                    for x in range(min(rest[v], remaining) + 1):
                        split[v] = x
                        place(k + 1, remaining - x)
                    split[v] = 0

                place(0, c)
            self._standard[key] = found
        return self._standard[key]

    def _candidates(
        self, window: Optional[frozenset]
    ) -> Optional[Dict[Tuple[VertexDegree, int], Set[int]]]:
        """Multidegrees (a, c) and homological degrees where S/in_<(J_G) is nonzero"""
        if not self.use_initial_support:
            return None
        try:
            multigraded = LatticeEngine(self.p, self.budgets).multigraded(
                self.reduced_basis.initial_ideal, window
            )
        except BudgetExceeded as e:
            logger.info("initial-ideal support unavailable (%s); scanning all multidegrees", e)
            return None
        n = self.n
        found: Dict[Tuple[VertexDegree, int], Set[int]] = {}
        for i, b in multigraded:
            a = tuple(b[v] + b[n + v] for v in range(n))
            found.setdefault((a, sum(b[:n])), set()).add(i)
        return found

    def _scan(self, window: Optional[frozenset]) -> Dict[Tuple[VertexDegree, int], Set[int]]:
        n = self.n
        found: Dict[Tuple[VertexDegree, int], Set[int]] = {}
        for a in product(range(3), repeat=n):
            j = sum(a)
            wanted = self.wanted(window, j)
            degrees = set(range(0, min(j, 2 * n) + 1)) if wanted is None else set(wanted)
            if degrees:
                for c in range(j + 1):
                    found[(a, c)] = degrees
        return found

    def compute(self, g: Graph, window: Window = None) -> BettiTable:
        """
        Raises:
            BudgetExceeded: if 2n exceeds the full or windowed variable budget,
                or a differential exceeds the nonzero budget
        """
        window = self.freeze(window)
        if window is None:
            check_budget(
                "full_binomial_variables", 2 * g.n, self.budgets.max_full_binomial_variables
            )
        else:
            check_budget(
                "window_binomial_variables", 2 * g.n, self.budgets.max_window_binomial_variables
            )
        self._prepare(g)
        candidates = self._candidates(window)
        if candidates is None:
            candidates = self._scan(window)

        entries: Dict[Bidegree, int] = {}
        pieces = 0
        for (a, c), degrees in sorted(candidates.items()):
            j = sum(a)
            if 2 * c > j:
                continue
            mirrored = candidates.get((a, j - c), set())
            weight = 1 if 2 * c == j else 2
            wanted = self.wanted(window, j)
            piece = _Piece(self, a, c)
            pieces += 1
            for i in sorted(degrees & mirrored):
                if wanted is not None and i not in wanted:
                    continue
                beta = piece.betti(i)
                if beta:
                    entries[(i, j)] = entries.get((i, j), 0) + weight * beta
        logger.debug("Koszul engine: %d pieces for %d vertices", pieces, g.n)
        return self.table(entries, window)


def betti_binomial(
    g: Graph,
    p: int = 2,
    window: Window = None,
    budgets: Optional[Budgets] = None,
    use_initial_support: bool = True,
) -> BettiTable:
    """beta_{i,j}(S/J_G); partial when ``window`` is given"""
    return KoszulEngine(p, budgets, use_initial_support).compute(g, window)


def hilbert_numerator_from_counts(
    g: Graph, max_degree: int, basis: Optional[ReducedBasis] = None
) -> Dict[int, int]:
    """
    Coefficients up to ``max_degree`` of HS(S/J_G)(t) (1-t)^{2n}, from
    standard monomial counts.
    """
    basis = basis or ReducedBasis.for_graph(g)
    values = [hilbert_function(g, d, basis) for d in range(max_degree + 1)]
    N = 2 * g.n
    out = {}
    for d in range(max_degree + 1):
        coefficient = sum((-1) ** k * comb(N, k) * values[d - k] for k in range(d + 1))
        if coefficient:
            out[d] = coefficient
    return out
