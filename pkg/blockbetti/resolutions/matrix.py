"""
Sparse exact matrices over F_p or the integers, with rank and Smith
normal form services.

Rows are dicts column -> nonzero entry. Over F_2 rows are packed into int
bitsets; over odd primes elimination runs on dict rows, sparsest first;
over the integers (p = 0) sympy's DomainMatrix and Smith normal form are
used.
"""

import logging
from typing import Dict, Iterable, List, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

from blockbetti.core.errors import check_budget

logger = logging.getLogger(__name__)

Row = Dict[int, int]


class ExactMatrix:
    """An n_rows x n_cols sparse matrix over F_p (p prime) or ZZ (p = 0)"""

    def __init__(self, n_rows: int, n_cols: int, rows: Iterable[Row], p: int):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.p = p
        self.rows: List[Row] = []
        for row in rows:
            if p:
                row = {c: v % p for c, v in row.items() if v % p}
            else:
                row = {c: v for c, v in row.items() if v}
            self.rows.append(row)

    @classmethod
    def from_entries(
        cls, n_rows: int, n_cols: int, entries: Dict[Tuple[int, int], int], p: int
    ) -> "ExactMatrix":
        rows: List[Row] = [{} for _ in range(n_rows)]
        for (r, c), v in entries.items():
            rows[r][c] = rows[r].get(c, 0) + v
        return cls(n_rows, n_cols, rows, p)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def check_size(self, maximum: int) -> None:
        check_budget(
            "matrix_nonzeros", self.nnz, maximum, f"{self.n_rows}x{self.n_cols} matrix"
        )

    def rank(self) -> int:
        if not self.rows or self.nnz == 0:
            return 0
        if self.p == 2:
            return self._rank_gf2()
        if self.p:
            return self._rank_modp()
        return self._rank_rational()

    def _rank_gf2(self) -> int:
        pivots: Dict[int, int] = {}
        for row in self.rows:
            bits = 0
            for c in row:
                bits |= 1 << c
            while bits:
                top = bits.bit_length() - 1
                if top in pivots:
                    bits ^= pivots[top]
                else:
                    pivots[top] = bits
                    break
        return len(pivots)

    def _rank_modp(self) -> int:
        p = self.p
        pivots: Dict[int, Row] = {}
        for row in sorted(self.rows, key=len):
            row = dict(row)
            while row:
                lead = min(row)
                pivot = pivots.get(lead)
                if pivot is None:
                    inv = pow(row[lead], -1, p)
                    pivots[lead] = {c: v * inv % p for c, v in row.items()}
                    break
                factor = row[lead]
                for c, v in pivot.items():
                    value = (row.get(c, 0) - factor * v) % p
                    if value:
                        row[c] = value
                    else:
                        row.pop(c, None)
        return len(pivots)

    def to_domain_matrix(self) -> DomainMatrix:
        data = {
            r: {c: ZZ(v) for c, v in row.items()} for r, row in enumerate(self.rows) if row
        }
        return DomainMatrix(data, (self.n_rows, self.n_cols), ZZ)

    def _rank_rational(self) -> int:
        return self.to_domain_matrix().rank()

    def to_sympy(self) -> Matrix:
        dense = [[0] * self.n_cols for _ in range(self.n_rows)]
        for r, row in enumerate(self.rows):
            for c, v in row.items():
                dense[r][c] = v
        return Matrix(self.n_rows, self.n_cols, lambda r, c: dense[r][c])

    def invariant_factors(self) -> List[int]:
        """Nonzero invariant factors over ZZ (p must be 0)"""
        if self.p:
            raise ValueError("invariant factors are defined over the integers only")
        if self.nnz == 0:
            return []
        factors = invariant_factors(self.to_sympy(), domain=ZZ)
        return [abs(int(d)) for d in factors if d != 0]

    def reduce_mod(self, p: int) -> "ExactMatrix":
        return ExactMatrix(self.n_rows, self.n_cols, self.rows, p)


def rank(n_rows: int, n_cols: int, rows: Iterable[Row], p: int) -> int:
    return ExactMatrix(n_rows, n_cols, rows, p).rank()
