"""
Graded Betti tables and their analytics: regularity, projective
dimension, extremal and distinguished extremal entries, Betti polynomials
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from pydantic import BaseModel

from blockbetti.core.errors import PartialTableError

Bidegree = Tuple[int, int]


class BettiEntry(BaseModel):
    i: int
    j: int
    beta: int

    @property
    def strand(self) -> int:
        return self.j - self.i


class Distinguished(BaseModel):
    """The extremal entries realising regularity and projective dimension"""
    regularity: BettiEntry
    projdim: BettiEntry


class TableAnalytics(BaseModel):
    reg: int
    pd: int
    extremal: List[BettiEntry]
    distinguished: Distinguished
    single_extremal: bool
    betti_polynomial: str


class BettiTableDocument(BaseModel):
    """JSON form of a BettiTable"""
    char: int
    module: str = "quotient"
    total: bool
    entries: List[BettiEntry]
    computed: Optional[List[Tuple[int, int]]] = None
    reg: Optional[int] = None
    pd: Optional[int] = None
    extremal: Optional[List[BettiEntry]] = None
    distinguished: Optional[Distinguished] = None


@dataclass(frozen=True)
class BettiTable:
    """
    beta_{i,j} of S/I (or of I when ``module`` is "ideal").

    ``computed`` is None for a total table; for a partial table it is the
    set of bidegrees that were computed, and every other entry is unknown.
    """

    entries: Dict[Bidegree, int] = field(default_factory=dict)
    char: int = 2
    computed: Optional[FrozenSet[Bidegree]] = None
    module: str = "quotient"

    def __post_init__(self):
        cleaned = {}
        for (i, j), beta in self.entries.items():
            if beta < 0:
                raise ValueError(f"negative Betti number at ({i},{j})")
            if i < 0 or j < i:
                raise ValueError(f"bidegree ({i},{j}) outside j >= i >= 0")
            if beta:
                cleaned[(int(i), int(j))] = int(beta)
        object.__setattr__(self, "entries", cleaned)
        if self.computed is not None:
            object.__setattr__(self, "computed", frozenset(self.computed))

    @property
    def is_total(self) -> bool:
        return self.computed is None

    def get(self, i: int, j: int) -> int:
        if self.computed is not None and (i, j) not in self.computed:
            raise PartialTableError(f"beta_{{{i},{j}}} lies outside the computed window")
        return self.entries.get((i, j), 0)

    def nonzero(self) -> List[BettiEntry]:
        return [BettiEntry(i=i, j=j, beta=b) for (i, j), b in sorted(self.entries.items())]

    def _require_total(self, what: str) -> None:
        if not self.is_total:
            raise PartialTableError(f"{what} needs a total table")
        if not self.entries:
            raise ValueError(f"{what} of the zero module is undefined")

    @property
    def regularity(self) -> int:
        self._require_total("regularity")
        return max(j - i for i, j in self.entries)

    @property
    def projdim(self) -> int:
        self._require_total("projective dimension")
        return max(i for i, _ in self.entries)

    def extremal(self) -> List[BettiEntry]:
        """
        Nonzero beta_{i,i+l} with beta_{k,k+m} = 0 for every other (k, m)
        having k >= i and m >= l.
        """
        self._require_total("extremal detection")
        result = []
        for (i, j), beta in sorted(self.entries.items()):
            strand = j - i
            blocked = any(
                (k, m) != (i, j) and k >= i and m - k >= strand for k, m in self.entries
            )
            if not blocked:
                result.append(BettiEntry(i=i, j=j, beta=beta))
        return result

    def distinguished(self) -> Distinguished:
        self._require_total("distinguished extremal detection")
        reg, pd = self.regularity, self.projdim
        top = max((i, j) for i, j in self.entries if j - i == reg)
        right = max(((i, j) for i, j in self.entries if i == pd), key=lambda ij: ij[1] - ij[0])
        return Distinguished(
            regularity=BettiEntry(i=top[0], j=top[1], beta=self.entries[top]),
            projdim=BettiEntry(i=right[0], j=right[1], beta=self.entries[right]),
        )

    def is_single_extremal(self) -> bool:
        d = self.distinguished()
        return d.regularity == d.projdim

    def polynomial(self) -> str:
        """Betti polynomial sum beta_{i,j} s^i t^j"""
        terms = []
        for (i, j), beta in sorted(self.entries.items()):
            factors = [] if beta == 1 and (i or j) else [str(beta)]
            if i:
                factors.append("s" if i == 1 else f"s^{i}")
            if j:
                factors.append("t" if j == 1 else f"t^{j}")
            terms.append("*".join(factors))
        return " + ".join(terms) if terms else "0"

    def product(self, other: "BettiTable") -> "BettiTable":
        """Coefficientwise product of Betti polynomials"""
        if not (self.is_total and other.is_total):
            raise PartialTableError("Betti polynomial products need total tables")
        entries: Dict[Bidegree, int] = {}
        for (i1, j1), b1 in self.entries.items():
            for (i2, j2), b2 in other.entries.items():
                key = (i1 + i2, j1 + j2)
                entries[key] = entries.get(key, 0) + b1 * b2
        return BettiTable(entries, char=self.char)

    def shift_to_ideal(self) -> "BettiTable":
        """beta_{i,j}(I) = beta_{i+1,j}(S/I)"""
        if self.module != "quotient":
            raise ValueError("table is already a table of the ideal")
        entries = {(i - 1, j): b for (i, j), b in self.entries.items() if i >= 1}
        computed = None
        if self.computed is not None:
            computed = frozenset((i - 1, j) for i, j in self.computed if i >= 1)
        return BettiTable(entries, char=self.char, computed=computed, module="ideal")

    def hilbert_numerator(self) -> Dict[int, int]:
        """Coefficients of sum (-1)^i beta_{i,j} t^j, zeros dropped"""
        self._require_total("the Hilbert numerator")
        coefficients: Dict[int, int] = {}
        for (i, j), beta in self.entries.items():
            coefficients[j] = coefficients.get(j, 0) + (-1) ** i * beta
        return {j: c for j, c in sorted(coefficients.items()) if c}

    def leq(self, other: "BettiTable") -> bool:
        """Entrywise comparison of two total tables"""
        if not (self.is_total and other.is_total):
            raise PartialTableError("entrywise comparison needs total tables")
        return all(b <= other.entries.get(key, 0) for key, b in self.entries.items())

    def same_entries(self, other: "BettiTable") -> bool:
        return self.entries == other.entries

    def restricted(self, window: Iterable[Bidegree]) -> "BettiTable":
        window = frozenset(window)
        entries = {k: v for k, v in self.entries.items() if k in window}
        return BettiTable(entries, char=self.char, computed=window, module=self.module)

    def render(self) -> str:
        """Macaulay2 ``betti`` layout: one column per i, one row per strand j-i"""
        known = set(self.entries) | set(self.computed or ())
        if not known:
            return "total: 0"
        width_i = max(i for i, _ in known)
        height = max(j - i for i, j in known)
        start = min(i for i, _ in known)
        columns = range(start, width_i + 1)

        def cell(i: int, strand: int) -> str:
            key = (i, i + strand)
            if self.computed is not None and key not in self.computed:
                return "?"
            beta = self.entries.get(key, 0)
            return str(beta) if beta else "."

        totals = {i: sum(b for (k, _), b in self.entries.items() if k == i) for i in columns}
        widths = {i: max(len(str(i)), len(str(totals[i])), 1) for i in columns}
        for i in columns:
            for strand in range(height + 1):
                widths[i] = max(widths[i], len(cell(i, strand)))
        lines = [
            " ".join([f"{'':>6}"] + [f"{i:>{widths[i]}}" for i in columns]),
            " ".join([f"{'total:':>6}"] + [f"{totals[i]:>{widths[i]}}" for i in columns]),
        ]
        for strand in range(height + 1):
            row = [f"{str(strand) + ':':>6}"] + [f"{cell(i, strand):>{widths[i]}}" for i in columns]
            lines.append(" ".join(row))
        return "\n".join(lines)

    def to_document(self) -> BettiTableDocument:
        doc = BettiTableDocument(
            char=self.char,
            module=self.module,
            total=self.is_total,
            entries=self.nonzero(),
            computed=sorted(self.computed) if self.computed is not None else None,
        )
        if self.is_total and self.entries:
            doc.reg = self.regularity
            doc.pd = self.projdim
            doc.extremal = self.extremal()
            doc.distinguished = self.distinguished()
        return doc

    @classmethod
    def from_document(cls, doc: BettiTableDocument) -> "BettiTable":
        computed = None if doc.total else frozenset(tuple(x) for x in doc.computed or [])
        return cls(
            {(e.i, e.j): e.beta for e in doc.entries},
            char=doc.char,
            computed=computed,
            module=doc.module,
        )


def table_analytics(t: BettiTable) -> TableAnalytics:
    """
    Raises:
        PartialTableError: if t is partial
    """
    return TableAnalytics(
        reg=t.regularity,
        pd=t.projdim,
        extremal=t.extremal(),
        distinguished=t.distinguished(),
        single_extremal=t.is_single_extremal(),
        betti_polynomial=t.polynomial(),
    )


def betti_polynomial_product(a: BettiTable, b: BettiTable) -> BettiTable:
    return a.product(b)


def extremal_product(a: BettiTable, b: BettiTable) -> List[BettiEntry]:
    """Positions add and values multiply across the two extremal sets"""
    predicted = [
        BettiEntry(i=x.i + y.i, j=x.j + y.j, beta=x.beta * y.beta)
        for x in a.extremal()
        for y in b.extremal()
    ]
    return sorted(predicted, key=lambda e: (e.i, e.j))
