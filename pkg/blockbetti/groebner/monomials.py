"""
Monomials, binomials and monomial ideals in K[x_1..x_n, y_1..y_n].

Exponent vectors have length 2n: position v-1 is x_v, position n+v-1 is
y_v. Lexicographic comparison of exponent vectors is the lex order with
x_1 > ... > x_n > y_1 > ... > y_n.
"""

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

Exponents = Tuple[int, ...]


def variable_name(position: int, n: int) -> str:
    return f"x{position + 1}" if position < n else f"y{position - n + 1}"


def variable_position(name: str, n: int) -> int:
    match = re.fullmatch(r"([xy])(\d+)", name.strip())
    if not match or not 1 <= int(match.group(2)) <= n:
        raise ValueError(f"not a variable of the {2 * n}-variable ring: {name}")
    index = int(match.group(2)) - 1
    return index if match.group(1) == "x" else n + index


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial as an exponent vector; ordering is the lex term order"""

    exponents: Exponents

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * (2 * n))

    @classmethod
    def from_positions(cls, n: int, positions: Iterable[int]) -> "Monomial":
        exps = [0] * (2 * n)
        for pos in positions:
            exps[pos] += 1
        return cls(tuple(exps))

    @classmethod
    def parse(cls, text: str, n: int) -> "Monomial":
        """Parse "x1*y2^2"; "1" is the unit monomial"""
        exps = [0] * (2 * n)
        text = text.strip()
        if text != "1":
            for factor in text.split("*"):
                name, _, power = factor.partition("^")
                exps[variable_position(name, n)] += int(power) if power else 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents) // 2

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> int:
        """Bitmask of the variables occurring"""
        mask = 0
        for pos, e in enumerate(self.exponents):
            if e:
                mask |= 1 << pos
        return mask

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def times_variable(self, position: int) -> "Monomial":
        exps = list(self.exponents)
        exps[position] += 1
        return Monomial(tuple(exps))

    def __str__(self) -> str:
        n = self.n
        factors = []
        for pos, e in enumerate(self.exponents):
            if e:
                name = variable_name(pos, n)
                factors.append(name if e == 1 else f"{name}^{e}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Binomial:
    """lead - trail with lead > trail in lex"""

    lead: Monomial
    trail: Monomial

    def __str__(self) -> str:
        return f"{self.lead} - {self.trail}"


def minimalize(monomials: Iterable[Monomial]) -> List[Monomial]:
    """Drop every monomial divisible by another one; result sorted descending"""
    ordered = sorted(set(monomials), key=lambda m: (m.degree, [-e for e in m.exponents]))
    kept: List[Monomial] = []
    for m in ordered:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return sorted(kept, reverse=True)


class MonomialIdeal:
    """A monomial ideal kept as its minimal generating set"""

    def __init__(self, n: int, generators: Iterable[Monomial]):
        self.n = n
        gens = list(generators)
        for m in gens:
            if len(m.exponents) != 2 * n:
                raise ValueError(f"monomial {m} does not live in {2 * n} variables")
        self.generators: Tuple[Monomial, ...] = tuple(minimalize(gens))

    @classmethod
    def parse(cls, n: int, texts: Sequence[str]) -> "MonomialIdeal":
        return cls(n, [Monomial.parse(t, n) for t in texts])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.n, self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal({', '.join(map(str, self.generators))})"

    @property
    def num_variables(self) -> int:
        return 2 * self.n

    def is_squarefree(self) -> bool:
        return all(m.is_squarefree() for m in self.generators)

    def masks(self) -> List[int]:
        """Support masks; only meaningful for squarefree ideals"""
        return [m.support for m in self.generators]

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def used_variables(self) -> int:
        mask = 0
        for m in self.generators:
            mask |= m.support
        return mask

    def to_strings(self) -> List[str]:
        return [str(m) for m in self.generators]

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise ValueError("ideals live in different rings")
        return MonomialIdeal(self.n, self.generators + other.generators)
