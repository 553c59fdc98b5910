"""
Simplicial complexes on at most 64 vertices encoded as bitmasks, and
their reduced homology over F_p or the rationals.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence

from pydantic import BaseModel

from blockbetti.core.errors import check_budget
from blockbetti.resolutions.matrix import ExactMatrix

logger = logging.getLogger(__name__)

MAX_GROUND = 64
DEFAULT_MAX_FACES = 2_000_000


def bits(mask: int) -> List[int]:
    """Positions of the set bits, increasing"""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class IntegralHomology(BaseModel):
    """H~_k over ZZ as free rank plus torsion coefficients"""
    k: int
    rank: int
    torsion: List[int]


class SimplicialComplex:
    """
    A complex given by its facets (bitmasks over the ground set).

    No facets is the void complex; the single facet 0 is {∅}.
    """

    def __init__(
        self, facets: Iterable[int], max_faces: int = DEFAULT_MAX_FACES, minimal: bool = False
    ):
        candidates = sorted(set(facets), key=lambda f: -bin(f).count("1"))
        kept: List[int] = []
        for f in candidates:
            if f >> MAX_GROUND:
                raise ValueError("ground set is limited to 64 elements")
            if minimal or not any(f & k == f for k in kept):
                kept.append(f)
        self.facets: List[int] = sorted(kept)
        self.max_faces = max_faces
        self._faces: Dict[int, List[int]] = {}

    @classmethod
    def from_sets(cls, facets: Iterable[Iterable[int]], **kwargs) -> "SimplicialComplex":
        masks = []
        for facet in facets:
            mask = 0
            for v in facet:
                mask |= 1 << v
            masks.append(mask)
        return cls(masks, **kwargs)

    @classmethod
    def from_faces(cls, faces: Iterable[int], **kwargs) -> "SimplicialComplex":
        """Build from an explicit face list closed under subsets"""
        face_set = set(faces)
        ground = 0
        by_size: Dict[int, List[int]] = {}
        for f in sorted(face_set):
            ground |= f
            by_size.setdefault(bin(f).count("1"), []).append(f)
        maximal = [
            f for f in face_set
            if not any((f | (1 << v)) in face_set for v in bits(ground & ~f))
        ]
        complex_ = cls(maximal, minimal=True, **kwargs)
        complex_._faces = by_size
        return complex_

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        if self.is_void:
            return -2
        return max(bin(f).count("1") for f in self.facets) - 1

    def faces(self, size: int) -> List[int]:
        """Faces with ``size`` vertices, sorted"""
        if size in self._faces:
            return self._faces[size]
        found = set()
        for facet in self.facets:
            members = bits(facet)
            if len(members) < size:
                continue
            for combo in combinations(members, size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                found.add(mask)
            check_budget("complex_faces", len(found), self.max_faces)
        result = sorted(found)
        self._faces[size] = result
        return result

    def boundary(self, size: int, p: int) -> ExactMatrix:
        """Boundary from faces of ``size`` vertices to faces of size-1, one row per face"""
        targets = {f: k for k, f in enumerate(self.faces(size - 1))}
        rows = []
        for face in self.faces(size):
            row = {}
            for t, v in enumerate(bits(face)):
                row[targets[face ^ (1 << v)]] = -1 if t % 2 else 1
            rows.append(row)
        return ExactMatrix(len(rows), len(targets), rows, p)

    def _rank(self, size: int, p: int, cache: Dict[int, int]) -> int:
        """Rank of the boundary out of ``size``-vertex faces"""
        if size not in cache:
            if size <= 0 or size - 1 > self.dimension + 1 or not self.faces(size):
                cache[size] = 0
            else:
                cache[size] = self.boundary(size, p).rank()
        return cache[size]

    def homology_ranks(self, p: int = 2, degrees: Optional[Sequence[int]] = None) -> Dict[int, int]:
        """
        dim H~_k for k in ``degrees`` (default -1..dim), nonzero or not.
        """
        if self.is_void:
            return {k: 0 for k in (degrees if degrees is not None else [])}
        wanted = list(degrees) if degrees is not None else list(range(-1, self.dimension + 1))
        cache: Dict[int, int] = {}
        result = {}
        for k in wanted:
            if k < -1 or k > self.dimension:
                result[k] = 0
                continue
            size = k + 1
            chains = len(self.faces(size))
            result[k] = chains - self._rank(size, p, cache) - self._rank(size + 1, p, cache)
        return result

    def integral_homology(self) -> List[IntegralHomology]:
        """H~_k over ZZ for k = -1..dim via Smith normal form"""
        if self.is_void:
            return []
        out = []
        for k in range(-1, self.dimension + 1):
            size = k + 1
            chains = len(self.faces(size))
            down = self.boundary(size, 0).rank() if size > 0 else 0
            if size + 1 <= self.dimension + 1:
                factors = self.boundary(size + 1, 0).invariant_factors()
            else:
                factors = []
            out.append(
                IntegralHomology(
                    k=k,
                    rank=chains - down - len(factors),
                    torsion=[d for d in factors if d > 1],
                )
            )
        return out


def homology_ranks(c: SimplicialComplex, p: int = 2) -> List[int]:
    """dim H~_k for k = -1..dim, listed in that order"""
    ranks = c.homology_ranks(p)
    return [ranks[k] for k in sorted(ranks)]
