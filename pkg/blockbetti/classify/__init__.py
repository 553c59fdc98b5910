"""
Classification of indecomposable block graphs
"""

from blockbetti.classify.forbidden import (
    CASE_TAGS,
    T_GRAPHS,
    ForbiddenHit,
    contains_forbidden,
    find_induced,
    forbidden_t_graphs,
)
from blockbetti.classify.verdict import (
    ClassificationVerdict,
    CutpointCheck,
    classify,
    satisfies_cutpoint_condition,
)

__all__ = [
    "CASE_TAGS",
    "T_GRAPHS",
    "ForbiddenHit",
    "ClassificationVerdict",
    "CutpointCheck",
    "classify",
    "contains_forbidden",
    "find_induced",
    "forbidden_t_graphs",
    "satisfies_cutpoint_condition",
]
