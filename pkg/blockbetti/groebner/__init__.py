"""
Binomial edge ideals: generators, admissible paths, initial ideals,
the Buchberger oracle and normal forms
"""

from blockbetti.groebner.buchberger import buchberger_basis, buchberger_initial_ideal
from blockbetti.groebner.monomials import (
    Binomial,
    Monomial,
    MonomialIdeal,
    minimalize,
    variable_name,
    variable_position,
)
from blockbetti.groebner.normal_form import (
    ReducedBasis,
    hilbert_function,
    normal_form,
    standard_monomials,
)
from blockbetti.groebner.paths import (
    AdmissiblePath,
    admissible_basis,
    admissible_paths,
    binomial_generators,
    initial_ideal,
)
from blockbetti.groebner.separation import SupportSplit, support_split

__all__ = [
    "AdmissiblePath",
    "Binomial",
    "Monomial",
    "MonomialIdeal",
    "ReducedBasis",
    "SupportSplit",
    "admissible_basis",
    "admissible_paths",
    "binomial_generators",
    "buchberger_basis",
    "buchberger_initial_ideal",
    "hilbert_function",
    "initial_ideal",
    "minimalize",
    "normal_form",
    "standard_monomials",
    "support_split",
    "variable_name",
    "variable_position",
]
