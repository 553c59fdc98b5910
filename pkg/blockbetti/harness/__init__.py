"""
Verification checks, corpora and the suite runner
"""

from typing import Dict, List, Type

from blockbetti.core.errors import UnknownNameError
from blockbetti.harness.base import (
    BaseCheck,
    Evidence,
    Expected,
    InstanceDescriptor,
    Report,
    Verdict,
    Workbench,
    quadrant,
)
from blockbetti.harness.corpus import (
    CorpusItem,
    list_builtin_corpora,
    load_builtin_corpus,
    parse_corpus,
)
from blockbetti.harness.hope import (
    ConjectureExtremalCheck,
    HopeCheck,
    HopeCombinatorialCheck,
    SemicontinuityCheck,
    check_hope,
)
from blockbetti.harness.oracles import CharacteristicCheck, EngineOraclesCheck, GroebnerOracleCheck
from blockbetti.harness.products import (
    CorollaryProductCheck,
    ExtremalProductCheck,
    PropProductCheck,
    check_corollary_product,
    check_prop_product,
)
from blockbetti.harness.restriction import RestrictionCheck, check_matsuda_murai
from blockbetti.harness.suite import SuiteResult, SuiteSummary, run_suite
from blockbetti.harness.theorem_main import (
    LeafInductionCheck,
    ProjdimCheck,
    TheoremMainCheck,
    check_theorem_main,
)

CHECKS: Dict[str, Type[BaseCheck]] = {
    check.name: check
    for check in (
        TheoremMainCheck,
        ProjdimCheck,
        LeafInductionCheck,
        PropProductCheck,
        CorollaryProductCheck,
        ExtremalProductCheck,
        HopeCombinatorialCheck,
        HopeCheck,
        SemicontinuityCheck,
        ConjectureExtremalCheck,
        RestrictionCheck,
        GroebnerOracleCheck,
        EngineOraclesCheck,
        CharacteristicCheck,
    )
}

# checks taking one positional option after a colon, e.g. "hope:monomial"
OPTION_CHECKS = {"theorem-main", "hope"}


def get_check(spec: str) -> BaseCheck:
    """
    Factory function to get a check by name.

    Args:
        spec: Check name, optionally "name:option" for theorem-main
            (monomial|binomial|both) and hope (combinatorial|monomial|binomial)

    Returns:
        Initialized check instance
    """
    name, _, option = spec.strip().partition(":")
    check_class = CHECKS.get(name)
    if check_class is None:
        raise UnknownNameError("check", name, list(CHECKS))
    if option:
        if name not in OPTION_CHECKS:
            raise UnknownNameError("check option", spec, sorted(OPTION_CHECKS))
        try:
            return check_class(option)
        except ValueError as e:
            raise UnknownNameError("check option", spec, [str(e)]) from e
    return check_class()


def list_checks() -> List[Dict[str, str]]:
    """List all registered checks"""
    return [
        {"name": name, "applies_to": cls.applies_to, "description": cls.description}
        for name, cls in CHECKS.items()
    ]


__all__ = [
    "BaseCheck",
    "CHECKS",
    "CorpusItem",
    "Evidence",
    "Expected",
    "InstanceDescriptor",
    "Report",
    "SuiteResult",
    "SuiteSummary",
    "Verdict",
    "Workbench",
    "check_corollary_product",
    "check_hope",
    "check_matsuda_murai",
    "check_prop_product",
    "check_theorem_main",
    "get_check",
    "list_builtin_corpora",
    "list_checks",
    "load_builtin_corpus",
    "parse_corpus",
    "quadrant",
    "run_suite",
]
