"""Enumeration of preferred extensions of abstract argumentation frameworks."""

from .collation import maximal_subset_collation, unique_max_admissible_of_dag
from .dispatch import RunReport, dispatch
from .errors import (
    ConsistencyError,
    InputError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    SemanticError,
)
from .formats import parse_apx, parse_tgf, to_apx, to_tgf
from .framework import (
    ArgumentationFramework,
    induced_subframework,
    is_acceptable,
    is_admissible,
    is_conflict_free,
    resolution_order,
)
from .generators import generate
from .kernel import active_backend, available_backends, use_backend
from .mase import MaseInstance, apply_undefendable, mase_enumerate, mase_enumerate_2k
from .mis import mis_preferred_enumerate, symmetrize
from .mls import (
    SetContainingFamily,
    build_family_exhaustive,
    build_family_random,
    determine_budget,
    mls_enumerate,
)
from .oracle import oracle_admissible_sets, oracle_mase, oracle_preferred_extensions
from .oriented import PHI, OrientedState, oriented_enumerate, recognize_Fn
from .stats import SearchStats
from .translations import (
    CnfFormula,
    TranslationWitness,
    apply_psi,
    extended_translate,
    invert_psi,
    loopless_translate,
    oriented_translate,
    parse_dimacs,
)

__all__ = [
    "active_backend",
    "apply_psi",
    "apply_undefendable",
    "ArgumentationFramework",
    "available_backends",
    "build_family_exhaustive",
    "build_family_random",
    "CnfFormula",
    "ConsistencyError",
    "determine_budget",
    "dispatch",
    "extended_translate",
    "generate",
    "induced_subframework",
    "InputError",
    "invert_psi",
    "is_acceptable",
    "is_admissible",
    "is_conflict_free",
    "loopless_translate",
    "mase_enumerate",
    "mase_enumerate_2k",
    "MaseInstance",
    "maximal_subset_collation",
    "mis_preferred_enumerate",
    "mls_enumerate",
    "oracle_admissible_sets",
    "oracle_mase",
    "oracle_preferred_extensions",
    "oriented_enumerate",
    "oriented_translate",
    "OrientedState",
    "parse_apx",
    "parse_dimacs",
    "parse_tgf",
    "ParseError",
    "PHI",
    "PreconditionError",
    "recognize_Fn",
    "resolution_order",
    "ResourceLimitError",
    "RunReport",
    "SearchStats",
    "SemanticError",
    "SetContainingFamily",
    "symmetrize",
    "to_apx",
    "to_tgf",
    "TranslationWitness",
    "unique_max_admissible_of_dag",
    "use_backend",
]

__version__ = "0.1.0"
