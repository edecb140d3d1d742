"""Suborbit statistics of permutation groups and Cayley graph counting checks."""

from .errors import SuborbitLabError
from .perm import Permutation, PermGroup
from .groups import GroupTable
from .suborbits import (
    FIVE_SIXTHS,
    SuborbitProfile,
    bergman_lenstra_classify,
    conjecture_form_check,
    gap_scan,
    lemma_structure_check,
    suborbit_profile,
)
from .cayley import (
    c_of_R,
    cayley_digraph,
    census_profile,
    invariant_count,
    quadratic_form_classify,
    regular_identification,
    s_set_formula_check,
    tau_analysis,
)

__version__ = "0.1.0"

__all__ = [
    "FIVE_SIXTHS",
    "GroupTable",
    "PermGroup",
    "Permutation",
    "SuborbitLabError",
    "SuborbitProfile",
    "bergman_lenstra_classify",
    "c_of_R",
    "cayley_digraph",
    "census_profile",
    "conjecture_form_check",
    "gap_scan",
    "invariant_count",
    "lemma_structure_check",
    "quadratic_form_classify",
    "regular_identification",
    "s_set_formula_check",
    "suborbit_profile",
    "tau_analysis",
]
