"""Exact engine for finite-dimensional Z-graded Lie algebras."""

from .algebra import GradedLieAlgebra, from_brackets, homogeneous_basis, structural_checks
from .analysis import (
    Effectiveness,
    action_on_m,
    centralizer_in_degree0,
    characteristic_element,
    characteristic_prolongation,
    commutant,
    decomposability_check,
    derived_algebra,
    effectiveness_class,
    effectiveness_kernels,
    is_ideal,
    is_semisimple,
    is_solvable,
    nilradical_degree0,
    quotient,
    radical,
    reductive_type,
    subalgebra,
    verify_levi,
)
from .construct import cartan_coweight, chevalley_basis, from_matrices, lie_closure
from .freelie import free_lie_dims, hall_basis, witt_dims
from .jordan import decomposable_envelope, jordan_chevalley
from .kernels import jacobi_violations, killing_form, use_numba
from .regrade import GradedModule, grading_violations, is_representation, regrade_module

__all__ = [
    "Effectiveness",
    "GradedLieAlgebra",
    "GradedModule",
    "action_on_m",
    "cartan_coweight",
    "centralizer_in_degree0",
    "characteristic_element",
    "characteristic_prolongation",
    "chevalley_basis",
    "commutant",
    "decomposability_check",
    "decomposable_envelope",
    "derived_algebra",
    "effectiveness_class",
    "effectiveness_kernels",
    "free_lie_dims",
    "from_brackets",
    "from_matrices",
    "grading_violations",
    "hall_basis",
    "homogeneous_basis",
    "is_ideal",
    "is_representation",
    "is_semisimple",
    "is_solvable",
    "jacobi_violations",
    "jordan_chevalley",
    "killing_form",
    "lie_closure",
    "nilradical_degree0",
    "quotient",
    "radical",
    "reductive_type",
    "regrade_module",
    "structural_checks",
    "subalgebra",
    "use_numba",
    "verify_levi",
    "witt_dims",
]
