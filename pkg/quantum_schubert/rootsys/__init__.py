from .cartan import cartan_matrix, parse_type
from .system import RootSystem, WeylElement, build, inverse, reduced_word
from .center import (
    AlcoveWalkResult,
    CentralElement,
    alcove_walk,
    center_compose,
    center_elements,
    center_to_weyl,
    levi_conjugation_check,
    phi_homomorphism_check,
    sign_check,
)
from .parabolic import (
    DegreeVector,
    ParabolicChoice,
    bruhat_codim,
    codim_shift,
    composition_exponent,
    degree_shift,
    dim_condition_check,
    minimal_cosets,
    operator_composition_check,
    tc_exponent,
)
