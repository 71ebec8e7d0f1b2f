# cohomotopy\cohomotopy\algebra\__init__.py

from .matrix import IntegerMatrix, unit_vector, zero_vector
from .snf import SmithForm, smith_form, smith_normal_form, integer_kernel, solve, in_span
from .groups import (
    GroupInvariants,
    PresentedAbelianGroup,
    group_invariants,
    direct_sum,
    subquotient,
    subquotient_coordinates,
)
from .homs import (
    AbHom,
    Subgroup,
    lift,
    hom_kernel,
    kernel_subgroup,
    hom_image,
    image_subgroup,
    hom_cokernel,
    torsion_subgroup,
    two_torsion,
    p_torsion,
    preimage,
)
from .modp import ModPMap, row_reduce, span_contains, span_rank
from .extensions import (
    Verdict,
    ElementaryTwoExtensionProblem,
    ExtensionResult,
    build_extension,
    classify_elementary_two_extension,
    enumerate_extensions,
    maximal_fusion,
)

__all__ = [
    # Integer matrices
    'IntegerMatrix', 'unit_vector', 'zero_vector',
    'SmithForm', 'smith_form', 'smith_normal_form', 'integer_kernel', 'solve', 'in_span',

    # Presented groups
    'GroupInvariants', 'PresentedAbelianGroup', 'group_invariants', 'direct_sum',
    'subquotient', 'subquotient_coordinates',

    # Homomorphisms
    'AbHom', 'Subgroup', 'lift', 'hom_kernel', 'kernel_subgroup', 'hom_image', 'image_subgroup',
    'hom_cokernel', 'torsion_subgroup', 'two_torsion', 'p_torsion', 'preimage',

    # Mod-p linear algebra
    'ModPMap', 'row_reduce', 'span_contains', 'span_rank',

    # Extensions
    'Verdict', 'ElementaryTwoExtensionProblem', 'ExtensionResult', 'build_extension',
    'classify_elementary_two_extension', 'enumerate_extensions', 'maximal_fusion',
]
