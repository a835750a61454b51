"""
特征标模块
F 因子、费米型公式、正合列递归、q-超项式
"""

from .f_factor import f_factor
from .fermionic import reduce_one_level, char_fermionic
from .recursion import (
    ReductionBranch,
    ReductionStep,
    reduction_steps,
    char_recursive,
    recursion_tree,
    filtration_coefficients,
    chi_tilde,
    check_modified_recursion,
)
from .supernomial import supernomial, supernomial_table, top_level_chain
from .identity import exact_sequence_char_identity

__all__ = [
    'f_factor',
    'reduce_one_level',
    'char_fermionic',
    'ReductionBranch',
    'ReductionStep',
    'reduction_steps',
    'char_recursive',
    'recursion_tree',
    'filtration_coefficients',
    'chi_tilde',
    'check_modified_recursion',
    'supernomial',
    'supernomial_table',
    'top_level_chain',
    'exact_sequence_char_identity',
]
