"""
暴力验证模块
R/J(n,k) 的精确线性代数、显式赋值表示的过滤张量积、余不变量商、正合列与过滤等式检查
"""

from .linalg import (
    RowEchelon,
    bareiss_rank,
    sympy_rank,
    exact_rank,
    sparse_rank,
    clear_denominators,
    to_sparse,
)
from .graded import (
    VarIndex,
    GradedPiece,
    GradedVectorSpace,
    variables,
    monomials,
    monomial_grading,
    graded_pieces,
    weight_vectors,
)
from .ideal import (
    generator_poly,
    iter_ideal_generators,
    ideal_generators,
    quotient_piece,
    quotient_space,
    hilbert_character,
)
from .evaluation import ModuleKind, EvaluationModule
from .filtered import (
    FilteredTensorProduct,
    fusion_gr_character,
    check_fusion_independence,
    mode_bound_check,
    default_z,
)
from .coinv_quotient import coinv_quotient_character, expected_coinv_character
from .exact_sequence import admissible_pivots, exact_sequence_check
from .cyclic_filtration import CyclicModuleKind, cyclic_filtration_check, reducible_restriction_check

__all__ = [
    'RowEchelon',
    'bareiss_rank',
    'sympy_rank',
    'exact_rank',
    'sparse_rank',
    'clear_denominators',
    'to_sparse',
    'VarIndex',
    'GradedPiece',
    'GradedVectorSpace',
    'variables',
    'monomials',
    'monomial_grading',
    'graded_pieces',
    'weight_vectors',
    'generator_poly',
    'iter_ideal_generators',
    'ideal_generators',
    'quotient_piece',
    'quotient_space',
    'hilbert_character',
    'ModuleKind',
    'EvaluationModule',
    'FilteredTensorProduct',
    'fusion_gr_character',
    'check_fusion_independence',
    'mode_bound_check',
    'default_z',
    'coinv_quotient_character',
    'expected_coinv_character',
    'admissible_pivots',
    'exact_sequence_check',
    'CyclicModuleKind',
    'cyclic_filtration_check',
    'reducible_restriction_check',
]
