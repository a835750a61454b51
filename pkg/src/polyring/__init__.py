"""
多项式环模块
q 与 z 变量上的精确稀疏多项式运算、q-二项式
"""

from .mpoly import MPoly, ZSubstitution, poly_sum
from .qseries import q_binomial, q_integer, q_factorial

__all__ = [
    'MPoly',
    'ZSubstitution',
    'poly_sum',
    'q_binomial',
    'q_integer',
    'q_factorial',
]
