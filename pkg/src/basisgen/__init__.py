"""
单项式基模块
"""

from .builder import BasisMonomial, build_basis, format_monomial, parse_monomial, basis_census
from .verification import verify_basis, check_basis_census

__all__ = [
    'BasisMonomial',
    'build_basis',
    'format_monomial',
    'parse_monomial',
    'basis_census',
    'verify_basis',
    'check_basis_census',
]
