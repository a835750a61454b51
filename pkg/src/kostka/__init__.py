"""
Kostka 模块
限制与非限制 Kostka 多项式、交错和、分支系数
"""

from .restricted import (
    RestrictedKostkaParams,
    restricted_kostka,
    validate_level_label,
    weighted_size,
)
from .unrestricted import kostka_decomposition, unrestricted_kostka
from .alternating import (
    alternating_terms,
    alternating_kostka,
    check_alternating_sum,
    x_coefficient,
    alternating_x_sum,
)

__all__ = [
    'RestrictedKostkaParams',
    'restricted_kostka',
    'validate_level_label',
    'weighted_size',
    'kostka_decomposition',
    'unrestricted_kostka',
    'alternating_terms',
    'alternating_kostka',
    'check_alternating_sum',
    'x_coefficient',
    'alternating_x_sum',
]
