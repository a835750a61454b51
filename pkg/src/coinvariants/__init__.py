"""
余不变量模块
Verlinde 代数、余不变量特征标的各种形式
"""

from .validation import validate_coinvariant_args
from .verlinde import (
    VerlindeElement,
    fusion_rule,
    verlinde_mul,
    verlinde_expansion,
    verlinde_dim,
    fusion_dim_sum,
    check_verlinde_kostka,
)
from .formulas import (
    CoinvariantIdealSpec,
    coinv_character,
    coinv_character_w3,
    coinv_character_alternating,
    restrict_w3_character,
)

__all__ = [
    'validate_coinvariant_args',
    'VerlindeElement',
    'fusion_rule',
    'verlinde_mul',
    'verlinde_expansion',
    'verlinde_dim',
    'fusion_dim_sum',
    'check_verlinde_kostka',
    'CoinvariantIdealSpec',
    'coinv_character',
    'coinv_character_w3',
    'coinv_character_alternating',
    'restrict_w3_character',
]
