"""
F 因子
F_{κ,ν}(q) = q^{Σ_{a<L} ν_{a+1}(κ_a−ν_a)} ∏_{a≤L} [κ_a−ν_{a+1} choose ν_a−ν_{a+1}]_q
"""
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from src.polyring import MPoly, q_binomial


def _entry(vec: Tuple[int, ...], i: int) -> int:
    return vec[i] if i < len(vec) else 0


@lru_cache(maxsize=65536)
def _f_factor(kappa: Tuple[int, ...], nu: Tuple[int, ...], length: int) -> MPoly:
    exponent = 0
    for a in range(length - 1):
        exponent += _entry(nu, a + 1) * (_entry(kappa, a) - _entry(nu, a))
    result = MPoly.one()
    for a in range(length):
        top = _entry(kappa, a) - _entry(nu, a + 1)
        bottom = _entry(nu, a) - _entry(nu, a + 1)
        factor = q_binomial(top, bottom)
        if factor.is_zero():
            return MPoly.zero()
        result = result * factor
    if exponent < 0:
        # 所有二项式非零时 ν ⊂ κ，指数不可能为负
        return MPoly.zero()
    return result.shift_monomial(exponent)


def f_factor(kappa: Sequence[int], nu: Sequence[int], length: Optional[int] = None) -> MPoly:
    """
    计算 F_{κ,ν}(q)

    Args:
        kappa: 整数向量 κ（通常是分拆或分拆之差）
        nu: 整数向量 ν
        length: 乘积长度 L，默认 max(len κ, len ν)；更大的 L 得到同一多项式

    Returns:
        仅含 q 的多项式；任一二项式为零时返回 0
    """
    kappa = tuple(kappa)
    nu = tuple(nu)
    default = max(len(kappa), len(nu))
    if length is None or length < default:
        length = default
    return _f_factor(kappa, nu, length)
