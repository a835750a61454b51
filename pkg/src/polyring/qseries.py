"""
q-整数、q-阶乘与 q-二项式系数（Gauss 二项式）
"""
from functools import lru_cache
from typing import Tuple

from .mpoly import MPoly


@lru_cache(maxsize=4096)
def _q_binomial_coeffs(m: int, n: int) -> Tuple[int, ...]:
    # [m,n] = prod_{i=1..n} (1 - q^{m-n+i}) / (1 - q^i)；每步之后都是 [m-n+i, i]，整除
    if n < 0 or m < 0 or n > m:
        return ()
    n = min(n, m - n)
    coeffs = [1]
    for i in range(1, n + 1):
        a = m - n + i
        grown = coeffs + [0] * a
        for d, c in enumerate(coeffs):
            grown[d + a] -= c
        out = [0] * (len(grown) - i)
        for d in range(len(out)):
            out[d] = grown[d] + (out[d - i] if d >= i else 0)
        coeffs = out
    return tuple(coeffs)


def q_binomial(m: int, n: int, nz: int = 0) -> MPoly:
    """
    q-二项式系数 [m choose n]_q

    Args:
        m: 上指标（任意整数）
        n: 下指标（任意整数）
        nz: 结果多项式的 z 变量个数

    Returns:
        非负系数的 q 多项式；不满足 0 <= n <= m 时为 0
    """
    return MPoly.from_q_coeffs(_q_binomial_coeffs(m, n), nz)


def q_integer(n: int) -> MPoly:
    """[n]_q = 1 + q + ... + q^{n-1}"""
    return MPoly.from_q_coeffs([1] * max(n, 0))


def q_factorial(n: int) -> MPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q"""
    result = MPoly.one()
    for j in range(1, n + 1):
        result = result * q_integer(j)
    return result
