"""
level 限制的 Kostka 多项式（费米型）

K^(k)_{l,μ}(q) = Σ_s q^{s·As + v·s} ∏_i [ (A(m−2s) − v + s)_i choose s_i ]_q
其中 m_i = μ_i − μ_{i+1}，A_ij = min(i,j)，v_i = (i−k+l)₊，求和取遍 2|s| = |m| − l，|u| = Σ i u_i
"""
from typing import Iterator, List, Sequence, Tuple

from pydantic import BaseModel, Field

from src.errors import DomainError
from src.partitions import Partition, partition_to_mvec
from src.polyring import MPoly, q_binomial
from src.utils import register_cache

_restricted_cache = register_cache("restricted_kostka")


class RestrictedKostkaParams(BaseModel):
    """费米型求和的参数"""
    k: int = Field(..., description="level")
    l: int = Field(..., description="最高权标签 0 <= l <= k")
    m: Tuple[int, ...] = Field(..., description="(m_1, ..., m_k)")

    class Config:
        frozen = True

    @property
    def A(self) -> List[List[int]]:
        return [[min(i, j) for j in range(1, self.k + 1)] for i in range(1, self.k + 1)]

    @property
    def v(self) -> Tuple[int, ...]:
        return tuple(max(i - self.k + self.l, 0) for i in range(1, self.k + 1))

    @property
    def weighted_size(self) -> int:
        """|m| = Σ i m_i"""
        return weighted_size(self.m)

    def summation_vectors(self) -> Iterator[Tuple[int, ...]]:
        """所有 s ∈ Z^k_{≥0}，2|s| = |m| − l"""
        excess = self.weighted_size - self.l
        if excess < 0 or excess % 2:
            return iter(())
        return _vectors_of_weighted_size(excess // 2, self.k)


def weighted_size(u: Sequence[int]) -> int:
    """|u| = Σ i u_i（下标从 1 开始）"""
    return sum(i * x for i, x in enumerate(u, start=1))


def _vectors_of_weighted_size(target: int, k: int) -> Iterator[Tuple[int, ...]]:
    # 从最高分量开始，s_i <= 剩余量 / i
    def _build(i: int, remaining: int) -> Iterator[List[int]]:
        if i == 0:
            if remaining == 0:
                yield []
            return
        for s_i in range(remaining // i, -1, -1):
            for rest in _build(i - 1, remaining - i * s_i):
                yield rest + [s_i]

    for vec in _build(k, target):
        yield tuple(vec)


def mat_vec(A: List[List[int]], x: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def quadratic_exponent(s: Sequence[int], A: List[List[int]], v: Sequence[int]) -> int:
    """s·As + v·s"""
    As = mat_vec(A, s)
    return sum(a * b for a, b in zip(s, As)) + sum(a * b for a, b in zip(v, s))


def validate_level_label(k: int, l: int, mu: Sequence[int]) -> Partition:
    """
    校验 level / 标签 / 行数

    Raises:
        DomainError: k < 1 或 l 不在 [0, k]
        ShapeError: μ 的行数超过 k
    """
    if k < 1:
        raise DomainError(f"level 必须为正: {k}")
    if not 0 <= l <= k:
        raise DomainError(f"标签 l = {l} 不在 [0, {k}] 内")
    mu = Partition(mu)
    partition_to_mvec(mu, k)
    return mu


def restricted_kostka(k: int, l: int, mu: Sequence[int]) -> MPoly:
    """
    限制 Kostka 多项式 K^(k)_{l,μ}(q)

    Args:
        k: level
        l: 标签 0 <= l <= k
        mu: 行数不超过 k 的分拆

    Returns:
        仅含 q 的多项式；|μ| 与 l 奇偶性不同时为 0
    """
    mu = validate_level_label(k, l, mu)
    return _restricted_cache.get_or_compute(
        (k, l, tuple(mu)), lambda: _restricted_kostka(k, l, mu)
    )


def _restricted_kostka(k: int, l: int, mu: Partition) -> MPoly:
    params = RestrictedKostkaParams(k=k, l=l, m=partition_to_mvec(mu, k))
    A, v, m = params.A, params.v, params.m
    total = MPoly.zero()
    for s in params.summation_vectors():
        shifted = mat_vec(A, [mi - 2 * si for mi, si in zip(m, s)])
        term = MPoly.one()
        for i in range(k):
            factor = q_binomial(shifted[i] - v[i] + s[i], s[i])
            if factor.is_zero():
                term = factor
                break
            term = term * factor
        if term.is_zero():
            continue
        total = total + term.shift_monomial(quadratic_exponent(s, A, v))
    return total
