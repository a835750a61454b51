"""
q-超项式系数
S̃_{λ,μ}(q) 是 χ^(n)[μ] 中 z_1^{λ_2} … z_{n−1}^{λ_n} 的系数
"""
from itertools import product
from typing import Dict, Sequence, Tuple

from src.errors import DomainError
from src.partitions import MChain, Partition
from src.polyring import MPoly

from .fermionic import char_fermionic


def top_level_chain(mu: Sequence[int], n: int) -> MChain:
    """(∅, …, ∅, μ)"""
    if n < 1:
        raise DomainError(f"秩 n 必须至少为 1: {n}")
    return MChain([()] * (n - 1) + [Partition(mu)])


def supernomial(lambda_comp: Sequence[int], mu: Sequence[int]) -> MPoly:
    """
    q-超项式系数 S̃_{λ,μ}(q)

    Args:
        lambda_comp: λ ∈ Z^n_{≥0}，n 为其长度
        mu: 分拆 μ

    Raises:
        DomainError: |λ| ≠ |μ| 或 λ 有负分量
    """
    lam = tuple(int(x) for x in lambda_comp)
    mu = Partition(mu)
    if not lam:
        raise DomainError("λ 至少需要一个分量")
    if any(x < 0 for x in lam):
        raise DomainError(f"λ 不能有负分量: {lam}")
    if sum(lam) != mu.size:
        raise DomainError(f"|λ| = {sum(lam)} 与 |μ| = {mu.size} 不相等")
    character = char_fermionic(top_level_chain(mu, len(lam)))
    return character.coefficient_of_z(lam[1:])


def supernomial_table(mu: Sequence[int], n: int) -> Dict[Tuple[int, ...], MPoly]:
    """所有 |λ| = |μ| 的 λ ∈ Z^n_{≥0} 对应的非零 S̃_{λ,μ}"""
    mu = Partition(mu)
    character = char_fermionic(top_level_chain(mu, n))
    table: Dict[Tuple[int, ...], MPoly] = {}
    for tail in product(range(mu.size + 1), repeat=n - 1):
        head = mu.size - sum(tail)
        if head < 0:
            continue
        value = character.coefficient_of_z(tail)
        if not value.is_zero():
            table[(head,) + tuple(tail)] = value
    return table
