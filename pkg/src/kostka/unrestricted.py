"""
非限制 Kostka 多项式
从 sl2 特征标 χ^(2)[μ] 自顶向下逐层剥离不可约特征标
"""
from typing import Dict, Sequence

from src.characters import char_fermionic, top_level_chain
from src.errors import ConsistencyError, DomainError
from src.partitions import Partition
from src.polyring import MPoly
from src.utils import register_cache

_decomposition_cache = register_cache("kostka_decomposition")


def _string(center: int, j: int) -> MPoly:
    # z^{(|μ|−j)/2} + … + z^{(|μ|+j)/2}
    low = (center - j) // 2
    return MPoly({(0, (e,)): 1 for e in range(low, low + j + 1)}, 1)


def kostka_decomposition(mu: Sequence[int]) -> Dict[int, MPoly]:
    """
    χ^(2)[μ] = Σ_j (z^{(|μ|−j)/2} + … + z^{(|μ|+j)/2}) K_{j,μ}(q)

    Returns:
        j -> K_{j,μ}（只含非零项）

    Raises:
        ConsistencyError: 剥离后余项非零
    """
    mu = Partition(mu)
    return _decomposition_cache.get_or_compute(tuple(mu), lambda: _decompose(mu))


def _decompose(mu: Partition) -> Dict[int, MPoly]:
    size = mu.size
    remainder = char_fermionic(top_level_chain(mu, 2))
    result: Dict[int, MPoly] = {}
    for j in range(size, -1, -2):
        top_power = (size + j) // 2
        coeff = remainder.coefficient_of(0, top_power)
        if coeff.is_zero():
            continue
        result[j] = coeff
        remainder = remainder - coeff.with_num_z_vars(1) * _string(size, j)
    if not remainder.is_zero():
        raise ConsistencyError(f"μ = {mu} 的 Kostka 剥离余项非零: {remainder}")
    return result


def unrestricted_kostka(j: int, mu: Sequence[int]) -> MPoly:
    """
    K_{j,μ}(q)

    Raises:
        DomainError: j < 0
    """
    if j < 0:
        raise DomainError(f"j 不能为负: {j}")
    mu = Partition(mu)
    if j > mu.size or (mu.size - j) % 2:
        return MPoly.zero()
    return kostka_decomposition(mu).get(j, MPoly.zero())
