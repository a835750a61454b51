"""
费米型特征标公式
χ[μ^(n),…,μ^(1)] = Σ_ν z_{n−1}^{|μ^(n)|−|ν|} F_{μ^(n)−μ^(n−1), ν−μ^(n−1)} χ[ν, μ^(n−2), …]
"""
from typing import List, Tuple

from src.errors import ArityError
from src.partitions import MChain, Partition, partitions_between, vec_sub
from src.polyring import MPoly
from src.utils import register_cache

from .f_factor import f_factor

_fermionic_cache = register_cache("char_fermionic")


def reduce_one_level(chain: MChain) -> List[Tuple[Partition, MPoly]]:
    """
    单层约化

    Args:
        chain: 至少两层的分拆链

    Returns:
        [(ν, z_{n−1}^{|μ^(n)|−|ν|} F(q)), ...]，ν 取遍 μ^(n−1) ⊂ ν ⊂ μ^(n)，
        系数为零的 ν 省略；系数多项式有 n−1 个 z 变量

    Raises:
        ArityError: 单层链
    """
    chain = MChain(chain)
    if chain.n < 2:
        raise ArityError("单层链没有可约化的层")
    nz = chain.n - 1
    top, below = chain[-1], chain[-2]
    kappa = vec_sub(top, below)
    out: List[Tuple[Partition, MPoly]] = []
    for nu in partitions_between(top, below):
        f = f_factor(kappa, vec_sub(nu, below))
        if f.is_zero():
            continue
        z_exps = [0] * nz
        z_exps[nz - 1] = top.size - nu.size
        out.append((nu, f.with_num_z_vars(nz).shift_monomial(0, z_exps)))
    return out


def _lower_chain(chain: MChain, nu: Partition) -> MChain:
    # (μ^(1), …, μ^(n−2), ν)
    return MChain(tuple(chain[:-2]) + (nu,))


def char_fermionic(chain: MChain) -> MPoly:
    """
    费米型公式计算特征标（接受任意包含链）

    Returns:
        q, z_1..z_{n−1} 的多项式，系数非负
    """
    chain = MChain(chain)
    return _fermionic_cache.get_or_compute(chain.key(), lambda: _char_fermionic(chain))


def _char_fermionic(chain: MChain) -> MPoly:
    nz = chain.n - 1
    if chain.n == 1:
        return MPoly.one()
    total = MPoly.zero(nz)
    for nu, coeff in reduce_one_level(chain):
        lower = char_fermionic(_lower_chain(chain, nu)).with_num_z_vars(nz)
        total = total + coeff * lower
    return total
