"""
正合列递归
χ[μ^(n), μ^(n−1), …] = χ[μ^(n), μ^(n−1)+(1^k), …](z_{n−1} → q z_{n−1}) + z_{n−1} χ[μ^(n)−e_k, μ^(n−1), …]
其中 k 为 μ^(n) − μ^(n−1) 的长度
"""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from src.errors import DomainError
from src.models import VerificationReport
from src.partitions import MChain, Partition, column_vector, unit_vector, vec_add, vec_sub
from src.polyring import MPoly, ZSubstitution
from src.utils import register_cache

from .fermionic import char_fermionic

_recursive_cache = register_cache("char_recursive")


class ReductionBranch(str, Enum):
    """约化分支"""
    IOTA = "iota"  # 子模：μ^(n−1) + (1^k)
    PSI = "psi"  # 商模：μ^(n) − e_k


class ReductionStep(BaseModel):
    """递归树的一条边"""
    branch: ReductionBranch = Field(..., description="分支")
    source: MChain = Field(..., description="源链")
    target: MChain = Field(..., description="目标链")
    coefficient: MPoly = Field(..., description="系数：ι 为 1（配合 shift），ψ 为 z_{n−1}")
    shift: bool = Field(..., description="是否需要代换 z_{n−1} → q z_{n−1}")
    modified_coefficient: MPoly = Field(..., description="修正特征标下的系数 q^{μ^(n−1)_1} z_{n−1}")
    k_row: int = Field(..., description="k = |μ^(n) − μ^(n−1)| 的长度")

    class Config:
        frozen = True
        arbitrary_types_allowed = True


def reduction_steps(chain: MChain) -> List[ReductionStep]:
    """
    一步约化

    Returns:
        [ι 边, ψ 边]；顶层差为零或只有一层时返回空列表

    Raises:
        DomainError: 链不是由 spec 得到的
    """
    chain = MChain(chain)
    if not chain.is_spec_chain():
        raise DomainError(f"链 {chain} 的相邻差不全是分拆，无法递归")
    if chain.n < 2:
        return []
    diff = chain.top_difference()
    if not diff:
        return []
    k = len(diff)
    nz = chain.n - 1
    top, below = chain[-1], chain[-2]

    iota_target = chain.replace_top(top, Partition(vec_add(below, column_vector(k))))
    psi_target = chain.replace_top(Partition(vec_sub(top, unit_vector(k))))

    z_last = MPoly.z_power(nz - 1, nz)
    return [
        ReductionStep(
            branch=ReductionBranch.IOTA,
            source=chain,
            target=iota_target,
            coefficient=MPoly.one(nz),
            shift=True,
            modified_coefficient=MPoly.one(nz),
            k_row=k,
        ),
        ReductionStep(
            branch=ReductionBranch.PSI,
            source=chain,
            target=psi_target,
            coefficient=z_last,
            shift=False,
            modified_coefficient=z_last.shift_monomial(below.part(1)),
            k_row=k,
        ),
    ]


def char_recursive(chain: MChain) -> MPoly:
    """
    递归计算特征标

    Raises:
        DomainError: 链不是由 spec 得到的
    """
    chain = MChain(chain)
    if not chain.is_spec_chain():
        raise DomainError(f"链 {chain} 的相邻差不全是分拆，无法递归")
    return _recursive_cache.get_or_compute(chain.key(), lambda: _char_recursive(chain))


def _char_recursive(chain: MChain) -> MPoly:
    if chain.n == 1:
        return MPoly.one()
    nz = chain.n - 1
    steps = reduction_steps(chain)
    if not steps:
        # μ^(n) = μ^(n−1)：降一层
        return char_recursive(chain.drop_top()).with_num_z_vars(nz)
    iota, psi = steps
    sub_char = char_recursive(iota.target).shift_z(nz - 1, 1)
    quot_char = psi.coefficient * char_recursive(psi.target)
    return sub_char + quot_char


def recursion_tree(chain: MChain) -> List[ReductionStep]:
    """
    从 chain 出发、只在顶层进行的所有约化边（广度优先，去重）

    顶层差为零的节点是组合因子 W^(n−1)[ν, …]，在此停止。
    """
    chain = MChain(chain)
    seen = {chain.key()}
    queue = [chain]
    edges: List[ReductionStep] = []
    while queue:
        node = queue.pop(0)
        for step in reduction_steps(node):
            edges.append(step)
            key = step.target.key()
            if key not in seen:
                seen.add(key)
                queue.append(step.target)
    return edges


def filtration_coefficients(chain: MChain) -> Dict[Partition, MPoly]:
    """
    组合因子的系数 C_ν（修正特征标下）：对递归树中所有路径的边权求和

    χ̃[μ^(n), μ^(n−1), …] = Σ_ν C_ν χ̃[ν, μ^(n−2), …]
    """
    chain = MChain(chain)
    if chain.n < 2:
        return {}
    memo: Dict[str, Dict[Partition, MPoly]] = {}

    def _walk(node: MChain) -> Dict[Partition, MPoly]:
        key = node.key()
        if key in memo:
            return memo[key]
        steps = reduction_steps(node)
        if not steps:
            result = {node[-1]: MPoly.one(node.n - 1)}
        else:
            result: Dict[Partition, MPoly] = {}
            for step in steps:
                for nu, c in _walk(step.target).items():
                    term = step.modified_coefficient * c
                    result[nu] = result.get(nu, MPoly.zero(node.n - 1)) + term
        memo[key] = result
        return result

    return {nu: c for nu, c in _walk(chain).items() if not c.is_zero()}


def chi_tilde(chain: MChain, character: Optional[MPoly] = None) -> MPoly:
    """
    修正特征标 χ̃ = χ(q, q^{μ^(1)_1} z_1, …, q^{μ^(n−1)_1} z_{n−1})
    """
    chain = MChain(chain)
    if character is None:
        character = char_recursive(chain) if chain.is_spec_chain() else char_fermionic(chain)
    subs = {
        a: ZSubstitution.shift(a, chain[a].part(1))
        for a in range(chain.n - 1)
        if chain[a].part(1)
    }
    return character.substitute(z_subs=subs)


def check_modified_recursion(chain: MChain) -> VerificationReport:
    """
    修正形式的三项关系
    χ̃[μ^(n), μ^(n−1), …] = χ̃[μ^(n), μ^(n−1)+(1^k), …] + q^{μ^(n−1)_1} z_{n−1} χ̃[μ^(n)−e_k, …]
    """
    chain = MChain(chain)
    steps = reduction_steps(chain)
    name = f"modified-recursion[{chain}]"
    if not steps:
        return VerificationReport.check(name, True, "顶层差为零，无需检查")
    iota, psi = steps
    lhs = chi_tilde(chain)
    rhs = chi_tilde(iota.target) + psi.modified_coefficient * chi_tilde(psi.target)
    return VerificationReport.compare(name, lhs, rhs)
