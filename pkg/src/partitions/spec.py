"""
融合积 spec
因子多重集 (n_p, k_p)：第 p 个因子是 sl_{n_p} 的 k_p 次对称张量
"""
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from src.errors import DomainError, ParseError

from .chain import MChain
from .partition import Partition, vec_add

Factor = Tuple[int, int]


class FusionSpec(BaseModel):
    """规范化后的融合积数据"""
    n: int = Field(..., description="环境秩 n（sl_n）")
    factors: Tuple[Factor, ...] = Field((), description="按 (n_p 降序, k_p 降序) 排列的因子")

    class Config:
        frozen = True

    # ---- 派生数据 ----

    @property
    def N(self) -> int:
        """因子个数"""
        return len(self.factors)

    def N_a(self, a: int) -> int:
        """N_a = #{p : n_p > a}，x_a 在这些因子上非平凡作用"""
        return sum(1 for n_p, _ in self.factors if n_p > a)

    @property
    def N_list(self) -> Tuple[int, ...]:
        """(N_0, N_1, ..., N_n)"""
        return tuple(self.N_a(a) for a in range(self.n + 1))

    def X_a(self, a: int) -> FrozenSet[int]:
        """x_a 作用非平凡的因子下标集合"""
        return frozenset(p for p, (n_p, _) in enumerate(self.factors) if n_p > a)

    def weight_cap(self, a: int) -> int:
        """Σ_{p∈X_a} k_p，x_a 的总次数上限"""
        return sum(k_p for n_p, k_p in self.factors if n_p > a)

    def kappa(self, b: int) -> Partition:
        """κ^(b)：n_p = b 的因子的 k 组成的分拆的共轭"""
        ks = sorted((k_p for n_p, k_p in self.factors if n_p == b), reverse=True)
        return Partition(ks).conjugate()

    @property
    def mu_chain(self) -> MChain:
        """μ^(a) = Σ_{b≤a} κ^(b)"""
        levels = []
        acc: Tuple[int, ...] = ()
        for a in range(1, self.n + 1):
            acc = vec_add(acc, self.kappa(a))
            levels.append(Partition(acc))
        return MChain(levels)

    @property
    def total_boxes(self) -> int:
        return sum(k_p for _, k_p in self.factors)

    @property
    def num_currents(self) -> int:
        """电流 x_1..x_{n-1} 的个数"""
        return self.n - 1

    def dimension(self) -> int:
        return spec_dimension(self)

    def text(self) -> str:
        return format_spec(self)

    def replace_factor(self, p: int, factor: Factor) -> "FusionSpec":
        """把第 p 个因子换成 factor 后重新规范化"""
        factors = list(self.factors)
        factors[p] = factor
        return normalize_spec(factors, self.n)


def normalize_spec(factors: Iterable[Sequence[int]], n: int) -> FusionSpec:
    """
    规范化 spec

    去掉 n_p = 1 与 k_p = 0 的因子（它们只贡献平凡模），
    按 (n_p 降序, k_p 降序) 稳定排序。

    Raises:
        DomainError: n < 1 或因子超出范围
    """
    if n < 1:
        raise DomainError(f"秩 n 必须至少为 1: {n}")
    kept: List[Factor] = []
    for factor in factors:
        n_p, k_p = int(factor[0]), int(factor[1])
        if not 1 <= n_p <= n:
            raise DomainError(f"因子 {n_p}:{k_p} 的 n_p 超出范围 [1, {n}]")
        if k_p < 0:
            raise DomainError(f"因子 {n_p}:{k_p} 的 k_p 不能为负")
        if n_p == 1 or k_p == 0:
            continue
        kept.append((n_p, k_p))
    kept.sort(key=lambda f: (-f[0], -f[1]))
    return FusionSpec(n=n, factors=tuple(kept))


def parse_spec(text: str, n: Optional[int] = None) -> FusionSpec:
    """
    解析 "3:2,3:2,2:1"；空 spec 写作 "-"

    Args:
        text: spec 文本
        n: 环境秩，默认取最大的 n_p

    Raises:
        ParseError: 格式错误
    """
    text = text.strip()
    factors: List[Factor] = []
    if text not in ("", "-"):
        for item in text.split(","):
            pieces = item.strip().split(":")
            if len(pieces) != 2:
                raise ParseError(f"因子 '{item}' 应为 n:k 格式")
            try:
                n_p, k_p = int(pieces[0]), int(pieces[1])
            except ValueError as e:
                raise ParseError(f"因子 '{item}' 不是整数对") from e
            factors.append((n_p, k_p))
    if n is None:
        n = max((n_p for n_p, _ in factors), default=1)
    try:
        return normalize_spec(factors, n)
    except DomainError as e:
        raise ParseError(e.message) from e


def format_spec(spec: FusionSpec) -> str:
    if not spec.factors:
        return "-"
    return ",".join(f"{n_p}:{k_p}" for n_p, k_p in spec.factors)


def module_dimension(m: int, k: int) -> int:
    """dim V^(m)_k = binom(k+m−1, m−1)"""
    return comb(k + m - 1, m - 1)


def spec_dimension(spec: FusionSpec) -> int:
    """∏_p binom(k_p + n_p − 1, n_p − 1)"""
    result = 1
    for n_p, k_p in spec.factors:
        result *= module_dimension(n_p, k_p)
    return result


def mu_nu_k(nu: Sequence[int], spec: FusionSpec) -> int:
    """
    μ(ν, k) = Σ_p ( Σ_{a<n_p} ν_a − k_p )₊

    Args:
        nu: (ν_1, ..., ν_{n−1})
    """
    if len(nu) != spec.n - 1:
        raise DomainError(f"ν 的长度应为 {spec.n - 1}，得到 {len(nu)}")
    total = 0
    for n_p, k_p in spec.factors:
        total += max(sum(nu[: n_p - 1]) - k_p, 0)
    return total


def spec_from_chain_top(mu: Sequence[int], n: int = 2) -> FusionSpec:
    """
    所有因子 n_p = n 的 spec，其 μ^(n) = mu（μ^(a) = ∅, a < n）

    κ^(n) = μ，故 k 取 μ′ 的各行
    """
    ks = Partition(mu).conjugate()
    return normalize_spec([(n, k) for k in ks], n)


def chain_to_spec(chain: MChain) -> FusionSpec:
    """
    由链的相邻差恢复 spec（差必须都是分拆）

    κ^(a) = μ^(a) − μ^(a−1)，n_p = a 的因子的 k 为 κ^(a)′ 的各行
    """
    if not chain.is_spec_chain():
        raise DomainError(f"链 {chain} 不是由 spec 得到的")
    factors: List[Factor] = []
    for a, diff in enumerate(chain.differences(), start=1):
        for k in Partition(diff).conjugate():
            factors.append((a, k))
    return normalize_spec(factors, chain.n)


def spec_counts(spec: FusionSpec) -> Dict[Factor, int]:
    """因子 -> 重数"""
    counts: Dict[Factor, int] = {}
    for factor in spec.factors:
        counts[factor] = counts.get(factor, 0) + 1
    return counts
