"""
余不变量特征标
费米型公式、两变量形式、交错和形式，以及两变量到单变量的字典
"""
from typing import List, Sequence, Tuple

from pydantic import BaseModel, Field, field_validator

from src.characters import f_factor
from src.errors import ConsistencyError, DomainError
from src.kostka import alternating_x_sum, restricted_kostka
from src.partitions import Partition, partitions_inside
from src.polyring import MPoly, ZSubstitution

from .validation import validate_coinvariant_args


class CoinvariantIdealSpec(BaseModel):
    """
    余不变量理想 I^(k)_l 的生成元：h23[0] + l, e23[0], e23[1]^{k−l+1}
    """
    k: int = Field(..., description="level")
    l: int = Field(..., description="最高权标签")

    class Config:
        frozen = True

    @field_validator("l")
    @classmethod
    def _label_in_range(cls, v, info):
        k = info.data.get("k")
        if k is not None and not 0 <= v <= k:
            raise ValueError(f"标签 l = {v} 不在 [0, {k}] 内")
        return v

    @classmethod
    def create(cls, k: int, l: int) -> "CoinvariantIdealSpec":
        """构造并把校验错误转换为 DomainError"""
        if k < 1 or not 0 <= l <= k:
            raise DomainError(f"level/标签超出范围: k={k}, l={l}")
        return cls(k=k, l=l)

    @property
    def nilpotency(self) -> int:
        """e23[1] 的幂次 k − l + 1"""
        return self.k - self.l + 1

    def generator_descriptions(self) -> List[str]:
        return ["h23[0]+l", "e23[0]", f"e23[1]^{self.nilpotency}"]

    def monomial_generators(self) -> List[Tuple[Tuple[int, int], int]]:
        """
        以电流变量给出的单项式生成元 ((a, i), 幂次)

        e23 即 x_1；h23[0] + l 由权条件代替
        """
        return [((1, 0), 1), ((1, 1), self.nilpotency)]

    def retained_weight(self, n: int, m: Sequence[int], size: int) -> bool:
        """
        保留的权空间

        n = 2: 2 m_1 = |μ| − l
        n = 3: 2 m_1 + m_2 = |λ| − l
        """
        if n == 2:
            return 2 * m[0] == size - self.l
        if n == 3:
            return 2 * m[0] + m[1] == size - self.l
        raise DomainError(f"余不变量商只对 n = 2, 3 定义: n = {n}")


def _terms(k: int, l: int, lam: Partition):
    # (μ, F_{λ,μ} K^(k)_{l,μ})，只保留非零项
    for mu in partitions_inside(lam):
        if (mu.size - l) % 2 or mu.size < l:
            continue
        kostka = restricted_kostka(k, l, mu)
        if kostka.is_zero():
            continue
        f = f_factor(lam, mu, k)
        if f.is_zero():
            continue
        yield mu, f * kostka


def coinv_character(k: int, l: int, lam: Sequence[int]) -> MPoly:
    """
    Σ_{μ⊂λ, |μ|≡l} z^{|μ|} F_{λ,μ}(q) K^(k)_{l,μ}(q)

    Returns:
        q, z 的多项式（一个 z 变量）
    """
    lam = validate_coinvariant_args(k, l, lam)
    total = MPoly.zero(1)
    for mu, value in _terms(k, l, lam):
        total = total + value.with_num_z_vars(1).shift_monomial(0, (mu.size,))
    return total


def coinv_character_w3(k: int, l: int, lam: Sequence[int]) -> MPoly:
    """
    Σ_{μ⊂λ, |μ|≡l} z_1^{(|μ|−l)/2} z_2^{|λ|−|μ|} F_{λ,μ}(q) K^(k)_{l,μ}(q)
    """
    lam = validate_coinvariant_args(k, l, lam)
    total = MPoly.zero(2)
    for mu, value in _terms(k, l, lam):
        exps = ((mu.size - l) // 2, lam.size - mu.size)
        total = total + value.with_num_z_vars(2).shift_monomial(0, exps)
    return total


def coinv_character_alternating(k: int, l: int, lam: Sequence[int]) -> MPoly:
    """
    Σ_{i≥0} q^{(k+2)i²+(l+1)i} X_{2(k+2)i+l,λ} − Σ_{i>0} q^{(k+2)i²−(l+1)i} X_{2(k+2)i−l−2,λ}
    """
    lam = validate_coinvariant_args(k, l, lam)
    return alternating_x_sum(k, l, lam)


def restrict_w3_character(chi3_quotient: MPoly, lam: Sequence[int]) -> MPoly:
    """
    z^{|λ|} · χ(q, z_1 = 1, z_2 = z^{-1})

    Raises:
        ConsistencyError: 结果出现负的 z 指数（输入特征标有误）
    """
    lam = Partition(lam)
    if chi3_quotient.num_z_vars != 2:
        raise DomainError(f"需要两个 z 变量的特征标，得到 {chi3_quotient.num_z_vars} 个")
    restricted = chi3_quotient.substitute(
        z_subs={0: ZSubstitution.constant(1), 1: ZSubstitution.inverse(0)},
        new_nz=1,
    ).shift_monomial(0, (lam.size,))
    if restricted.z_min_degree(0) < 0:
        raise ConsistencyError(
            f"限制后出现负的 z 指数 {restricted.z_min_degree(0)}（λ = {lam}）"
        )
    return restricted
