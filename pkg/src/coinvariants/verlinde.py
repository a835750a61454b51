"""
level k 的 sl2 Verlinde 代数
基 [0], [1], ..., [k]，乘法 [a][b] = Σ_{c=|a−b|, c≡a+b (2)}^{min(a+b, 2k−a−b)} [c]
"""
from typing import Sequence, Tuple

from pydantic import BaseModel, Field

from src.errors import ConsistencyError, DomainError
from src.models import VerificationReport
from src.characters import f_factor
from src.kostka import restricted_kostka
from src.partitions import partition_to_mvec, partitions_inside

from .validation import validate_coinvariant_args


class VerlindeElement(BaseModel):
    """Verlinde 代数元素 Σ_l (a:[l])_k [l]"""
    k: int = Field(..., description="level")
    coeffs: Tuple[int, ...] = Field(..., description="按 l = 0..k 排列的系数")

    class Config:
        frozen = True

    @classmethod
    def zero(cls, k: int) -> "VerlindeElement":
        return cls(k=k, coeffs=(0,) * (k + 1))

    @classmethod
    def basis(cls, k: int, l: int) -> "VerlindeElement":
        """[l]"""
        if not 0 <= l <= k:
            raise DomainError(f"标签 l = {l} 不在 [0, {k}] 内")
        return cls(k=k, coeffs=tuple(1 if i == l else 0 for i in range(k + 1)))

    @classmethod
    def unit(cls, k: int) -> "VerlindeElement":
        """[0]"""
        return cls.basis(k, 0)

    @classmethod
    def partial_sum(cls, k: int, i: int) -> "VerlindeElement":
        """[0] + [1] + ... + [i]"""
        return cls(k=k, coeffs=tuple(1 if l <= i else 0 for l in range(k + 1)))

    def coefficient(self, l: int) -> int:
        """(a:[l])_k"""
        if not 0 <= l <= self.k:
            raise DomainError(f"标签 l = {l} 不在 [0, {self.k}] 内")
        return self.coeffs[l]

    def __add__(self, other: "VerlindeElement") -> "VerlindeElement":
        if self.k != other.k:
            raise DomainError(f"level 不一致: {self.k} != {other.k}")
        return VerlindeElement(k=self.k, coeffs=tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "VerlindeElement") -> "VerlindeElement":
        return verlinde_mul(self, other)

    def __pow__(self, e: int) -> "VerlindeElement":
        result = VerlindeElement.unit(self.k)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        terms = [
            (f"[{l}]" if c == 1 else f"{c}*[{l}]")
            for l, c in enumerate(self.coeffs) if c
        ]
        return " + ".join(terms) if terms else "0"


def fusion_rule(k: int, a: int, b: int) -> Tuple[int, ...]:
    """[a][b] 中出现的标签 c"""
    return tuple(range(abs(a - b), min(a + b, 2 * k - a - b) + 1, 2))


def verlinde_mul(a: VerlindeElement, b: VerlindeElement) -> VerlindeElement:
    """
    Verlinde 乘法（双线性延拓）

    Raises:
        DomainError: level 不一致
    """
    if a.k != b.k:
        raise DomainError(f"level 不一致: {a.k} != {b.k}")
    k = a.k
    out = [0] * (k + 1)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if not cb:
                continue
            for c in fusion_rule(k, i, j):
                out[c] += ca * cb
    return VerlindeElement(k=k, coeffs=tuple(out))


def verlinde_expansion(mu: Sequence[int], k: int) -> VerlindeElement:
    """
    [k]^{m_k} … [1]^{m_1}，m = partition_to_mvec(μ, k)
    """
    m = partition_to_mvec(mu, k)
    result = VerlindeElement.unit(k)
    for i, mult in enumerate(m, start=1):
        result = result * VerlindeElement.basis(k, i) ** mult
    return result


def fusion_dim_sum(lam: Sequence[int], k: int, l: int) -> int:
    """Σ_{μ⊂λ, |μ|≡l} F_{λ,μ}(1) K^(k)_{l,μ}(1)"""
    total = 0
    for mu in partitions_inside(lam):
        if (mu.size - l) % 2:
            continue
        kostka = restricted_kostka(k, l, mu).evaluate_at_one()
        if not kostka:
            continue
        total += f_factor(lam, mu, k).evaluate_at_one() * kostka
    return total


def verlinde_dim(lam: Sequence[int], k: int, l: int) -> int:
    """
    ( ([0]+…+[k])^{M_k} … ([0]+[1])^{M_1} : [l] )_k，M_i 为 λ 中高度 i 的列数

    同时用 F(1)K(1) 求和独立计算并比较。

    Raises:
        ConsistencyError: 两种计算不一致
    """
    lam = validate_coinvariant_args(k, l, lam)
    M = partition_to_mvec(lam, k)
    product = VerlindeElement.unit(k)
    for i, mult in enumerate(M, start=1):
        product = product * VerlindeElement.partial_sum(k, i) ** mult
    value = product.coefficient(l)
    fermionic = fusion_dim_sum(lam, k, l)
    if value != fermionic:
        raise ConsistencyError(
            f"Verlinde 维数 {value} 与费米型求和 {fermionic} 不一致 (λ={lam}, k={k}, l={l})"
        )
    return value


def check_verlinde_kostka(mu: Sequence[int], k: int) -> VerificationReport:
    """[k]^{m_k}…[1]^{m_1} 的展开系数等于 K^(k)_{l,μ}(1)"""
    expansion = verlinde_expansion(mu, k)
    kostka_values = tuple(
        restricted_kostka(k, l, mu).evaluate_at_one() for l in range(k + 1)
    )
    return VerificationReport.check(
        f"verlinde-kostka[k={k},mu={','.join(map(str, mu)) or '-'}]",
        expansion.coeffs == kostka_values,
        "" if expansion.coeffs == kostka_values else f"{expansion.coeffs} != {kostka_values}",
        expansion=list(expansion.coeffs),
        kostka=list(kostka_values),
    )
