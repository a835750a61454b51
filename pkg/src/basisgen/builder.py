"""
递归单项式基
B[链] = ι(B[μ^(n), μ^(n−1)+(1^k), …]) ⊔ x_a[0]·B[μ^(n)−e_k, μ^(n−1), …]，a = n−1，
ι: x_b[i] ↦ x_b[i+δ_ab]
"""
import re
from typing import Dict, FrozenSet, List, Sequence, Tuple

from pydantic import BaseModel, Field, model_validator

from src.characters import reduction_steps
from src.errors import ConsistencyError, DomainError, ParseError
from src.partitions import FusionSpec, MChain
from src.polyring import MPoly
from src.utils import register_cache

_basis_cache = register_cache("basis")

RawMonomial = Tuple[Tuple[int, int], ...]

_FACTOR_RE = re.compile(r"(?:x(\d+)|e)\[(\d+)\](?:\^(\d+))?")


class BasisMonomial(BaseModel):
    """基单项式 ∏ x_a[i]"""
    factors: RawMonomial = Field(..., description="排好序的 (a, i) 多重集")
    degree: int = Field(..., description="d = Σ i")
    weight: Tuple[int, ...] = Field(..., description="m_a = x_a 的个数")

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _grading_matches(self):
        d, m = _grading(self.factors, len(self.weight) + 1)
        if d != self.degree or m != self.weight:
            raise ValueError(f"单项式 {self.factors} 的分次 ({d}, {m}) 与记录的 ({self.degree}, {self.weight}) 不符")
        return self

    @classmethod
    def from_factors(cls, factors: Sequence[Tuple[int, int]], n: int) -> "BasisMonomial":
        factors = tuple(sorted((int(a), int(i)) for a, i in factors))
        d, m = _grading(factors, n)
        return cls(factors=factors, degree=d, weight=m)

    def sort_key(self):
        return (self.weight, self.degree, self.factors)


def _grading(factors: RawMonomial, n: int) -> Tuple[int, Tuple[int, ...]]:
    m = [0] * (n - 1)
    for a, _ in factors:
        if not 1 <= a <= n - 1:
            raise ValueError(f"电流标签 a = {a} 超出 [1, {n - 1}]")
        m[a - 1] += 1
    return sum(i for _, i in factors), tuple(m)


def _iota(mono: RawMonomial, a: int) -> RawMonomial:
    return tuple(sorted((b, i + 1 if b == a else i) for b, i in mono))


def _chain_basis(chain: MChain) -> FrozenSet[RawMonomial]:
    return _basis_cache.get_or_compute(chain.key(), lambda: _build(chain))


def _build(chain: MChain) -> FrozenSet[RawMonomial]:
    if chain.n == 1:
        return frozenset({()})
    steps = reduction_steps(chain)
    if not steps:
        return _chain_basis(chain.drop_top())
    a = chain.n - 1
    iota, psi = steps
    sub = frozenset(_iota(mono, a) for mono in _chain_basis(iota.target))
    quot = frozenset(tuple(sorted(mono + ((a, 0),))) for mono in _chain_basis(psi.target))
    overlap = sub & quot
    if overlap:
        raise ConsistencyError(f"链 {chain} 的两个分支相交: {sorted(overlap)[:3]}")
    return sub | quot


def build_basis(spec: FusionSpec) -> List[BasisMonomial]:
    """
    spec 的单项式基，按 (权, 次数, 因子) 排序

    Raises:
        DomainError: 链不是由 spec 得到的
    """
    chain = spec.mu_chain
    if not chain.is_spec_chain():
        raise DomainError(f"链 {chain} 不是由 spec 得到的")
    basis = [BasisMonomial.from_factors(mono, spec.n) for mono in _chain_basis(chain)]
    return sorted(basis, key=BasisMonomial.sort_key)


def format_monomial(mono: BasisMonomial, n: int) -> str:
    """
    文本形式 x{a}[{i}]^{e}…，n = 2 时用 e[i]；空单项式为 "1"
    """
    if not mono.factors:
        return "1"
    counts: Dict[Tuple[int, int], int] = {}
    for factor in mono.factors:
        counts[factor] = counts.get(factor, 0) + 1
    pieces = []
    for (a, i), e in sorted(counts.items()):
        head = f"e[{i}]" if n == 2 else f"x{a}[{i}]"
        pieces.append(head if e == 1 else f"{head}^{e}")
    return "".join(pieces)


def parse_monomial(text: str, n: int) -> BasisMonomial:
    """
    解析 format_monomial 的输出（n = 2 时也接受 e[i]）

    Raises:
        ParseError: 格式错误
    """
    text = text.strip()
    if text == "1":
        return BasisMonomial.from_factors((), n)
    factors: List[Tuple[int, int]] = []
    pos = 0
    for match in _FACTOR_RE.finditer(text):
        if match.start() != pos:
            raise ParseError(f"无法解析单项式 '{text}'")
        pos = match.end()
        if match.group(1) is None:
            if n != 2:
                raise ParseError(f"e[i] 写法只用于 n = 2: '{text}'")
            a = 1
        else:
            a = int(match.group(1))
        power = int(match.group(3) or 1)
        factors.extend([(a, int(match.group(2)))] * power)
    if pos != len(text) or not factors:
        raise ParseError(f"无法解析单项式 '{text}'")
    try:
        return BasisMonomial.from_factors(factors, n)
    except ValueError as e:
        raise ParseError(str(e)) from e


def basis_census(basis: Sequence[BasisMonomial], nz: int) -> MPoly:
    """基的分次特征标 Σ q^d z^m"""
    terms: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    for mono in basis:
        key = (mono.degree, mono.weight)
        terms[key] = terms.get(key, 0) + 1
    return MPoly(terms, nz)
