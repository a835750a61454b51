"""
理想 J(n,k) 与商 R/J(n,k) 的希尔伯特特征标
生成元：∏_a x_a(z)^{ν_a} 中 z^j 的系数，j < μ(ν,k)，x_a(z) = Σ_i x_a[i] z^{N_a−1−i}
"""
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from math import factorial
from collections import Counter
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from src.config import settings
from src.partitions import FusionSpec, mu_nu_k, vec_sub
from src.polyring import MPoly
from src.utils import register_cache

from .graded import (
    GradedPiece,
    GradedVectorSpace,
    Monomial,
    graded_pieces,
    iter_monomials,
    monomials,
    multiply,
)
from .linalg import SparseRow

_hilbert_cache = register_cache("hilbert_character")

GeneratorPoly = Dict[Monomial, int]


def _generator_coefficient(mono: Monomial, nu: Sequence[int]) -> int:
    # 展开 ∏ x_a(z)^{ν_a} 时单项式出现的次数：∏ ν_a! / ∏ 重数!
    num = 1
    for count in nu:
        num *= factorial(count)
    den = 1
    for mult in Counter(mono).values():
        den *= factorial(mult)
    return num // den


def generator_poly(spec: FusionSpec, nu: Sequence[int], degree: int) -> GeneratorPoly:
    """∏ x_a(z)^{ν_a} 中次数为 degree 的齐次部分"""
    return {
        mono: _generator_coefficient(mono, nu)
        for mono in iter_monomials(spec, degree, nu)
    }


def generator_labels(spec: FusionSpec, m: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], int, int]]:
    """
    权不超过 m 的生成元标签 (ν, j, D)

    D = Σ_a ν_a (N_a − 1) − j 是生成元的次数
    """
    for nu in product(*(range(x + 1) for x in m)):
        if not any(nu):
            continue
        if any(count and spec.N_a(a) == 0 for a, count in enumerate(nu, start=1)):
            continue
        mu = mu_nu_k(nu, spec)
        top = sum(count * (spec.N_a(a) - 1) for a, count in enumerate(nu, start=1))
        for j in range(mu):
            degree = top - j
            if degree < 0:
                break
            yield tuple(nu), j, degree


def iter_ideal_generators(spec: FusionSpec, d: int, m: Sequence[int]) -> Iterator[GeneratorPoly]:
    """J(n,k) ∩ R_{d,m} 的张成组（生成元乘以所有互补的单项式）"""
    m = tuple(m)
    if len(m) != spec.n - 1:
        return
    for nu, _j, degree in generator_labels(spec, m):
        if degree > d:
            continue
        gen = generator_poly(spec, nu, degree)
        if not gen:
            continue
        for cofactor in iter_monomials(spec, d - degree, vec_sub(m, nu)):
            yield {multiply(mono, cofactor): c for mono, c in gen.items()}


def ideal_generators(spec: FusionSpec, d: int, m: Sequence[int]) -> List[SparseRow]:
    """
    J(n,k) ∩ R_{d,m} 的张成组，以 R_{d,m} 单项式基下的坐标向量给出

    超出范围的 (d, m) 返回空列表。
    """
    basis = monomials(spec, d, m)
    if not basis:
        return []
    piece = GradedPiece(d, tuple(m), basis)
    return [piece.vector(gen) for gen in iter_ideal_generators(spec, d, m)]


def quotient_piece(spec: FusionSpec, d: int, m: Sequence[int]) -> GradedPiece:
    """
    R_{d,m} 及 J 在其中的行阶梯形

    秩达到单项式数时提前停止。

    Raises:
        ResourceLimitError: 单项式数超过上限
    """
    piece = GradedPiece(d, tuple(m), monomials(spec, d, m))
    for gen in iter_ideal_generators(spec, d, m):
        if piece.relations.is_full:
            break
        piece.relations.add(piece.vector(gen))
    return piece


def quotient_space(spec: FusionSpec, workers: Optional[int] = None) -> GradedVectorSpace:
    """
    R/J(n,k) 的所有分次片段

    各片段互相独立，在线程池中计算，按规范序合并。
    """
    keys = graded_pieces(spec)
    space = GradedVectorSpace(spec)
    workers = workers or settings.worker_count()
    logger.info(f"计算 R/J 特征标: spec {spec.text()}，{len(keys)} 个分次片段，{workers} 个线程")
    if workers == 1 or len(keys) <= 1:
        pieces = [quotient_piece(spec, d, m) for d, m in keys]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pieces = list(pool.map(lambda key: quotient_piece(spec, *key), keys))
    for piece in pieces:
        space.add_piece(piece)
    logger.info(f"R/J 特征标完成: spec {spec.text()}，总维数 {space.total_dim}")
    return space


def hilbert_character(spec: FusionSpec) -> MPoly:
    """
    R/J(n,k) 的分次特征标 Σ q^d z^m dim

    Raises:
        ResourceLimitError: 某个分次片段单项式过多
    """
    return _hilbert_cache.get_or_compute(spec.text() + f"@{spec.n}", lambda: quotient_space(spec).character())
