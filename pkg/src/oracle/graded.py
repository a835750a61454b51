"""
分次多项式环 R = C[x_a[i]] 的单项式基
按 (次数 d, 权向量 m) 分片，每片可带一个关系子空间
"""
from itertools import product
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from loguru import logger

from src.errors import ResourceLimitError
from src.partitions import FusionSpec
from src.polyring import MPoly

from .linalg import RowEchelon, SparseRow


class VarIndex(NamedTuple):
    """变量 x_a[i]"""
    a: int
    i: int


Monomial = Tuple[VarIndex, ...]
Grading = Tuple[int, Tuple[int, ...]]


def variables(spec: FusionSpec) -> List[VarIndex]:
    """所有变量 x_a[i]，1 ≤ a ≤ n−1，0 ≤ i < N_a"""
    return [
        VarIndex(a, i)
        for a in range(1, spec.n)
        for i in range(spec.N_a(a))
    ]


def multiply(left: Monomial, right: Monomial) -> Monomial:
    return tuple(sorted(left + right))


def monomial_grading(mono: Monomial, n: int) -> Grading:
    """(d, (m_1, …, m_{n−1}))"""
    m = [0] * (n - 1)
    d = 0
    for var in mono:
        m[var.a - 1] += 1
        d += var.i
    return d, tuple(m)


def _mode_multisets(count: int, max_mode: int, total: int, low: int = 0) -> Iterator[Tuple[int, ...]]:
    # 不减序列 i_1 ≤ … ≤ i_count，取值 [low, max_mode]，和为 total
    if count == 0:
        if total == 0:
            yield ()
        return
    for first in range(low, max_mode + 1):
        if first * count > total:
            break
        if total - first > max_mode * (count - 1):
            continue
        for rest in _mode_multisets(count - 1, max_mode, total - first, first):
            yield (first,) + rest


def iter_monomials(spec: FusionSpec, d: int, m: Sequence[int]) -> Iterator[Monomial]:
    """R_{d,m} 的单项式（规范序）"""
    n = spec.n
    if len(m) != n - 1 or d < 0 or any(x < 0 for x in m):
        return
    tops = [spec.N_a(a) - 1 for a in range(1, n)]
    for a_idx, count in enumerate(m):
        if count and tops[a_idx] < 0:
            return
    caps = [count * max(top, 0) for count, top in zip(m, tops)]
    if d > sum(caps):
        return

    def _split(idx: int, remaining: int) -> Iterator[Tuple[int, ...]]:
        if idx == len(m):
            if remaining == 0:
                yield ()
            return
        rest_cap = sum(caps[idx + 1:])
        for d_a in range(max(0, remaining - rest_cap), min(caps[idx], remaining) + 1):
            for tail in _split(idx + 1, remaining - d_a):
                yield (d_a,) + tail

    for degrees in _split(0, d):
        per_label = [
            [tuple(VarIndex(a_idx + 1, i) for i in modes)
             for modes in _mode_multisets(count, max(tops[a_idx], 0), d_a)]
            for a_idx, (count, d_a) in enumerate(zip(m, degrees))
        ]
        for parts in product(*per_label):
            yield tuple(var for part in parts for var in part)


def monomials(spec: FusionSpec, d: int, m: Sequence[int], cap: Optional[int] = None) -> List[Monomial]:
    """
    R_{d,m} 的单项式基

    Args:
        cap: 单项式数量上限，默认 settings.max_monomials

    Raises:
        ResourceLimitError: 超出上限（不截断）
    """
    if cap is None:
        from src.config import settings
        cap = settings.max_monomials
    out: List[Monomial] = []
    for mono in iter_monomials(spec, d, m):
        out.append(mono)
        if len(out) > cap:
            logger.warning(f"分次片段 (d={d}, m={tuple(m)}) 的单项式超过上限 {cap}，拒绝计算")
            raise ResourceLimitError(
                f"分次片段 (d={d}, m={tuple(m)}) 的单项式数超过上限 {cap}（spec {spec.text()}）"
            )
    return out


def weight_vectors(spec: FusionSpec) -> List[Tuple[int, ...]]:
    """0 ≤ m_a ≤ Σ_{p∈X_a} k_p 且 Σ m_a ≤ Σ k_p 的所有权向量"""
    caps = [spec.weight_cap(a) for a in range(1, spec.n)]
    total = spec.total_boxes
    return [
        m for m in product(*(range(c + 1) for c in caps))
        if sum(m) <= total
    ]


def graded_pieces(spec: FusionSpec) -> List[Grading]:
    """可能非零的分次片段 (d, m)，按 (m, d) 规范序"""
    pieces: List[Grading] = []
    for m in weight_vectors(spec):
        top = sum(count * max(spec.N_a(a) - 1, 0) for a, count in enumerate(m, start=1))
        pieces.extend((d, m) for d in range(top + 1))
    return pieces


class GradedPiece:
    """单个分次片段 R_{d,m} 及其关系子空间"""

    def __init__(self, d: int, m: Tuple[int, ...], basis: List[Monomial]):
        self.d = d
        self.m = tuple(m)
        self.basis = basis
        self.index: Dict[Monomial, int] = {mono: col for col, mono in enumerate(basis)}
        self.relations = RowEchelon(len(basis))

    def vector(self, poly: Dict[Monomial, int]) -> SparseRow:
        """单项式组合的坐标向量"""
        row: SparseRow = {}
        for mono, c in poly.items():
            if c:
                col = self.index[mono]
                row[col] = row.get(col, 0) + c
        return {col: c for col, c in row.items() if c}

    @property
    def quotient_dim(self) -> int:
        return len(self.basis) - self.relations.rank


class GradedVectorSpace:
    """按 (d, m) 分片的有限维分次空间"""

    def __init__(self, spec: FusionSpec):
        self.spec = spec
        self.pieces: Dict[Grading, GradedPiece] = {}

    def add_piece(self, piece: GradedPiece):
        self.pieces[(piece.d, piece.m)] = piece

    def dims(self) -> Dict[Grading, int]:
        return {key: piece.quotient_dim for key, piece in sorted(self.pieces.items())}

    def character(self) -> MPoly:
        """Σ dim · q^d z^m"""
        nz = self.spec.n - 1
        terms = {}
        for (d, m), dim in self.dims().items():
            if dim:
                terms[(d, m)] = dim
        return MPoly(terms, nz)

    @property
    def total_dim(self) -> int:
        return sum(self.dims().values())
