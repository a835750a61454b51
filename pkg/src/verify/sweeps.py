"""
桌面规模扫描的参数枚举
"""
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from src.partitions import FusionSpec, Partition, normalize_spec, partitions_of

Factor = Tuple[int, int]


def _factor_multisets(factors: Sequence[Factor], budget: int, max_count: Optional[int], start: int = 0) -> Iterator[List[Factor]]:
    yield []
    if max_count == 0:
        return
    for idx in range(start, len(factors)):
        n_p, k_p = factors[idx]
        if k_p > budget:
            continue
        rest_count = None if max_count is None else max_count - 1
        for tail in _factor_multisets(factors, budget - k_p, rest_count, idx):
            yield [factors[idx]] + tail


def sweep_specs(
    max_rank: int,
    max_boxes: int,
    max_factors: Optional[int] = None,
    max_k: Optional[int] = None,
    min_rank: int = 2,
) -> List[FusionSpec]:
    """
    所有 min_rank ≤ n ≤ max_rank、Σ k_p ≤ max_boxes 的非空规范 spec

    只取 n 恰好出现为某个 n_p 的 spec（否则与更小的 n 重复）。
    """
    out: List[FusionSpec] = []
    for n in range(max(min_rank, 2), max_rank + 1):
        kinds = [
            (n_p, k_p)
            for n_p in range(n, 1, -1)
            for k_p in range(min(max_boxes, max_k or max_boxes), 0, -1)
        ]
        for factors in _factor_multisets(kinds, max_boxes, max_factors):
            if not factors or max(n_p for n_p, _ in factors) != n:
                continue
            out.append(normalize_spec(factors, n))
    return out


def level_partitions(k: int, max_size: int, min_size: int = 0) -> List[Partition]:
    """行数不超过 k、大小在 [min_size, max_size] 的分拆"""
    out: List[Partition] = []
    for size in range(min_size, max_size + 1):
        out.extend(partitions_of(size, max_rows=k))
    return out


def z_choices(count: int) -> List[List[Fraction]]:
    """三组两两不同的有理赋值点"""
    first = [Fraction(i) for i in range(count)]
    second = [Fraction((-1) ** i * (i + 1)) for i in range(count)]
    third = [Fraction(1, i + 2) - Fraction(i, 3) for i in range(count)]
    return [first, second, third]
