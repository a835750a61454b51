"""
余不变量运算的参数校验
"""
from typing import Sequence

from src.errors import DomainError, ShapeError
from src.partitions import Partition


def validate_coinvariant_args(k: int, l: int, lam: Sequence[int]) -> Partition:
    """
    Raises:
        DomainError: level 非正或标签越界
        ShapeError: λ 的行数超过 k
    """
    if k < 1:
        raise DomainError(f"level 必须为正: {k}")
    if not 0 <= l <= k:
        raise DomainError(f"标签 l = {l} 不在 [0, {k}] 内")
    lam = Partition(lam)
    if len(lam) > k:
        raise ShapeError(f"λ = {lam} 的行数 {len(lam)} 超过 level {k}")
    return lam
