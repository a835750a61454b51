"""
整数分拆
分拆以去掉尾部零的弱递减正整数元组保存，越界下标读出 0
"""
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from src.errors import ParseError, ShapeError

EMPTY_TEXT = "-"


class Partition(tuple):
    """不可变分拆（Young 图）"""

    def __new__(cls, rows: Iterable[int] = ()):
        values = [int(r) for r in rows]
        while values and values[-1] == 0:
            values.pop()
        for i, r in enumerate(values):
            if r <= 0:
                raise ShapeError(f"分拆的行必须为正整数: {values}")
            if i and r > values[i - 1]:
                raise ShapeError(f"分拆的行必须弱递减: {values}")
        return super().__new__(cls, values)

    @classmethod
    def from_vector(cls, vec: Sequence[int]) -> "Partition":
        """从可能带尾部零的整数向量构造"""
        return cls(vec)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        解析文本 "3,2"，空分拆写作 "-"

        Raises:
            ParseError: 格式错误或不是分拆
        """
        text = text.strip()
        if text in (EMPTY_TEXT, ""):
            return cls()
        try:
            rows = [int(part) for part in text.split(",")]
        except ValueError as e:
            raise ParseError(f"无法解析分拆 '{text}'") from e
        if any(r < 0 for r in rows):
            raise ParseError(f"分拆的行不能为负: '{text}'")
        try:
            return cls(rows)
        except ShapeError as e:
            raise ParseError(f"'{text}' 不是分拆: {e.message}") from e

    @property
    def size(self) -> int:
        """|λ|"""
        return sum(self)

    @property
    def length(self) -> int:
        """行数"""
        return len(self)

    def part(self, i: int) -> int:
        """λ_i（下标从 1 开始，越界为 0）"""
        if 1 <= i <= len(self):
            return self[i - 1]
        return 0

    def to_vector(self, length: int) -> Tuple[int, ...]:
        """补零到给定长度的向量"""
        if length < len(self):
            raise ShapeError(f"分拆 {self} 的行数超过 {length}")
        return tuple(self) + (0,) * (length - len(self))

    def conjugate(self) -> "Partition":
        """共轭分拆（Young 图转置）"""
        if not self:
            return Partition()
        return Partition(
            sum(1 for r in self if r >= j) for j in range(1, self[0] + 1)
        )

    def contains(self, other: "Partition") -> bool:
        """other ⊂ self（逐分量）"""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def __str__(self) -> str:
        return ",".join(str(r) for r in self) if self else EMPTY_TEXT

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"


def conjugate(p: Partition) -> Partition:
    """共轭分拆"""
    return Partition(p).conjugate()


def parse_partition(text: str) -> Partition:
    return Partition.parse(text)


def vec_add(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """逐分量相加（短者补零）"""
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def vec_sub(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """逐分量相减（结果可能不是分拆）"""
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    )


def is_partition_vector(vec: Sequence[int]) -> bool:
    """非负且弱递减"""
    return all(v >= 0 for v in vec) and all(
        vec[i] >= vec[i + 1] for i in range(len(vec) - 1)
    )


def unit_vector(k: int, length: Optional[int] = None) -> Tuple[int, ...]:
    """e_k（下标从 1 开始）"""
    length = max(length or k, k)
    return tuple(1 if i == k - 1 else 0 for i in range(length))


def column_vector(k: int) -> Tuple[int, ...]:
    """(1^k)"""
    return (1,) * k


def _between(outer: Sequence[int], inner: Sequence[int], i: int, bound: int) -> Iterator[List[int]]:
    if i == len(outer):
        yield []
        return
    low = inner[i] if i < len(inner) else 0
    high = min(outer[i], bound)
    for value in range(low, high + 1):
        for rest in _between(outer, inner, i + 1, value):
            yield [value] + rest


def partitions_between(outer: Sequence[int], inner: Sequence[int] = ()) -> List[Partition]:
    """
    所有满足 inner ⊂ ν ⊂ outer 的分拆 ν

    Returns:
        按 (|ν|, 行) 排序的列表；inner 不含于 outer 时为空
    """
    outer = Partition(outer)
    inner = Partition(inner)
    if not outer.contains(inner):
        return []
    bound = outer[0] if outer else 0
    found = [Partition(rows) for rows in _between(outer, inner, 0, bound)]
    return sorted(found, key=lambda p: (p.size, tuple(p)))


def partitions_inside(lam: Sequence[int]) -> List[Partition]:
    """λ 内的所有分拆（含 ∅ 与 λ 本身）"""
    return partitions_between(lam, ())


def partitions_of(size: int, max_rows: Optional[int] = None, max_part: Optional[int] = None) -> List[Partition]:
    """
    大小为 size 的所有分拆

    Args:
        size: 格子数
        max_rows: 行数上限
        max_part: 最大行长上限
    """
    out: List[Partition] = []

    def _build(remaining: int, cap: int, rows: List[int]):
        if remaining == 0:
            out.append(Partition(rows))
            return
        if max_rows is not None and len(rows) >= max_rows:
            return
        for part in range(min(remaining, cap), 0, -1):
            _build(remaining - part, part, rows + [part])

    cap = size if max_part is None else max_part
    _build(size, cap, [])
    return sorted(out, key=tuple)


def mvec_to_partition(m: Sequence[int], k: int) -> Partition:
    """
    m = (m_1..m_k) -> μ = (k^{m_k} ... 1^{m_1})′

    μ_j = m_j + m_{j+1} + ... + m_k
    """
    if len(m) != k:
        raise ShapeError(f"m 向量长度 {len(m)} 与 level {k} 不符")
    if any(x < 0 for x in m):
        raise ShapeError(f"m 向量不能有负分量: {list(m)}")
    return Partition(sum(m[j:]) for j in range(k))


def partition_to_mvec(mu: Sequence[int], k: int) -> Tuple[int, ...]:
    """
    mvec_to_partition 的逆：m_i = μ_i − μ_{i+1}

    Raises:
        ShapeError: μ 的行数超过 k
    """
    mu = Partition(mu)
    if len(mu) > k:
        raise ShapeError(f"分拆 {mu} 的行数 {len(mu)} 超过 level {k}")
    return tuple(mu.part(i) - mu.part(i + 1) for i in range(1, k + 1))
