"""
分拆链 μ^(1) ⊂ μ^(2) ⊂ ... ⊂ μ^(n)
特征标递归在链上进行，中间状态不一定来自某个 spec
"""
from typing import Iterable, Sequence, Tuple

from src.errors import DomainError, ParseError

from .partition import Partition, is_partition_vector, vec_sub

LEVEL_SEPARATOR = "/"


class MChain(tuple):
    """分拆链，下标 0 为 μ^(1)，最后一项为 μ^(n)"""

    def __new__(cls, levels: Iterable[Sequence[int]]):
        parts = tuple(Partition(level) for level in levels)
        if not parts:
            raise DomainError("分拆链至少需要一层")
        for a in range(len(parts) - 1):
            if not parts[a + 1].contains(parts[a]):
                raise DomainError(
                    f"分拆链不满足包含关系: μ^({a + 1})={parts[a]} ⊄ μ^({a + 2})={parts[a + 1]}"
                )
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "MChain":
        """解析 "μ^(1)/μ^(2)/.../μ^(n)"，例如 "-/3,2" """
        try:
            return cls(Partition.parse(level) for level in text.split(LEVEL_SEPARATOR))
        except DomainError as e:
            raise ParseError(e.message) from e

    @property
    def n(self) -> int:
        return len(self)

    @property
    def top(self) -> Partition:
        return self[-1]

    def level(self, a: int) -> Partition:
        """μ^(a)（下标从 1 开始）"""
        return self[a - 1]

    def differences(self) -> Tuple[Tuple[int, ...], ...]:
        """μ^(a) − μ^(a−1)，μ^(0) = ∅"""
        prev: Tuple[int, ...] = ()
        out = []
        for level in self:
            out.append(vec_sub(level, prev))
            prev = level
        return tuple(out)

    def top_difference(self) -> Tuple[int, ...]:
        """μ^(n) − μ^(n−1)（去掉尾部零）"""
        if self.n < 2:
            diff = tuple(self.top)
        else:
            diff = vec_sub(self[-1], self[-2])
        diff = list(diff)
        while diff and diff[-1] == 0:
            diff.pop()
        return tuple(diff)

    def is_spec_chain(self) -> bool:
        """每个相邻差都是分拆"""
        return all(is_partition_vector(d) for d in self.differences())

    def drop_top(self) -> "MChain":
        """去掉最高层"""
        if self.n < 2:
            raise DomainError("单层链无法再降层")
        return MChain(self[:-1])

    def replace_top(self, top: Sequence[int], below: Sequence[int] = None) -> "MChain":
        """替换 μ^(n)（以及可选的 μ^(n−1)）"""
        levels = list(self)
        levels[-1] = Partition(top)
        if below is not None:
            levels[-2] = Partition(below)
        return MChain(levels)

    def key(self) -> str:
        return LEVEL_SEPARATOR.join(str(level) for level in self)

    def __str__(self) -> str:
        return self.key()

    def __repr__(self) -> str:
        return f"MChain({self.key()!r})"
