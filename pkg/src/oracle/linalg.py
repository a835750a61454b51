"""
精确线性代数
增量式无分数行化简（稀疏整数行）、Bareiss 秩、sympy DomainMatrix 秩
"""
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.errors import DomainError

SparseRow = Dict[int, int]

RANK_METHODS = ("bareiss", "sympy")


def _normalize(row: SparseRow) -> SparseRow:
    # 除以 gcd，并让主元（最小列）为正
    g = 0
    for c in row.values():
        g = gcd(g, c)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {col: c // g for col, c in row.items()}
    return row


def clear_denominators(row: Sequence) -> List[int]:
    """
    有理行乘以分母的最小公倍数，得到整数行

    Args:
        row: int / Fraction 组成的行
    """
    den = 1
    for c in row:
        den = lcm(den, Fraction(c).denominator)
    return [int(Fraction(c) * den) for c in row]


def to_sparse(row: Sequence[int]) -> SparseRow:
    return {i: int(c) for i, c in enumerate(row) if c}


class RowEchelon:
    """
    增量式行阶梯形

    每行以 {列: 整数} 存储，主元取最小列；
    化简 v ← p·v − v[c]·r 之后除以 gcd，系数始终是整数。
    """

    def __init__(self, num_cols: Optional[int] = None):
        self.num_cols = num_cols
        self._pivots: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def is_full(self) -> bool:
        """秩已等于列数（之后加入的行都不会再增加秩）"""
        return self.num_cols is not None and self.rank >= self.num_cols

    def pivot_columns(self) -> List[int]:
        return sorted(self._pivots)

    def reduce(self, row: Mapping[int, int]) -> SparseRow:
        """把 row 对当前主元行化简，返回余项（可能为空）"""
        v: SparseRow = {c: int(x) for c, x in row.items() if x}
        while v:
            lead = min(v)
            pivot_row = self._pivots.get(lead)
            if pivot_row is None:
                return _normalize(v)
            p, s = pivot_row[lead], v[lead]
            out: SparseRow = {}
            for col, x in v.items():
                out[col] = p * x
            for col, x in pivot_row.items():
                val = out.get(col, 0) - s * x
                if val:
                    out[col] = val
                else:
                    out.pop(col, None)
            v = _normalize(out) if out else out
        return v

    def add(self, row: Mapping[int, int]) -> bool:
        """
        加入一行

        Returns:
            秩是否增加
        """
        if self.is_full:
            return False
        rest = self.reduce(row)
        if not rest:
            return False
        self._pivots[min(rest)] = rest
        return True

    def add_all(self, rows: Iterable[Mapping[int, int]]) -> int:
        """依次加入，秩满时提前停止；返回最终秩"""
        for row in rows:
            if self.is_full:
                break
            self.add(row)
        return self.rank

    def contains(self, row: Mapping[int, int]) -> bool:
        """row 是否在当前行空间内"""
        return not self.reduce(row)

    def copy(self) -> "RowEchelon":
        other = RowEchelon(self.num_cols)
        other._pivots = {c: dict(r) for c, r in self._pivots.items()}
        return other

    def rows(self) -> List[SparseRow]:
        return [dict(self._pivots[c]) for c in sorted(self._pivots)]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """
    Bareiss 无分数消元求秩

    每一步的除法都是整除；不修改输入。
    """
    m = [[int(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = 1
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            for c in range(piv_c, n_cols):
                m[r][c] = (fp * m[r][c] - fr * m[piv_r][c]) // prev
        prev = fp
        piv_r += 1
        if piv_r == n_rows:
            break
    return piv_r


def sympy_rank(rows: Sequence[Sequence[int]]) -> int:
    """sympy DomainMatrix（ZZ 上）求秩"""
    if not rows or not rows[0]:
        return 0
    data = [[ZZ(int(x)) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), len(data[0])), ZZ).rank()


def exact_rank(rows: Sequence[Sequence[int]], method: Optional[str] = None) -> int:
    """
    稠密整数矩阵的精确秩

    Args:
        rows: 等长整数行
        method: "bareiss" / "sympy"，默认取 settings.rank_method

    Raises:
        DomainError: 未知方法
    """
    if method is None:
        from src.config import settings
        method = settings.rank_method
    if method == "bareiss":
        return bareiss_rank(rows)
    if method == "sympy":
        return sympy_rank(rows)
    raise DomainError(f"未知的秩计算方法: {method}")


def sparse_rank(rows: Iterable[Mapping[int, int]], num_cols: Optional[int] = None) -> int:
    """稀疏行的秩（RowEchelon）"""
    echelon = RowEchelon(num_cols)
    return echelon.add_all(rows)
