"""
显式赋值表示
阿贝尔对称张量 V^(m)_k、sl2 不可约表示 V_r、可约 sl2 模 W_r、sl3 对称张量 S^r(C^3)
所有算子都是整数矩阵（按列稀疏存储）
"""
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import DomainError

SparseVector = Dict[int, int]
# 第 j 列: [(行, 系数), ...]
SparseOperator = List[List[Tuple[int, int]]]

SL2_OPERATORS = ("e", "f", "h")
SL3_OPERATORS = ("e12", "e13", "e23", "e21", "e31", "e32", "h12", "h23")


class ModuleKind(str, Enum):
    """赋值模类型"""
    ABELIAN = "abelian"
    SL2_IRREP = "sl2-irrep"
    SL2_REDUCIBLE = "sl2-reducible"
    SL3_SYMMETRIC = "sl3-symmetric"


def compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    """total 的 parts 元弱组合（字典序）"""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out: List[Tuple[int, ...]] = []
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def _symmetric_unit(labels: List[Tuple[int, ...]], index: Dict[Tuple[int, ...], int], i: int, j: int) -> SparseOperator:
    # e_ij(u^α) = α_j u^{α − e_j + e_i}（下标从 0 开始）
    op: SparseOperator = []
    for alpha in labels:
        if i == j:
            op.append([(index[alpha], alpha[i])] if alpha[i] else [])
            continue
        if not alpha[j]:
            op.append([])
            continue
        target = list(alpha)
        target[j] -= 1
        target[i] += 1
        op.append([(index[tuple(target)], alpha[j])])
    return op


def _combine(ops: Sequence[Tuple[int, SparseOperator]], dim: int) -> SparseOperator:
    out: SparseOperator = []
    for col in range(dim):
        acc: Dict[int, int] = {}
        for scale, op in ops:
            for row, c in op[col]:
                acc[row] = acc.get(row, 0) + scale * c
        out.append(sorted((row, c) for row, c in acc.items() if c))
    return out


class EvaluationModule:
    """
    z 处的赋值表示

    x[i] 作用为 z^i x；cyclic 是默认循环向量（整数坐标）。
    """

    def __init__(
        self,
        kind: ModuleKind,
        labels: List[Tuple[int, ...]],
        operators: Dict[str, SparseOperator],
        cyclic: SparseVector,
        z: Fraction = Fraction(0),
        weights: Optional[List[Tuple[int, ...]]] = None,
    ):
        self.kind = kind
        self.labels = labels
        self.operators = operators
        self.cyclic = cyclic
        self.z = Fraction(z)
        self.weights = weights

    @property
    def dim(self) -> int:
        return len(self.labels)

    def at(self, z) -> "EvaluationModule":
        """换一个赋值参数"""
        return EvaluationModule(self.kind, self.labels, self.operators, self.cyclic, z, self.weights)

    # ---- 构造 ----

    @classmethod
    def abelian(cls, n_p: int, k_p: int, z=0, n: Optional[int] = None) -> "EvaluationModule":
        """
        V^(n_p)_{k_p} = S^{k_p}(C^{n_p})，x_a = e_{n_p−a, n_p}（1 ≤ a < n_p）

        Args:
            n: 环境秩，权向量长度为 n − 1，默认 n_p

        Returns:
            循环向量 u_{n_p}^{k_p}，基向量的权 m_a = α_{n_p−a}
        """
        if n_p < 1 or k_p < 0:
            raise DomainError(f"因子 {n_p}:{k_p} 不合法")
        n = n or n_p
        labels = compositions(k_p, n_p)
        index = {alpha: j for j, alpha in enumerate(labels)}
        operators = {
            f"x{a}": _symmetric_unit(labels, index, n_p - 1 - a, n_p - 1)
            for a in range(1, n_p)
        }
        weights = [
            tuple(alpha[n_p - 1 - a] if a < n_p else 0 for a in range(1, n))
            for alpha in labels
        ]
        top = tuple([0] * (n_p - 1) + [k_p])
        return cls(ModuleKind.ABELIAN, labels, operators, {index[top]: 1}, z, weights)

    @classmethod
    def sl2_irrep(cls, r: int, z=0) -> "EvaluationModule":
        """
        V_r，最低权基 w_0..w_r

        e·w_j = (r−j) w_{j+1}, f·w_j = j w_{j−1}, h·w_j = (2j−r) w_j
        """
        if r < 0:
            raise DomainError(f"最高权不能为负: {r}")
        labels = [(j,) for j in range(r + 1)]
        e = [[(j + 1, r - j)] if j < r else [] for j in range(r + 1)]
        f = [[(j - 1, j)] if j > 0 else [] for j in range(r + 1)]
        h = [[(j, 2 * j - r)] if 2 * j != r else [] for j in range(r + 1)]
        return cls(ModuleKind.SL2_IRREP, labels, {"e": e, "f": f, "h": h}, {0: 1}, z)

    @classmethod
    def sl3_symmetric(cls, r: int, z=0) -> "EvaluationModule":
        """S^r(C^3)，e_ij(u^α) = α_j u^{α−e_j+e_i}，循环向量 u_3^r（最低权向量）"""
        if r < 0:
            raise DomainError(f"次数不能为负: {r}")
        labels = compositions(r, 3)
        index = {alpha: j for j, alpha in enumerate(labels)}
        units = {
            (i, j): _symmetric_unit(labels, index, i, j)
            for i in range(3) for j in range(3)
        }
        dim = len(labels)
        operators = {
            name: units[(int(name[1]) - 1, int(name[2]) - 1)]
            for name in SL3_OPERATORS if name[0] == "e"
        }
        operators["h12"] = _combine([(1, units[(0, 0)]), (-1, units[(1, 1)])], dim)
        operators["h23"] = _combine([(1, units[(1, 1)]), (-1, units[(2, 2)])], dim)
        return cls(ModuleKind.SL3_SYMMETRIC, labels, operators, {index[(0, 0, r)]: 1}, z)

    @classmethod
    def sl2_reducible(cls, r: int, z=0) -> "EvaluationModule":
        """
        W_r = S^r(C^3) 限制到 sl2 = <e23, e32, h23>，W_r = ⊕_{j=0}^r V_j

        循环向量 w_r = Σ_j u_1^{r−j} u_3^j（各 V_j 的最低权向量之和）
        """
        full = cls.sl3_symmetric(r, z)
        index = {alpha: j for j, alpha in enumerate(full.labels)}
        operators = {
            "e": full.operators["e23"],
            "f": full.operators["e32"],
            "h": full.operators["h23"],
        }
        cyclic = {index[(r - j, 0, j)]: 1 for j in range(r + 1)}
        return cls(ModuleKind.SL2_REDUCIBLE, full.labels, operators, cyclic, z)

    # ---- 作用 ----

    def apply(self, name: str, vector: SparseVector) -> SparseVector:
        """算子作用于稀疏向量"""
        op = self.operators[name]
        out: SparseVector = {}
        for col, c in vector.items():
            for row, x in op[col]:
                out[row] = out.get(row, 0) + c * x
        return {row: c for row, c in out.items() if c}

    def exponential(self, name: str, vector: Optional[SparseVector] = None) -> SparseVector:
        """
        Σ_i name^i/i! · vector（name 幂零）

        Raises:
            DomainError: 结果不是整数向量
        """
        term = {col: Fraction(c) for col, c in (vector if vector is not None else self.cyclic).items()}
        total: Dict[int, Fraction] = dict(term)
        i = 0
        while term:
            i += 1
            nxt: Dict[int, Fraction] = {}
            for col, c in term.items():
                for row, x in self.operators[name][col]:
                    nxt[row] = nxt.get(row, 0) + c * x / i
            term = {row: c for row, c in nxt.items() if c}
            for row, c in term.items():
                total[row] = total.get(row, 0) + c
        if any(c.denominator != 1 for c in total.values()):
            raise DomainError(f"exp({name}) 作用后出现非整数系数")
        return {row: int(c) for row, c in total.items() if c}

    def matrix(self, name: str) -> List[List[int]]:
        """稠密整数矩阵"""
        dense = [[0] * self.dim for _ in range(self.dim)]
        for col, entries in enumerate(self.operators[name]):
            for row, c in entries:
                dense[row][col] += c
        return dense

    # ---- 关系检查 ----

    def check_relations(self) -> bool:
        """
        生成元的关系作为整数矩阵恒等式成立

        阿贝尔型：两两交换；sl2 型：[e,f]=h, [h,e]=2e, [h,f]=−2f；
        sl3 型：gl3 关系 [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
        """
        if self.kind == ModuleKind.ABELIAN:
            names = sorted(self.operators)
            return all(
                _is_zero(_bracket(self.matrix(a), self.matrix(b)))
                for idx, a in enumerate(names) for b in names[idx + 1:]
            )
        if self.kind in (ModuleKind.SL2_IRREP, ModuleKind.SL2_REDUCIBLE):
            e, f, h = (self.matrix(x) for x in SL2_OPERATORS)
            return (
                _bracket(e, f) == h
                and _bracket(h, e) == _scaled(e, 2)
                and _bracket(h, f) == _scaled(f, -2)
            )
        return self._check_gl3()

    def _check_gl3(self) -> bool:
        labels = self.labels
        index = {alpha: j for j, alpha in enumerate(labels)}
        units = {
            (i, j): _dense(_symmetric_unit(labels, index, i, j), self.dim)
            for i in range(3) for j in range(3)
        }
        for i, j in units:
            if i != j and units[(i, j)] != self.matrix(f"e{i + 1}{j + 1}"):
                return False
        if self.matrix("h12") != _sum(units[(0, 0)], _scaled(units[(1, 1)], -1)):
            return False
        if self.matrix("h23") != _sum(units[(1, 1)], _scaled(units[(2, 2)], -1)):
            return False
        zero = [[0] * self.dim for _ in range(self.dim)]
        for (i, j), a in units.items():
            for (k, l), b in units.items():
                expected = zero
                if j == k:
                    expected = _sum(expected, units[(i, l)])
                if l == i:
                    expected = _sum(expected, _scaled(units[(k, j)], -1))
                if _bracket(a, b) != expected:
                    return False
        return True


def _dense(op: SparseOperator, dim: int) -> List[List[int]]:
    dense = [[0] * dim for _ in range(dim)]
    for col, entries in enumerate(op):
        for row, c in entries:
            dense[row][col] += c
    return dense


def _matmul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    n = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def _bracket(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    ab, ba = _matmul(a, b), _matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def _scaled(a: List[List[int]], s: int) -> List[List[int]]:
    return [[s * x for x in row] for row in a]


def _sum(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    return [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def _is_zero(a: List[List[int]]) -> bool:
    return all(x == 0 for row in a for x in row)
