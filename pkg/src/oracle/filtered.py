"""
过滤张量积与融合积
F^d = span{ x_1[i_1] … x_l[i_l] · v : Σ i ≤ d }，x[i] = Σ_p z_p^i x^(p)
"""
from fractions import Fraction
from math import lcm, prod
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.config import settings
from src.errors import ConsistencyError, DomainError
from src.models import VerificationReport
from src.partitions import FusionSpec
from src.polyring import MPoly

from .evaluation import EvaluationModule, SparseVector
from .ideal import hilbert_character
from .linalg import RowEchelon


class FilteredTensorProduct:
    """
    赋值模的张量积，按算子模式总和过滤

    z 取有理数时整体乘以公分母的幂，算子 x[i] 的系数是整数 num_p^i。
    """

    def __init__(
        self,
        modules: Sequence[EvaluationModule],
        operators: Sequence[str],
        cyclic: Optional[Sequence[SparseVector]] = None,
        mode_bound: Optional[int] = None,
    ):
        """
        Args:
            modules: 各张量因子（各自带赋值参数 z）
            operators: 参与作用的算子名（在不认识该名字的因子上作用为零）
            cyclic: 各因子上的循环向量，默认取模自带的
            mode_bound: 算子模式上限，默认 N − 1 + settings.mode_margin
        """
        self.modules = list(modules)
        self.operators = list(operators)
        self.cyclic_factors = list(cyclic) if cyclic is not None else [m.cyclic for m in self.modules]
        if mode_bound is None:
            mode_bound = max(len(self.modules) - 1, 0) + settings.mode_margin
        self.mode_bound = mode_bound
        den = 1
        for module in self.modules:
            den = lcm(den, module.z.denominator)
        self._numerators = [int(module.z * den) for module in self.modules]
        self._dims = [module.dim for module in self.modules]
        self._strides = []
        stride = 1
        for dim in reversed(self._dims):
            self._strides.append(stride)
            stride *= dim
        self._strides.reverse()
        self.dim = prod(self._dims) if self.modules else 1
        self._filtration: List[RowEchelon] = []

    # ---- 张量基 ----

    def decode(self, index: int) -> Tuple[int, ...]:
        return tuple((index // s) % d for s, d in zip(self._strides, self._dims))

    def encode(self, parts: Sequence[int]) -> int:
        return sum(p * s for p, s in zip(parts, self._strides))

    def cyclic_vector(self) -> SparseVector:
        """⊗ 各因子循环向量"""
        vec: Dict[Tuple[int, ...], int] = {(): 1}
        for factor in self.cyclic_factors:
            vec = {
                key + (col,): c * x
                for key, c in vec.items()
                for col, x in sorted(factor.items())
            }
        return {self.encode(key): c for key, c in vec.items() if c}

    def weight_of(self, index: int) -> Tuple[int, ...]:
        """张量基向量的权（各因子权之和，只对带权的模有意义）"""
        total: Optional[List[int]] = None
        for module, part in zip(self.modules, self.decode(index)):
            if module.weights is None:
                continue
            w = module.weights[part]
            total = list(w) if total is None else [a + b for a, b in zip(total, w)]
        return tuple(total or ())

    def apply(self, name: str, mode: int, vector: SparseVector) -> SparseVector:
        """x[mode] = Σ_p num_p^mode x^(p)（已乘公分母）"""
        out: SparseVector = {}
        for index, c in vector.items():
            parts = self.decode(index)
            for p, module in enumerate(self.modules):
                op = module.operators.get(name)
                if op is None:
                    continue
                scale = self._numerators[p] ** mode
                if not scale:
                    continue
                for row, x in op[parts[p]]:
                    target = self.encode(parts[:p] + (row,) + parts[p + 1:])
                    out[target] = out.get(target, 0) + c * x * scale
        return {k: v for k, v in out.items() if v}

    # ---- 过滤 ----

    def _close_mode_zero(self, echelon: RowEchelon, pending: List[SparseVector]):
        while pending:
            vec = pending.pop()
            for name in self.operators:
                image = self.apply(name, 0, vec)
                if image and echelon.add(image):
                    pending.append(image)

    def filtration(self, max_degree: Optional[int] = None) -> List[RowEchelon]:
        """
        F^0 ⊂ F^1 ⊂ …，直到等于全空间或连续 mode_bound + 1 步不变

        Args:
            max_degree: 额外的次数上限（None 表示直到稳定）
        """
        if self._filtration:
            return self._filtration
        layers: List[RowEchelon] = []
        first = RowEchelon(self.dim)
        start = self.cyclic_vector()
        if start:
            first.add(start)
            self._close_mode_zero(first, [start])
        layers.append(first)
        stable = 0
        d = 0
        while layers[-1].rank < self.dim and stable <= self.mode_bound:
            if max_degree is not None and d >= max_degree:
                break
            d += 1
            current = layers[-1].copy()
            pending: List[SparseVector] = []
            for mode in range(1, min(d, self.mode_bound) + 1):
                for row in layers[d - mode].rows():
                    for name in self.operators:
                        image = self.apply(name, mode, row)
                        if image and current.add(image):
                            pending.append(image)
            self._close_mode_zero(current, pending)
            stable = stable + 1 if current.rank == layers[-1].rank else 0
            layers.append(current)
        while stable and len(layers) > 1 and layers[-1].rank == layers[-2].rank:
            layers.pop()
            stable -= 1
        self._filtration = layers
        return layers

    def dims(self) -> List[int]:
        """dim F^d，d = 0, 1, …"""
        return [layer.rank for layer in self.filtration()]

    def graded_weight_dims(self) -> Dict[Tuple[int, Tuple[int, ...]], int]:
        """(d, m) -> dim F^d_m − dim F^{d−1}_m"""
        out: Dict[Tuple[int, Tuple[int, ...]], int] = {}
        previous: Dict[Tuple[int, ...], int] = {}
        for d, layer in enumerate(self.filtration()):
            counts: Dict[Tuple[int, ...], int] = {}
            for col in layer.pivot_columns():
                w = self.weight_of(col)
                counts[w] = counts.get(w, 0) + 1
            for w, count in counts.items():
                diff = count - previous.get(w, 0)
                if diff:
                    out[(d, w)] = diff
            previous = counts
        return out


def same_subspace(a: RowEchelon, b: RowEchelon) -> bool:
    """两个子空间相等：秩相同且并的秩不变"""
    if a.rank != b.rank:
        return False
    union = a.copy()
    for row in b.rows():
        if union.add(row):
            return False
    return True


def _check_z(spec: FusionSpec, Z: Sequence) -> List[Fraction]:
    if len(Z) != spec.N:
        raise DomainError(f"赋值点个数 {len(Z)} 与因子个数 {spec.N} 不符")
    values = [Fraction(z) for z in Z]
    if len(set(values)) != len(values):
        raise DomainError(f"赋值点必须两两不同: {[str(v) for v in values]}")
    return values


def fusion_tensor_product(spec: FusionSpec, Z: Sequence, margin: Optional[int] = None) -> FilteredTensorProduct:
    """阿贝尔赋值模 ⊗_p V^(n_p)_{k_p}(z_p) 的过滤张量积"""
    values = _check_z(spec, Z)
    modules = [
        EvaluationModule.abelian(n_p, k_p, z, n=spec.n)
        for (n_p, k_p), z in zip(spec.factors, values)
    ]
    operators = [f"x{a}" for a in range(1, spec.n)]
    bound = max(spec.N - 1, 0) + (settings.mode_margin if margin is None else margin)
    return FilteredTensorProduct(modules, operators, mode_bound=bound)


def default_z(count: int) -> List[Fraction]:
    """默认赋值点 0, 1, −1, 2, −2, …"""
    out: List[Fraction] = []
    k = 0
    while len(out) < count:
        out.append(Fraction(k))
        if k > 0 and len(out) < count:
            out.append(Fraction(-k))
        k += 1
    return out


def fusion_gr_character(
    spec: FusionSpec,
    Z: Optional[Sequence] = None,
    verify: bool = False,
    margin: Optional[int] = None,
) -> MPoly:
    """
    融合积（过滤张量积的相伴分次）的特征标

    Args:
        spec: 融合积 spec
        Z: 两两不同的有理赋值点，默认 default_z
        verify: 与 hilbert_character 比较
        margin: N − 1 之外的额外算子模式

    Raises:
        DomainError: 赋值点个数不符或有重复
        ConsistencyError: verify 时与 R/J 特征标不一致
    """
    if Z is None:
        Z = default_z(spec.N)
    product = fusion_tensor_product(spec, Z, margin)
    logger.info(f"计算融合积特征标: spec {spec.text()}，Z = {[str(z) for z in Z]}，维数 {product.dim}")
    nz = spec.n - 1
    terms = {
        (d, tuple(w) + (0,) * (nz - len(w))): c
        for (d, w), c in product.graded_weight_dims().items()
    }
    character = MPoly(terms, nz)
    if verify:
        expected = hilbert_character(spec)
        if expected != character:
            raise ConsistencyError(
                f"融合积特征标与 R/J 特征标不一致 (spec {spec.text()}): {character} != {expected}"
            )
    return character


def check_fusion_independence(spec: FusionSpec, z_choices: Sequence[Sequence]) -> VerificationReport:
    """每组赋值点给出的融合积特征标都等于 hilbert_character"""
    expected = hilbert_character(spec)
    reports = [
        VerificationReport.compare(
            f"fusion[{spec.text()}][Z={','.join(str(Fraction(z)) for z in Z)}]",
            expected,
            fusion_gr_character(spec, Z),
        )
        for Z in z_choices
    ]
    return VerificationReport.combine(f"fusion-independence[{spec.text()}]", reports)


def mode_bound_check(spec: FusionSpec, Z: Optional[Sequence] = None, margin: int = 2) -> VerificationReport:
    """模式上限加 margin 后过滤维数不变"""
    if Z is None:
        Z = default_z(spec.N)
    base = fusion_tensor_product(spec, Z, margin=0).dims()
    wider = fusion_tensor_product(spec, Z, margin=margin).dims()
    return VerificationReport.check(
        f"mode-bound[{spec.text()}][+{margin}]",
        base == wider,
        "" if base == wider else f"{base} != {wider}",
        base=base,
        wider=wider,
    )
