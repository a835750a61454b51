"""
换循环向量的过滤等式
G^i：整个代数作用于 w_0 = ⊗ v_a；F^i：子代数作用于 w = ⊗ exp(e) v_a
"""
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from loguru import logger

from src.errors import DomainError
from src.models import VerificationReport

from .evaluation import SL2_OPERATORS, SL3_OPERATORS, EvaluationModule
from .filtered import FilteredTensorProduct, same_subspace
from .linalg import RowEchelon


class CyclicModuleKind(str, Enum):
    """过滤等式的两种情形"""
    SL2 = "sl2"  # G: sl2[t]，F: h[t]，w = ⊗ exp(e[0]) v
    SL3 = "sl3"  # G: sl3[t]，F: sl2[t] = <e23, e32, h23>[t]，w = ⊗ exp(e13[0]) v

SUBALGEBRA_OPERATORS = {
    CyclicModuleKind.SL2: ("h",),
    CyclicModuleKind.SL3: ("e23", "e32", "h23"),
}


def _values(ranks: Sequence[int], Z: Sequence) -> List[Fraction]:
    if len(Z) != len(ranks):
        raise DomainError(f"赋值点个数 {len(Z)} 与模的个数 {len(ranks)} 不符")
    return [Fraction(z) for z in Z]


def _padded(layers: List[RowEchelon], length: int) -> List[RowEchelon]:
    return layers + [layers[-1]] * (length - len(layers))


def cyclic_filtrations(kind: CyclicModuleKind, ranks: Sequence[int], Z: Sequence, margin: int = 0):
    """
    构造 (G, F) 两个过滤张量积

    Args:
        kind: sl2 或 sl3
        ranks: 各不可约表示的最高权 r（sl2 为 V_r，sl3 为 S^r(C^3)）
        Z: 有理赋值点（可以重复）
    """
    kind = CyclicModuleKind(kind)
    values = _values(ranks, Z)
    bound = max(len(ranks) - 1, 0) + margin
    if kind == CyclicModuleKind.SL2:
        modules = [EvaluationModule.sl2_irrep(r, z) for r, z in zip(ranks, values)]
        shift = "e"
        full_ops = SL2_OPERATORS
    else:
        modules = [EvaluationModule.sl3_symmetric(r, z) for r, z in zip(ranks, values)]
        shift = "e13"
        full_ops = SL3_OPERATORS
    g = FilteredTensorProduct(modules, full_ops, mode_bound=bound)
    shifted = [module.exponential(shift) for module in modules]
    f = FilteredTensorProduct(modules, SUBALGEBRA_OPERATORS[kind], cyclic=shifted, mode_bound=bound)
    return g, f


def cyclic_filtration_check(kind: CyclicModuleKind, ranks: Sequence[int], Z: Sequence, margin: int = 0) -> VerificationReport:
    """
    F^i = G^i 对所有 i 成立（作为子空间，并比较维数）

    Returns:
        报告的 data 含两侧的维数序列
    """
    g, f = cyclic_filtrations(kind, ranks, Z, margin)
    g_layers, f_layers = g.filtration(), f.filtration()
    length = max(len(g_layers), len(f_layers))
    g_layers, f_layers = _padded(g_layers, length), _padded(f_layers, length)
    mismatch: Optional[int] = None
    for i, (gl, fl) in enumerate(zip(g_layers, f_layers)):
        if not same_subspace(gl, fl):
            mismatch = i
            break
    name = f"cyclic-filtration[{CyclicModuleKind(kind).value}][r={','.join(map(str, ranks))}][Z={','.join(str(Fraction(z)) for z in Z)}]"
    g_dims = [layer.rank for layer in g_layers]
    f_dims = [layer.rank for layer in f_layers]
    if mismatch is not None:
        logger.warning(f"过滤等式失败: {name} 在 i = {mismatch}")
    return VerificationReport.check(
        name,
        mismatch is None,
        "" if mismatch is None else f"F^{mismatch} != G^{mismatch}",
        g_dims=g_dims,
        f_dims=f_dims,
    )


def reducible_restriction_check(ranks: Sequence[int], Z: Sequence, margin: int = 0) -> VerificationReport:
    """
    sl2[t] 作用于 ⊗ W_r（循环向量 w_r = Σ_j u_1^{r−j} u_3^j）的过滤，
    与 sl3[t] 作用于 ⊗ S^r(C^3)（循环向量 ⊗ u_3^r）的过滤维数逐项相等
    """
    values = _values(ranks, Z)
    bound = max(len(ranks) - 1, 0) + margin
    reducible = FilteredTensorProduct(
        [EvaluationModule.sl2_reducible(r, z) for r, z in zip(ranks, values)],
        SL2_OPERATORS,
        mode_bound=bound,
    )
    symmetric = FilteredTensorProduct(
        [EvaluationModule.sl3_symmetric(r, z) for r, z in zip(ranks, values)],
        SL3_OPERATORS,
        mode_bound=bound,
    )
    sl2_dims, sl3_dims = reducible.dims(), symmetric.dims()
    length = max(len(sl2_dims), len(sl3_dims))
    sl2_dims = sl2_dims + [sl2_dims[-1]] * (length - len(sl2_dims))
    sl3_dims = sl3_dims + [sl3_dims[-1]] * (length - len(sl3_dims))
    return VerificationReport.check(
        f"reducible-restriction[r={','.join(map(str, ranks))}][Z={','.join(str(v) for v in values)}]",
        sl2_dims == sl3_dims,
        "" if sl2_dims == sl3_dims else f"{sl2_dims} != {sl3_dims}",
        sl2_dims=sl2_dims,
        sl3_dims=sl3_dims,
    )
