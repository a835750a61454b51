"""
余不变量商
W / (x_1[0]·W + x_1[1]^{k−l+1}·W)，只保留权 2m_1 = |μ|−l（n=2）或 2m_1+m_2 = |λ|−l（n=3）
"""
from typing import Tuple

from loguru import logger

from src.coinvariants import CoinvariantIdealSpec, coinv_character_w3
from src.errors import ConsistencyError, DomainError
from src.kostka import restricted_kostka
from src.partitions import FusionSpec, Partition
from src.polyring import MPoly

from .graded import GradedVectorSpace, VarIndex, graded_pieces
from .ideal import quotient_piece


def _coinvariant_shape(spec: FusionSpec) -> Partition:
    # n=2 的 W^(2)[μ] 或 n=3 的 W^(3)[λ]（所有因子 n_p = n）
    if spec.n not in (2, 3):
        raise DomainError(f"余不变量商只对 n = 2, 3 定义: n = {spec.n}")
    if any(n_p != spec.n for n_p, _ in spec.factors):
        raise DomainError(f"spec {spec.text()} 的因子必须都是 n_p = {spec.n}")
    return spec.mu_chain.top


def _killed(mono: Tuple[VarIndex, ...], nilpotency: int, has_mode_one: bool) -> bool:
    # 能被 x_1[0] 或 x_1[1]^{k−l+1} 整除的单项式
    if VarIndex(1, 0) in mono:
        return True
    return has_mode_one and sum(1 for var in mono if var == VarIndex(1, 1)) >= nilpotency


def coinv_quotient_space(spec: FusionSpec, k: int, l: int) -> GradedVectorSpace:
    """余不变量商的所有保留分次片段"""
    ideal = CoinvariantIdealSpec.create(k, l)
    shape = _coinvariant_shape(spec)
    # N_1 < 2 时 x_1[1] 不是环的变量
    has_mode_one = spec.N_a(1) >= 2
    space = GradedVectorSpace(spec)
    for d, m in graded_pieces(spec):
        if not ideal.retained_weight(spec.n, m, shape.size):
            continue
        piece = quotient_piece(spec, d, m)
        for col, mono in enumerate(piece.basis):
            if piece.relations.is_full:
                break
            if _killed(mono, ideal.nilpotency, has_mode_one):
                piece.relations.add({col: 1})
        space.add_piece(piece)
    return space


def coinv_quotient_character(spec: FusionSpec, k: int, l: int, verify: bool = False) -> MPoly:
    """
    余不变量商的分次特征标

    Args:
        spec: 因子都为 n_p = 2 的 spec（W^(2)[μ]）或都为 n_p = 3 的 spec（W^(3)[λ]）
        k: level
        l: 标签 0 ≤ l ≤ k
        verify: n=2 时与 z^{(|μ|−l)/2} K^(k)_{l,μ} 比较，n=3 时与 coinv_character_w3 比较

    Raises:
        DomainError: level/标签越界，或 spec 不是上述形式
        ConsistencyError: verify 时不一致
    """
    space = coinv_quotient_space(spec, k, l)
    character = space.character()
    logger.info(f"余不变量商: spec {spec.text()}，k={k}, l={l}，维数 {space.total_dim}")
    if verify:
        expected = expected_coinv_character(spec, k, l)
        if expected != character:
            raise ConsistencyError(
                f"余不变量商与公式不一致 (spec {spec.text()}, k={k}, l={l}): {character} != {expected}"
            )
    return character


def expected_coinv_character(spec: FusionSpec, k: int, l: int) -> MPoly:
    """公式一侧：n=2 为 z^{(|μ|−l)/2} K^(k)_{l,μ}(q)，n=3 为 coinv_character_w3"""
    shape = _coinvariant_shape(spec)
    if spec.n == 3:
        return coinv_character_w3(k, l, shape)
    if (shape.size - l) % 2 or shape.size < l:
        return MPoly.zero(1)
    kostka = restricted_kostka(k, l, shape)
    return kostka.with_num_z_vars(1).shift_monomial(0, ((shape.size - l) // 2,))
