"""
交错和恒等式与分支系数 X_{jλ}
"""
from typing import Callable, Iterator, Sequence, Tuple

from src.characters import f_factor
from src.errors import ShapeError
from src.models import VerificationReport
from src.partitions import Partition, partitions_inside
from src.polyring import MPoly

from .restricted import restricted_kostka, validate_level_label
from .unrestricted import unrestricted_kostka


def alternating_terms(k: int, l: int, size: int) -> Iterator[Tuple[int, int, int]]:
    """
    交错和的各项 (符号, q 指数, 指标 j)

    i ≥ 0: +q^{(k+2)i²+(l+1)i} [j = 2(k+2)i + l]
    i > 0: −q^{(k+2)i²−(l+1)i} [j = 2(k+2)i − l − 2]
    两个指标都超过 size 后截断。
    """
    i = 0
    while True:
        plus_j = 2 * (k + 2) * i + l
        minus_j = 2 * (k + 2) * i - l - 2
        if i > 0 and plus_j > size and minus_j > size:
            return
        if i == 0 and plus_j > size:
            return
        if plus_j <= size:
            yield 1, (k + 2) * i * i + (l + 1) * i, plus_j
        if i > 0 and 0 <= minus_j <= size:
            yield -1, (k + 2) * i * i - (l + 1) * i, minus_j
        i += 1


def _alternating_sum(k: int, l: int, size: int, term: Callable[[int], MPoly], nz: int) -> MPoly:
    total = MPoly.zero(nz)
    for sign, q_exp, j in alternating_terms(k, l, size):
        value = term(j)
        if value.is_zero():
            continue
        total = total + value.shift_monomial(q_exp).scale(sign)
    return total


def alternating_kostka(k: int, l: int, mu: Sequence[int]) -> MPoly:
    """交错和一侧：Σ ± q^{…} K_{j,μ}(q)"""
    mu = validate_level_label(k, l, mu)
    return _alternating_sum(k, l, mu.size, lambda j: unrestricted_kostka(j, mu), 0)


def check_alternating_sum(k: int, l: int, mu: Sequence[int]) -> VerificationReport:
    """
    检查 K^(k)_{l,μ} 等于非限制 Kostka 多项式的交错和
    """
    mu = validate_level_label(k, l, mu)
    return VerificationReport.compare(
        f"alternating-sum[k={k},l={l},mu={mu}]",
        restricted_kostka(k, l, mu),
        alternating_kostka(k, l, mu),
    )


def x_coefficient(j: int, lam: Sequence[int], k_level: int) -> MPoly:
    """
    X_{jλ}(q,z) = Σ_{μ⊂λ} z^{|μ|} F_{λ,μ}(q) K_{j,μ}(q)

    K_{j,μ} 只在 j <= |μ| 且奇偶相同时非零，所以 j > |λ| 时为 0。

    Raises:
        ShapeError: λ 的行数超过 k_level
    """
    lam = Partition(lam)
    if len(lam) > k_level:
        raise ShapeError(f"λ = {lam} 的行数超过 level {k_level}")
    total = MPoly.zero(1)
    if j < 0 or j > lam.size:
        return total
    for mu in partitions_inside(lam):
        if j > mu.size or (mu.size - j) % 2:
            continue
        kostka = unrestricted_kostka(j, mu)
        if kostka.is_zero():
            continue
        f = f_factor(lam, mu, k_level)
        if f.is_zero():
            continue
        total = total + (f * kostka).with_num_z_vars(1).shift_monomial(0, (mu.size,))
    return total


def alternating_x_sum(k: int, l: int, lam: Sequence[int]) -> MPoly:
    """Σ ± q^{…} X_{j,λ}(q,z)"""
    lam = validate_level_label(k, l, lam)
    return _alternating_sum(k, l, lam.size, lambda j: x_coefficient(j, lam, k), 1)
