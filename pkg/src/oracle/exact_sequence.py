"""
正合列 0 → W′ → W → W″ → 0 的检查
W′: n_p → n_p − 1（次数平移 m_a），W″: k_p → k_p − 1（权 m_a 减一），a = n_p − 1
"""
from typing import List

from loguru import logger

from src.errors import DomainError
from src.models import VerificationReport
from src.partitions import FusionSpec

from .ideal import hilbert_character


def admissible_pivots(spec: FusionSpec) -> List[int]:
    """满足 n_p ≥ 2、k_p > 0，且 n_s ≥ n_p 时 k_s ≤ k_p 的因子下标"""
    pivots = []
    for p, (n_p, k_p) in enumerate(spec.factors):
        if n_p < 2 or k_p <= 0:
            continue
        if all(k_s <= k_p for n_s, k_s in spec.factors if n_s >= n_p):
            pivots.append(p)
    return pivots


def exact_sequence_check(spec: FusionSpec, p: int) -> VerificationReport:
    """
    ch W = ch W′(z_a → q z_a) + z_a · ch W″，且 dim W = dim W′ + dim W″

    三个特征标都由 R/J 的线性代数独立计算。

    Raises:
        DomainError: p 不是可用的枢轴
    """
    if not 0 <= p < spec.N:
        raise DomainError(f"因子下标 {p} 超出范围 [0, {spec.N})")
    if p not in admissible_pivots(spec):
        raise DomainError(f"因子 {spec.factors[p]} 不满足枢轴条件（spec {spec.text()}）")
    n_p, k_p = spec.factors[p]
    a = n_p - 1
    sub_spec = spec.replace_factor(p, (n_p - 1, k_p))
    quot_spec = spec.replace_factor(p, (n_p, k_p - 1))
    whole = hilbert_character(spec)
    sub = hilbert_character(sub_spec)
    quot = hilbert_character(quot_spec)
    nz = spec.n - 1
    rhs = sub.shift_z(a - 1, 1) + quot.shift_monomial(0, [1 if i == a - 1 else 0 for i in range(nz)])
    data = {
        "pivot": p,
        "dim": whole.evaluate_at_one(),
        "dim_sub": sub.evaluate_at_one(),
        "dim_quotient": quot.evaluate_at_one(),
        "sub_spec": sub_spec.text(),
        "quotient_spec": quot_spec.text(),
    }
    name = f"exact-sequence[{spec.text()}][p={p}]"
    report = VerificationReport.compare(name, whole, rhs, data=data)
    if report.passed and data["dim"] != data["dim_sub"] + data["dim_quotient"]:
        report = VerificationReport(name=name, passed=False, details="维数等式不成立", data=data)
    if not report.passed:
        logger.warning(f"正合列检查失败: {name} {report.details}")
    return report
