"""
verify 套件
每个套件把扫描范围内的恒等式展开为独立用例，在线程池中执行；失败只报告，不抛异常
"""
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from src.basisgen import build_basis, check_basis_census, verify_basis
from src.characters import (
    char_fermionic,
    char_recursive,
    check_modified_recursion,
    exact_sequence_char_identity,
)
from src.coinvariants import (
    check_verlinde_kostka,
    coinv_character,
    coinv_character_alternating,
    coinv_character_w3,
    restrict_w3_character,
    verlinde_dim,
)
from src.config import settings
from src.kostka import check_alternating_sum, kostka_decomposition
from src.models import SuiteReport, SuiteResult, SuiteStatus, SweepBounds, VerificationReport
from src.oracle import (
    CyclicModuleKind,
    EvaluationModule,
    admissible_pivots,
    cyclic_filtration_check,
    check_fusion_independence,
    coinv_quotient_character,
    exact_sequence_check,
    expected_coinv_character,
    hilbert_character,
    mode_bound_check,
    reducible_restriction_check,
)
from src.partitions import (
    FusionSpec,
    Partition,
    module_dimension,
    partitions_inside,
    spec_from_chain_top,
)

from .sweeps import level_partitions, sweep_specs, z_choices

Case = Callable[[], VerificationReport]
# 套件构造器返回 (用例列表, 跳过原因)
SuiteBuilder = Callable[[SweepBounds], Tuple[List[Case], str]]

# 余不变量扫描的 |λ| 上限（n=3 的商在更大的 λ 上过慢）
COINV_MAX_SIZE = 6


def _structural(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for m, k in product(range(1, 6), range(0, 6)):
        def _dim(m=m, k=k):
            actual = EvaluationModule.abelian(m, k).dim
            expected = module_dimension(m, k)
            return VerificationReport.check(
                f"dimension[m={m},k={k}]", actual == expected, f"{actual} != {expected}" if actual != expected else ""
            )
        cases.append(_dim)
    for size in range(bounds.max_partition + 2):
        for mu in level_partitions(size, size, size):
            cases.append(lambda mu=mu: _peel_off(mu))
    for spec in sweep_specs(2, bounds.max_boxes):
        cases.append(lambda spec=spec: _palindrome(spec))
    for r in range(4):
        cases.append(lambda r=r: _relations(EvaluationModule.sl2_irrep(r), f"relations[sl2,r={r}]"))
        cases.append(lambda r=r: _relations(EvaluationModule.sl2_reducible(r), f"relations[W,r={r}]"))
        cases.append(lambda r=r: _relations(EvaluationModule.sl3_symmetric(r), f"relations[sl3,r={r}]"))
        cases.append(lambda r=r: _relations(EvaluationModule.abelian(3, r), f"relations[abelian,3:{r}]"))
    return cases, ""


def _peel_off(mu: Partition) -> VerificationReport:
    # 分解已在内部检查余项为零；这里再核对 q=1 时的维数
    decomposition = kostka_decomposition(mu)
    total = sum(
        value.evaluate_at_one() * (j + 1) for j, value in decomposition.items()
    )
    expected = spec_from_chain_top(mu, 2).dimension()
    return VerificationReport.check(
        f"peel-off[mu={mu}]", total == expected, f"{total} != {expected}" if total != expected else ""
    )


def _palindrome(spec: FusionSpec) -> VerificationReport:
    character = char_fermionic(spec.mu_chain)
    values = [character.coefficient_of(0, e).evaluate_at_one() for e in range(character.z_degree(0) + 1)]
    return VerificationReport.check(
        f"palindrome[{spec.text()}]", values == values[::-1], str(values), values=values
    )


def _relations(module: EvaluationModule, name: str) -> VerificationReport:
    return VerificationReport.check(name, module.check_relations())


def _characters(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    specs = sweep_specs(min(bounds.max_rank, 3), bounds.max_boxes)
    if bounds.max_rank >= 4:
        specs += sweep_specs(4, min(bounds.max_boxes, 4), min_rank=4)
    for spec in specs:
        cases.append(lambda spec=spec: _triple(spec))
        cases.append(lambda spec=spec: exact_sequence_char_identity(spec.mu_chain))
        cases.append(lambda spec=spec: check_modified_recursion(spec.mu_chain))
    return cases, ""


def _triple(spec: FusionSpec) -> VerificationReport:
    chain = spec.mu_chain
    fermionic = char_fermionic(chain)
    return VerificationReport.combine(
        f"triple[{spec.text()}]",
        [
            VerificationReport.compare(f"recursive[{spec.text()}]", fermionic, char_recursive(chain)),
            VerificationReport.compare(f"hilbert[{spec.text()}]", fermionic, hilbert_character(spec)),
            VerificationReport.check(
                f"dimension[{spec.text()}]", fermionic.evaluate_at_one() == spec.dimension()
            ),
        ],
    )


def fusion_specs(bounds: SweepBounds) -> List[FusionSpec]:
    """
    融合积扫描的 spec：至多 max_factors 个因子、每个 k_p <= 2

    不受 max_boxes 限制（Σ k_p 可达 2 * max_factors），只受 sweep_boxes_cap 约束
    """
    boxes = min(2 * bounds.max_factors, settings.sweep_boxes_cap)
    return sweep_specs(min(bounds.max_rank, 3), boxes, bounds.max_factors, max_k=2)


def _fusion(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for spec in fusion_specs(bounds):
        cases.append(lambda spec=spec: check_fusion_independence(spec, z_choices(spec.N)))
        cases.append(lambda spec=spec: mode_bound_check(spec))
    return cases, ""


def _exact_sequence(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for spec in sweep_specs(min(bounds.max_rank, 3), bounds.max_boxes):
        for p in admissible_pivots(spec):
            cases.append(lambda spec=spec, p=p: exact_sequence_check(spec, p))
    return cases, ""


def _coinv_sl2(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for k in range(1, bounds.max_level + 1):
        for mu in partitions_inside((3, 3, 3)):
            if len(mu) > k or not mu:
                continue
            spec = spec_from_chain_top(mu, 2)
            for l in range(k + 1):
                cases.append(lambda spec=spec, k=k, l=l: _quotient_report(spec, k, l))
    return cases, ""


def _coinv_sl3(bounds: SweepBounds) -> Tuple[List[Case], str]:
    if bounds.max_rank < 3:
        return [], "max_rank < 3"
    cases: List[Case] = []
    for k in range(1, bounds.max_level + 1):
        for lam in level_partitions(k, min(COINV_MAX_SIZE, bounds.max_partition), 1):
            spec = spec_from_chain_top(lam, 3)
            for l in range(k + 1):
                cases.append(lambda spec=spec, k=k, l=l: _quotient_report(spec, k, l))
                cases.append(lambda lam=lam, k=k, l=l: _restriction(k, l, lam))
    return cases, ""


def _quotient_report(spec: FusionSpec, k: int, l: int) -> VerificationReport:
    return VerificationReport.compare(
        f"coinv-quotient[{spec.text()}][k={k},l={l}]",
        expected_coinv_character(spec, k, l),
        coinv_quotient_character(spec, k, l),
    )


def _restriction(k: int, l: int, lam: Partition) -> VerificationReport:
    return VerificationReport.compare(
        f"coinv-restriction[k={k},l={l},lambda={lam}]",
        coinv_character(k, l, lam),
        restrict_w3_character(coinv_character_w3(k, l, lam), lam),
    )


def _verlinde(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for k in range(1, bounds.max_level + 1):
        for lam in level_partitions(k, bounds.max_partition):
            cases.append(lambda lam=lam, k=k: check_verlinde_kostka(lam, k))
            for l in range(k + 1):
                cases.append(lambda lam=lam, k=k, l=l: _verlinde_dim(lam, k, l))
    return cases, ""


def _verlinde_dim(lam: Partition, k: int, l: int) -> VerificationReport:
    value = verlinde_dim(lam, k, l)
    specialized = coinv_character(k, l, lam).evaluate_at_one()
    return VerificationReport.check(
        f"verlinde-dim[k={k},l={l},lambda={lam}]",
        value == specialized,
        f"{value} != {specialized}" if value != specialized else "",
        verlinde=value,
        character=specialized,
    )


def _alternating(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for k in range(1, bounds.max_level + 1):
        for mu in level_partitions(k, bounds.max_partition + 1):
            for l in range(k + 1):
                cases.append(lambda mu=mu, k=k, l=l: check_alternating_sum(k, l, mu))
        for lam in level_partitions(k, min(COINV_MAX_SIZE, bounds.max_partition)):
            for l in range(k + 1):
                cases.append(lambda lam=lam, k=k, l=l: VerificationReport.compare(
                    f"coinv-alternating[k={k},l={l},lambda={lam}]",
                    coinv_character(k, l, lam),
                    coinv_character_alternating(k, l, lam),
                ))
    return cases, ""


def _cyclic_filtration(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for count in range(1, 4):
        for ranks in product(range(1, 4), repeat=count):
            if list(ranks) != sorted(ranks):
                continue
            for Z in (list(range(count)), [0] * count):
                cases.append(lambda ranks=ranks, Z=Z: cyclic_filtration_check(CyclicModuleKind.SL2, ranks, Z))
    if bounds.max_rank < 3:
        return cases, ""
    for count in range(1, 3):
        for ranks in product(range(1, 3), repeat=count):
            if list(ranks) != sorted(ranks):
                continue
            for Z in (list(range(count)), [0] * count):
                cases.append(lambda ranks=ranks, Z=Z: cyclic_filtration_check(CyclicModuleKind.SL3, ranks, Z))
                cases.append(lambda ranks=ranks, Z=Z: reducible_restriction_check(ranks, Z))
    return cases, ""


def _basis(bounds: SweepBounds) -> Tuple[List[Case], str]:
    cases: List[Case] = []
    for spec in sweep_specs(min(bounds.max_rank, 3), bounds.max_boxes):
        cases.append(lambda spec=spec: _basis_report(spec))
    return cases, ""


def _basis_report(spec: FusionSpec) -> VerificationReport:
    basis = build_basis(spec)
    return VerificationReport.combine(
        f"basis[{spec.text()}]",
        [
            VerificationReport.check(
                f"basis-size[{spec.text()}]", len(basis) == spec.dimension(), size=len(basis)
            ),
            check_basis_census(basis, spec),
            verify_basis(basis, spec),
        ],
    )


SUITES: Dict[str, SuiteBuilder] = {
    "structural": _structural,
    "characters": _characters,
    "fusion": _fusion,
    "exact-sequence": _exact_sequence,
    "coinv-sl2": _coinv_sl2,
    "coinv-sl3": _coinv_sl3,
    "verlinde": _verlinde,
    "alternating": _alternating,
    "cyclic-filtration": _cyclic_filtration,
    "basis": _basis,
}


def _run_case(case: Case) -> VerificationReport:
    try:
        return case()
    except Exception as e:
        name = f"case{case.__defaults__ or ()}"
        return VerificationReport(name=name, passed=False, details=f"{type(e).__name__}: {e}")


def clamp_bounds(bounds: SweepBounds) -> SweepBounds:
    """Σ k_p 上限不超过 settings.sweep_boxes_cap"""
    cap = settings.sweep_boxes_cap
    if bounds.max_boxes <= cap:
        return bounds
    logger.warning(f"max_boxes = {bounds.max_boxes} 超过上限 {cap}，已截断")
    return bounds.model_copy(update={"max_boxes": cap})


def run_suite(name: str, bounds: SweepBounds, workers: Optional[int] = None) -> SuiteResult:
    """运行单个套件"""
    cases, skip_reason = SUITES[name](bounds)
    if not cases:
        return SuiteResult(suite=name, status=SuiteStatus.SKIPPED, reason=skip_reason or "无用例")
    workers = workers or settings.worker_count()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(_run_case, cases))
    failures = [r for r in reports if not r.passed]
    for report in failures:
        logger.warning(f"[{name}] 失败: {report.name} {report.details}")
    status = SuiteStatus.FAILED if failures else SuiteStatus.PASSED
    logger.info(f"[{name}] {len(reports)} 个用例，{len(failures)} 个失败")
    return SuiteResult(suite=name, status=status, cases=len(reports), failures=failures, reason=skip_reason)


def verify_suites(bounds: Optional[SweepBounds] = None, suites: Optional[Sequence[str]] = None) -> SuiteReport:
    """
    在给定范围内运行各 verify 套件

    Args:
        bounds: 扫描范围，默认取 settings 中的 sweep_* 参数
        suites: 套件名列表，None 或 ["all"] 表示全部
    """
    if bounds is None:
        bounds = SweepBounds(
            max_rank=settings.sweep_max_rank,
            max_boxes=settings.sweep_max_boxes,
            max_level=settings.sweep_max_level,
            max_partition=settings.sweep_max_partition,
            max_factors=settings.sweep_max_factors,
        )
    bounds = clamp_bounds(bounds)
    names = list(SUITES) if not suites or "all" in suites else list(suites)
    report = SuiteReport(bounds=bounds)
    for name in names:
        report.suites.append(run_suite(name, bounds))
    return report
