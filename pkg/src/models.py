"""
校验报告数据模型
所有恒等式检查都返回 VerificationReport，失败时不抛异常
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from src.polyring import MPoly


class SuiteStatus(str, Enum):
    """套件状态"""
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


class VerificationReport(BaseModel):
    """单个恒等式的检查结果"""
    name: str = Field(..., description="恒等式名称")
    passed: bool = Field(..., description="是否通过")
    details: str = Field("", description="说明（失败时指出位置）")
    expected: Optional[Dict[str, Any]] = Field(None, description="期望多项式（JSON）")
    actual: Optional[Dict[str, Any]] = Field(None, description="实际多项式（JSON）")
    discrepancy: Optional[Dict[str, Any]] = Field(None, description="expected − actual（JSON）")
    data: Dict[str, Any] = Field(default_factory=dict, description="附加数据（维数等）")

    @classmethod
    def compare(
        cls,
        name: str,
        expected: MPoly,
        actual: MPoly,
        details: str = "",
        data: Optional[Dict[str, Any]] = None,
    ) -> "VerificationReport":
        """比较两个多项式，生成报告"""
        if expected.num_z_vars != actual.num_z_vars:
            return cls(
                name=name,
                passed=False,
                details=f"变量个数不一致: {expected.num_z_vars} != {actual.num_z_vars}. {details}".strip(),
                expected=expected.to_dict(),
                actual=actual.to_dict(),
                data=data or {},
            )
        diff = expected - actual
        return cls(
            name=name,
            passed=diff.is_zero(),
            details=details,
            expected=expected.to_dict(),
            actual=actual.to_dict(),
            discrepancy=None if diff.is_zero() else diff.to_dict(),
            data=data or {},
        )

    @classmethod
    def check(cls, name: str, condition: bool, details: str = "", **data: Any) -> "VerificationReport":
        """布尔条件检查"""
        return cls(name=name, passed=bool(condition), details=details, data=data)

    @classmethod
    def combine(cls, name: str, reports: List["VerificationReport"]) -> "VerificationReport":
        """合并多个子报告：全部通过才算通过，说明取第一个失败"""
        failed = [r for r in reports if not r.passed]
        if not failed:
            return cls(name=name, passed=True, data={"checks": len(reports)})
        first = failed[0]
        return cls(
            name=name,
            passed=False,
            details=f"{first.name}: {first.details}".strip(),
            expected=first.expected,
            actual=first.actual,
            discrepancy=first.discrepancy,
            data={"checks": len(reports), "failed": len(failed)},
        )


class SuiteResult(BaseModel):
    """一个 verify 套件的汇总"""
    suite: str = Field(..., description="套件名")
    status: SuiteStatus = Field(..., description="状态")
    cases: int = Field(0, description="检查的用例数")
    failures: List[VerificationReport] = Field(default_factory=list, description="失败的用例")
    reason: str = Field("", description="跳过原因")


class SweepBounds(BaseModel):
    """verify 扫描范围"""
    max_rank: int = Field(3, description="最大秩 n")
    max_boxes: int = Field(6, description="Σ k_p 上限")
    max_level: int = Field(3, description="最大 level k")
    max_partition: int = Field(7, description="Kostka/余不变量扫描的 |λ| 上限")
    max_factors: int = Field(4, description="过滤张量积扫描的因子数上限")

    class Config:
        frozen = True


class SuiteReport(BaseModel):
    """verify 总报告"""
    bounds: SweepBounds = Field(..., description="扫描范围")
    suites: List[SuiteResult] = Field(default_factory=list, description="各套件结果")

    @property
    def passed(self) -> bool:
        return all(s.status != SuiteStatus.FAILED for s in self.suites)
