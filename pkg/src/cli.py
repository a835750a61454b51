"""
命令行入口
子命令: char, kostka, supernomial, coinv, basis, oracle, verify
退出码: 0 成功，1 校验失败或资源上限，2 用法错误
"""
import argparse
import json
import sys
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, Field

from src import __version__
from src.basisgen import build_basis, check_basis_census, format_monomial, verify_basis
from src.characters import char_fermionic, char_recursive, chi_tilde, supernomial, supernomial_table
from src.coinvariants import (
    coinv_character,
    coinv_character_alternating,
    coinv_character_w3,
    restrict_w3_character,
    verlinde_dim,
)
from src.config import settings
from src.errors import USAGE_ERRORS, ConsistencyError, FusionCharError, ParseError, ResourceLimitError
from src.kostka import check_alternating_sum, restricted_kostka, unrestricted_kostka
from src.logging_setup import configure_logging
from src.models import SweepBounds, VerificationReport
from src.oracle import coinv_quotient_character, fusion_gr_character, hilbert_character
from src.partitions import MChain, Partition, chain_to_spec, parse_spec
from src.polyring import MPoly
from src.verify import SUITES, verify_suites


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class CharacterMethod(str, Enum):
    FERMIONIC = "fermionic"
    RECURSIVE = "recursive"


class CoinvMethod(str, Enum):
    FERMIONIC = "fermionic"
    W3 = "w3"
    ALTERNATING = "alternating"


class RunConfig(BaseModel):
    """一次命令行调用的完整参数"""
    command: str = Field(..., description="子命令")
    spec: Optional[str] = Field(None, description="spec 文本 n:k,n:k,...")
    rank: Optional[int] = Field(None, description="环境秩 n")
    chain: Optional[str] = Field(None, description="分拆链 μ^(1)/…/μ^(n)")
    mu: Optional[str] = Field(None, description="分拆 μ")
    lam: Optional[str] = Field(None, description="分拆 λ 或组合")
    level: Optional[int] = Field(None, description="level k")
    label: Optional[int] = Field(None, description="标签 l")
    restricted: bool = Field(False, description="显式选择限制 Kostka")
    unrestricted: Optional[int] = Field(None, description="非限制 Kostka 的 j")
    method: Optional[str] = Field(None, description="计算方法")
    modified: bool = Field(False, description="输出修正特征标")
    check_alternating: bool = Field(False, description="检查交错和")
    verify: bool = Field(False, description="附带校验")
    z: Optional[str] = Field(None, description="赋值点 z_1,…,z_N")
    coinv: Optional[str] = Field(None, description="余不变量参数 k,l")
    suites: List[str] = Field(default_factory=lambda: ["all"], description="verify 套件")
    bounds: SweepBounds = Field(default_factory=SweepBounds, description="扫描范围")
    output_format: OutputFormat = Field(OutputFormat.JSON, description="输出格式")
    out: Optional[str] = Field(None, description="输出文件")
    max_monomials: Optional[int] = Field(None, description="单项式上限")
    threads: Optional[int] = Field(None, description="线程数")


# ---- 解析 ----

def parse_int_list(text: str) -> Tuple[int, ...]:
    """
    "3,2" -> (3, 2)；"-" 或空串为 ()

    Raises:
        ParseError: 非整数
    """
    text = (text or "").strip()
    if text in ("", "-"):
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as e:
        raise ParseError(f"无法解析整数列表 '{text}'") from e


def parse_rationals(text: str) -> List[Fraction]:
    """
    "1,-1,1/2" -> [1, −1, 1/2]

    Raises:
        ParseError: 非有理数
    """
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"无法解析有理数列表 '{text}'") from e


def _spec_of(config: RunConfig):
    if config.spec is None:
        raise ParseError(f"{config.command} 需要 --spec")
    return parse_spec(config.spec, config.rank)


def _chain_of(config: RunConfig) -> MChain:
    if config.chain is not None:
        return MChain.parse(config.chain)
    return _spec_of(config).mu_chain


def _required(value, option: str):
    if value is None:
        raise ParseError(f"缺少参数 {option}")
    return value


# ---- 子命令 ----

def _poly_result(poly: MPoly, config: RunConfig) -> Any:
    return poly.to_text() if config.output_format == OutputFormat.TEXT else poly.to_dict()


def _report_result(report: VerificationReport, config: RunConfig) -> Any:
    if config.output_format == OutputFormat.TEXT:
        return "pass" if report.passed else f"fail: {report.name} {report.details}".rstrip()
    return report.model_dump(mode="json")


def _run_char(config: RunConfig) -> Tuple[int, Any, Optional[str]]:
    chain = _chain_of(config)
    method = CharacterMethod(config.method or CharacterMethod.FERMIONIC.value)
    if method == CharacterMethod.RECURSIVE:
        character = char_recursive(chain)
    else:
        character = char_fermionic(chain)
    if config.modified:
        character = chi_tilde(chain, character)
    spec_text = chain_to_spec(chain).text() if chain.is_spec_chain() else chain.key()
    return 0, _poly_result(character, config), spec_text


def _run_kostka(config: RunConfig) -> Tuple[int, Any, Optional[str]]:
    mu = Partition(parse_int_list(_required(config.mu, "--mu")))
    if config.restricted and config.unrestricted is not None:
        raise ParseError("--restricted 与 --unrestricted 不能同时使用")
    if config.unrestricted is not None:
        return 0, _poly_result(unrestricted_kostka(config.unrestricted, mu), config), None
    k = _required(config.level, "--level")
    l = _required(config.label, "--l")
    if config.check_alternating:
        report = check_alternating_sum(k, l, mu)
        return (0 if report.passed else 1), _report_result(report, config), None
    return 0, _poly_result(restricted_kostka(k, l, mu), config), None


def _run_supernomial(config: RunConfig) -> Tuple[int, Any, Optional[str]]:
    mu = Partition(parse_int_list(_required(config.mu, "--mu")))
    if config.lam is not None:
        return 0, _poly_result(supernomial(parse_int_list(config.lam), mu), config), None
    n = _required(config.rank, "--n")
    table = supernomial_table(mu, n)
    if config.output_format == OutputFormat.TEXT:
        lines = [f"{','.join(map(str, lam))}: {value.to_text()}" for lam, value in sorted(table.items())]
        return 0, "\n".join(lines), None
    return 0, [{"lambda": list(lam), "value": value.to_dict()} for lam, value in sorted(table.items())], None


def _run_coinv(config: RunConfig) -> Tuple[int, Any, Optional[str]]:
    k = _required(config.level, "--level")
    l = _required(config.label, "--l")
    lam = Partition(parse_int_list(_required(config.lam, "--lambda")))
    method = CoinvMethod(config.method or CoinvMethod.FERMIONIC.value)
    if method == CoinvMethod.W3:
        character = coinv_character_w3(k, l, lam)
    elif method == CoinvMethod.ALTERNATING:
        character = coinv_character_alternating(k, l, lam)
    else:
        character = coinv_character(k, l, lam)
    if not config.verify:
        return 0, _poly_result(character, config), None
    base = coinv_character(k, l, lam)
    checks = [
        VerificationReport.compare("coinv-w3-restriction", base, restrict_w3_character(coinv_character_w3(k, l, lam), lam)),
        VerificationReport.compare("coinv-alternating", base, coinv_character_alternating(k, l, lam)),
    ]
    try:
        dim = verlinde_dim(lam, k, l)
        checks.append(VerificationReport.check("verlinde-dim", dim == base.evaluate_at_one(), verlinde=dim))
    except ConsistencyError as e:
        checks.append(VerificationReport.check("verlinde-dim", False, e.message))
    report = VerificationReport.combine(f"coinv[k={k},l={l},lambda={lam}]", checks)
    result = {"character": _poly_result(character, config), "verification": _report_result(report, config)}
    if config.output_format == OutputFormat.TEXT:
        result = f"{result['character']}\n{result['verification']}"
    return (0 if report.passed else 1), result, None


def _run_basis(config: RunConfig) -> Tuple[int, Any, Optional[str]]:
    spec = _spec_of(config)
    basis = build_basis(spec)
    lines = [format_monomial(mono, spec.n) for mono in basis]
    exit_code = 0
    report = None
    if config.verify:
        report = VerificationReport.combine(
            f"basis[{spec.text()}]", [check_basis_census(basis, spec), verify_basis(basis, spec)]
        )
        exit_code = 0 if report.passed else 1
    if config.output_format == OutputFormat.TEXT:
        text = "\n".join(lines)
        if report is not None:
            text += "\n" + _report_result(report, config)
        return exit_code, text, spec.text()
    result: Dict[str, Any] = {"monomials": lines, "count": len(lines)}
    if report is not None:
        result["verification"] = _report_result(report, config)
    return exit_code, result, spec.text()


def _run_oracle(config: RunConfig) -> Tuple[int, Any, Optional[str]]:
    spec = _spec_of(config)
    if config.coinv is not None:
        values = parse_int_list(config.coinv)
        if len(values) != 2:
            raise ParseError(f"--coinv 应为 k,l: '{config.coinv}'")
        character = coinv_quotient_character(spec, values[0], values[1], verify=config.verify)
    elif config.z is not None:
        character = fusion_gr_character(spec, parse_rationals(config.z), verify=config.verify)
    else:
        character = hilbert_character(spec)
    return 0, _poly_result(character, config), spec.text()


def _run_verify(config: RunConfig) -> Tuple[int, Any, Optional[str]]:
    unknown = [s for s in config.suites if s != "all" and s not in SUITES]
    if unknown:
        raise ParseError(f"未知套件: {', '.join(unknown)}")
    report = verify_suites(config.bounds, config.suites)
    exit_code = 0 if report.passed else 1
    if config.output_format == OutputFormat.TEXT:
        lines = []
        for suite in report.suites:
            line = f"{suite.suite}: {suite.status.value} ({suite.cases} cases, {len(suite.failures)} failed)"
            if suite.reason:
                line += f" [{suite.reason}]"
            lines.append(line)
            for failure in suite.failures:
                lines.append(f"  - {failure.name}: {failure.details}")
        return exit_code, "\n".join(lines), None
    return exit_code, report.model_dump(mode="json"), None


COMMANDS = {
    "char": _run_char,
    "kostka": _run_kostka,
    "supernomial": _run_supernomial,
    "coinv": _run_coinv,
    "basis": _run_basis,
    "oracle": _run_oracle,
    "verify": _run_verify,
}


def _apply_overrides(config: RunConfig):
    if config.max_monomials is not None:
        settings.max_monomials = config.max_monomials
    if config.threads is not None:
        settings.threads = config.threads


def dispatch(config: RunConfig) -> Tuple[int, str]:
    """
    执行子命令

    Returns:
        (退出码, 序列化输出)；用法错误时输出为一行诊断
    """
    _apply_overrides(config)
    try:
        exit_code, result, spec_text = COMMANDS[config.command](config)
    except USAGE_ERRORS as e:
        logger.debug(f"用法错误: {e}")
        return 2, f"error: {e.message}"
    except (ResourceLimitError, ConsistencyError) as e:
        logger.warning(f"{config.command} 失败: {e}")
        return 1, f"error: {e.message}"
    except FusionCharError as e:
        return 1, f"error: {e.message}"
    except ValueError as e:
        # 枚举取值错误等
        return 2, f"error: {e}"
    if config.output_format == OutputFormat.TEXT:
        return exit_code, result if isinstance(result, str) else json.dumps(result, ensure_ascii=False)
    envelope = {
        "command": config.command,
        "spec": spec_text,
        "version": __version__,
        "result": result,
    }
    return exit_code, json.dumps(envelope, ensure_ascii=False, indent=2)


# ---- argparse ----

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fusionchar", description="融合积分次特征标与 Kostka 多项式的精确计算")
    parser.add_argument("--version", action="version", version=f"fusionchar {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default="json")
    common.add_argument("--out", help="输出写入文件")
    common.add_argument("--threads", type=int, help="工作线程数（默认 FUSIONCHAR_THREADS）")
    common.add_argument("--max-monomials", type=int, help="每个分次片段的单项式上限")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", parents=[common], help="分次特征标")
    p.add_argument("--spec")
    p.add_argument("--n", dest="rank", type=int)
    p.add_argument("--chain", help="μ^(1)/…/μ^(n)")
    p.add_argument("--method", choices=[m.value for m in CharacterMethod])
    p.add_argument("--modified", action="store_true", help="修正特征标")

    p = sub.add_parser("kostka", parents=[common], help="Kostka 多项式")
    p.add_argument("--level", type=int)
    p.add_argument("--l", dest="label", type=int)
    p.add_argument("--mu", required=True)
    selector = p.add_mutually_exclusive_group()
    selector.add_argument("--restricted", action="store_true", help="限制 Kostka（默认）")
    selector.add_argument("--unrestricted", type=int, metavar="J", help="非限制 Kostka K_{J,μ}")
    p.add_argument("--check-alternating", action="store_true")

    p = sub.add_parser("supernomial", parents=[common], help="q-超项式系数")
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--n", dest="rank", type=int)

    p = sub.add_parser("coinv", parents=[common], help="余不变量特征标")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--l", dest="label", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--method", choices=[m.value for m in CoinvMethod])
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("basis", parents=[common], help="单项式基")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", dest="rank", type=int)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("oracle", parents=[common], help="暴力线性代数")
    p.add_argument("--spec", required=True)
    p.add_argument("--n", dest="rank", type=int)
    p.add_argument("--z", help="赋值点，例如 1,-1,1/2")
    p.add_argument("--coinv", help="k,l")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="恒等式扫描")
    p.add_argument("--suite", dest="suites", action="append", choices=["all"] + list(SUITES))
    p.add_argument("--max-rank", type=int, default=settings.sweep_max_rank)
    p.add_argument("--max-boxes", type=int, default=settings.sweep_max_boxes)
    p.add_argument("--max-level", type=int, default=settings.sweep_max_level)
    p.add_argument("--max-partition", type=int, default=settings.sweep_max_partition)
    p.add_argument("--max-factors", type=int, default=settings.sweep_max_factors)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = vars(args)
    bounds = SweepBounds(
        max_rank=values.get("max_rank", settings.sweep_max_rank),
        max_boxes=values.get("max_boxes", settings.sweep_max_boxes),
        max_level=values.get("max_level", settings.sweep_max_level),
        max_partition=values.get("max_partition", settings.sweep_max_partition),
        max_factors=values.get("max_factors", settings.sweep_max_factors),
    )
    fields = {
        key: values[key]
        for key in RunConfig.model_fields
        if key in values and values[key] is not None and key not in ("bounds", "suites")
    }
    return RunConfig(bounds=bounds, suites=values.get("suites") or ["all"], **fields)


def main(argv: Optional[Sequence[str]] = None) -> int:
    configure_logging(settings.log_level, settings.log_json_format)
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    exit_code, output = dispatch(config)
    if exit_code == 2 or (output.startswith("error: ") and exit_code != 0):
        print(output, file=sys.stderr)
        return exit_code
    if config.out:
        with open(config.out, "w", encoding="utf-8") as f:
            f.write(output + "\n")
    else:
        print(output)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
